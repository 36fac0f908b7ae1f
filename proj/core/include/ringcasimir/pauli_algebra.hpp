// Copyright 2026 The ringcasimir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Weighted Pauli-string representation of Hermitian qubit operators.
//
// Letter k of a string (k = 0 leftmost) acts on the tensor slot with weight
// 2^(n-1-k) in the basis index, matching operator_kernel's ordering. In the
// bit-mask form a string is i^{#Y} X^x Z^z.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir::pauli {

inline constexpr double kDefaultDropTolerance = 1e-12;
inline constexpr int kMaxStringLength = 62;
inline constexpr int kMaxDenseDecomposeQubits = 12;
inline constexpr int kMaxDiagonalQubits = 24;

enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Letter l);

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Letter> letters);

  /// Parses "IXYZ"-style text. Throws ArgumentError on other symbols.
  static PauliString from_string(std::string_view text);
  static PauliString identity(int qubits);
  static PauliString from_masks(int qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  int size() const { return static_cast<int>(letters_.size()); }
  Letter operator[](int k) const { return letters_[static_cast<std::size_t>(k)]; }
  const std::vector<Letter>& letters() const { return letters_; }

  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  int y_count() const;
  bool is_diagonal() const { return x_mask_ == 0; }
  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }

  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

/// a*b = phase * string.
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Dense 2^n x 2^n matrix of a single string.
ComplexMatrix to_matrix(const PauliString& p);

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real-weighted sum of distinct, equal-length Pauli strings. Terms are kept in
/// canonical order: descending |coefficient|, ties broken lexicographically.
class PauliSum {
 public:
  PauliSum() = default;
  /// Throws ArgumentError on length mismatch or a repeated string.
  PauliSum(int qubits, std::vector<PauliTerm> terms);

  int qubits() const { return qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_diagonal() const;
  double identity_coefficient() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  int qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Sums duplicate strings and drops |c| <= drop_tol.
PauliSum combine(int qubits, std::span<const PauliTerm> terms,
                 double drop_tol = kDefaultDropTolerance);

/// Builds a PauliSum from complex coefficients, which must be real to within
/// 1e-10 (Hermitian operator). Throws ValidationError otherwise.
PauliSum from_complex(int qubits, const std::map<PauliString, Complex>& coefficients,
                      double drop_tol = kDefaultDropTolerance);

/// c_P = Tr(P h) / 2^n for every string; |c_P| <= drop_tol omitted.
PauliSum decompose(const ComplexMatrix& h, double drop_tol = kDefaultDropTolerance);

/// {I, Z}-only decomposition of diag(d) via a Walsh-Hadamard transform.
PauliSum decompose_diagonal(std::span<const double> diagonal,
                            double drop_tol = kDefaultDropTolerance);

ComplexMatrix reconstruct(const PauliSum& p);

/// Diagonal of a {I, Z}-only sum. Throws ArgumentError if any term has X or Y.
std::vector<double> reconstruct_diagonal(const PauliSum& p);

/// <state| p |state>, evaluated term by term. `state` must have dimension
/// 2^qubits and unit norm within 1e-8.
double expectation(const PauliSum& p, const ComplexVector& state);

/// <state| P |state> for one string, no normalization check.
Complex string_expectation(const PauliString& s, const ComplexVector& state);

/// p |state>.
ComplexVector apply(const PauliSum& p, const ComplexVector& state);

/// Text form:
///   # ringcasimir pauli v1
///   qubits <n>
///   <coefficient> <letters>
std::string serialize(const PauliSum& p);

/// Inverse of serialize. Throws ParseError with the offending line number.
PauliSum parse(std::string_view text);

}  // namespace ringcasimir::pauli
