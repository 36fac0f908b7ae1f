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

#include "ringcasimir/pauli_algebra.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "ringcasimir/errors.hpp"

namespace ringcasimir::pauli {
namespace {

// i^k for integer k.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double parity_sign(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1.0 : 1.0; }

int log2_exact(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) return -1;
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

template <typename T>
void walsh_hadamard(std::vector<T>& v) {
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += 2 * half) {
      for (std::size_t k = block; k < block + half; ++k) {
        const T a = v[k];
        const T b = v[k + half];
        v[k] = a + b;
        v[k + half] = a - b;
      }
    }
  }
}

void canonical_sort(std::vector<PauliTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    const double ma = std::abs(a.coefficient);
    const double mb = std::abs(b.coefficient);
    if (ma != mb) return ma > mb;
    return a.string < b.string;
  });
}

}  // namespace

char to_char(Letter l) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(l)];
}

PauliString::PauliString(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ArgumentError("Pauli string must have at least one letter");
  if (size() > kMaxStringLength) {
    throw ArgumentError("Pauli string longer than " + std::to_string(kMaxStringLength));
  }
  const int n = size();
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
    switch (letters_[static_cast<std::size_t>(k)]) {
      case Letter::I: break;
      case Letter::X: x_mask_ |= bit; break;
      case Letter::Y: x_mask_ |= bit; z_mask_ |= bit; break;
      case Letter::Z: z_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::from_string(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'I': letters.push_back(Letter::I); break;
      case 'X': letters.push_back(Letter::X); break;
      case 'Y': letters.push_back(Letter::Y); break;
      case 'Z': letters.push_back(Letter::Z); break;
      default:
        throw ArgumentError("invalid Pauli symbol '" + std::string(1, text[k]) + "' at position " +
                            std::to_string(k + 1));
    }
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::identity(int qubits) {
  if (qubits < 1) throw ArgumentError("Pauli string must have at least one letter");
  return PauliString(std::vector<Letter>(static_cast<std::size_t>(qubits), Letter::I));
}

PauliString PauliString::from_masks(int qubits, std::uint64_t x_mask, std::uint64_t z_mask) {
  if (qubits < 1 || qubits > kMaxStringLength) throw ArgumentError("bad Pauli string length");
  std::vector<Letter> letters(static_cast<std::size_t>(qubits));
  for (int k = 0; k < qubits; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (qubits - 1 - k);
    const bool x = x_mask & bit;
    const bool z = z_mask & bit;
    letters[static_cast<std::size_t>(k)] = x ? (z ? Letter::Y : Letter::X) : (z ? Letter::Z : Letter::I);
  }
  return PauliString(std::move(letters));
}

int PauliString::y_count() const { return std::popcount(x_mask_ & z_mask_); }

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw ArgumentError("multiply: Pauli strings differ in length");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  PauliString r = PauliString::from_masks(a.size(), x, z);
  // Z^za X^xb = (-1)^{|za & xb|} X^xb Z^za
  const Complex phase =
      i_power(a.y_count() + b.y_count() - r.y_count()) * parity_sign(a.z_mask() & b.x_mask());
  return {phase, std::move(r)};
}

ComplexMatrix to_matrix(const PauliString& p) {
  const std::uint64_t dim = std::uint64_t{1} << p.size();
  const Complex base = i_power(p.y_count());
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    m(static_cast<Eigen::Index>(c ^ p.x_mask()), static_cast<Eigen::Index>(c)) =
        base * parity_sign(p.z_mask() & c);
  }
  return m;
}

PauliSum::PauliSum(int qubits, std::vector<PauliTerm> terms) : qubits_(qubits), terms_(std::move(terms)) {
  if (qubits_ < 1 || qubits_ > kMaxStringLength) {
    throw ArgumentError("PauliSum: qubit count " + std::to_string(qubits_) + " out of range");
  }
  for (const auto& t : terms_) {
    if (t.string.size() != qubits_) {
      throw ArgumentError("PauliSum: string '" + t.string.to_string() + "' has length " +
                          std::to_string(t.string.size()) + ", expected " + std::to_string(qubits_));
    }
  }
  canonical_sort(terms_);
  std::vector<const PauliString*> seen;
  seen.reserve(terms_.size());
  for (const auto& t : terms_) seen.push_back(&t.string);
  std::sort(seen.begin(), seen.end(), [](auto* a, auto* b) { return *a < *b; });
  auto dup = std::adjacent_find(seen.begin(), seen.end(), [](auto* a, auto* b) { return *a == *b; });
  if (dup != seen.end()) {
    throw ArgumentError("PauliSum: duplicate string '" + (*dup)->to_string() + "'");
  }
}

bool PauliSum::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.string.is_diagonal(); });
}

double PauliSum::identity_coefficient() const {
  for (const auto& t : terms_) {
    if (t.string.is_identity()) return t.coefficient;
  }
  return 0.0;
}

PauliSum combine(int qubits, std::span<const PauliTerm> terms, double drop_tol) {
  std::map<PauliString, double> acc;
  for (const auto& t : terms) acc[t.string] += t.coefficient;
  std::vector<PauliTerm> out;
  for (auto& [s, c] : acc) {
    if (std::abs(c) > drop_tol) out.push_back({c, s});
  }
  return PauliSum(qubits, std::move(out));
}

PauliSum from_complex(int qubits, const std::map<PauliString, Complex>& coefficients, double drop_tol) {
  std::vector<PauliTerm> out;
  for (const auto& [s, c] : coefficients) {
    if (std::abs(c.imag()) > 1e-10) {
      throw ValidationError("operator is not Hermitian: coefficient of " + s.to_string() +
                            " has imaginary part " + std::to_string(c.imag()));
    }
    if (std::abs(c.real()) > drop_tol) out.push_back({c.real(), s});
  }
  return PauliSum(qubits, std::move(out));
}

PauliSum decompose(const ComplexMatrix& h, double drop_tol) {
  const int n = log2_exact(h.rows());
  if (h.rows() != h.cols() || n < 1) {
    throw ArgumentError("decompose: matrix dimension must be a power of two >= 2 (got " +
                        std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ")");
  }
  if (n > kMaxDenseDecomposeQubits) {
    throw CapacityError("decompose: " + std::to_string(n) + " qubits exceeds dense limit of " +
                        std::to_string(kMaxDenseDecomposeQubits));
  }
  const double dev = ops::hermitian_deviation(h);
  if (!(dev <= ops::kHermitianTolerance)) {
    throw ValidationError("decompose: matrix is not Hermitian (max |M - M^H| = " +
                          std::to_string(dev) + ")");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  std::vector<PauliTerm> terms;
  std::vector<Complex> v(dim);
  // Tr(P h) = i^{|x&z|} sum_c (-1)^{|z&c|} h(c, c^x): one Walsh-Hadamard
  // transform per X pattern.
  for (std::uint64_t x = 0; x < dim; ++x) {
    bool any = false;
    for (std::uint64_t c = 0; c < dim; ++c) {
      v[c] = h(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
      any = any || v[c] != Complex{};
    }
    if (!any) continue;
    walsh_hadamard(v);
    for (std::uint64_t z = 0; z < dim; ++z) {
      const Complex coeff = i_power(std::popcount(x & z)) * v[z] / static_cast<double>(dim);
      if (std::abs(coeff.imag()) > 1e-10 * scale) {
        throw ValidationError("decompose: non-real Pauli coefficient (imaginary part " +
                              std::to_string(coeff.imag()) + ")");
      }
      if (std::abs(coeff.real()) > drop_tol) {
        terms.push_back({coeff.real(), PauliString::from_masks(n, x, z)});
      }
    }
  }
  return PauliSum(n, std::move(terms));
}

PauliSum decompose_diagonal(std::span<const double> diagonal, double drop_tol) {
  const int n = log2_exact(static_cast<Eigen::Index>(diagonal.size()));
  if (n < 1) throw ArgumentError("decompose_diagonal: length must be a power of two >= 2");
  if (n > kMaxDiagonalQubits) throw CapacityError("decompose_diagonal: too many qubits");
  std::vector<double> w(diagonal.begin(), diagonal.end());
  walsh_hadamard(w);
  const double dim = static_cast<double>(w.size());
  std::vector<PauliTerm> terms;
  for (std::uint64_t z = 0; z < w.size(); ++z) {
    const double c = w[z] / dim;
    if (std::abs(c) > drop_tol) terms.push_back({c, PauliString::from_masks(n, 0, z)});
  }
  return PauliSum(n, std::move(terms));
}

ComplexMatrix reconstruct(const PauliSum& p) {
  if (p.qubits() > kMaxDenseDecomposeQubits) {
    throw CapacityError("reconstruct: too many qubits for a dense matrix");
  }
  const std::uint64_t dim = std::uint64_t{1} << p.qubits();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : p.terms()) {
    const Complex base = t.coefficient * i_power(t.string.y_count());
    for (std::uint64_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(c ^ t.string.x_mask()), static_cast<Eigen::Index>(c)) +=
          base * parity_sign(t.string.z_mask() & c);
    }
  }
  return m;
}

std::vector<double> reconstruct_diagonal(const PauliSum& p) {
  if (!p.is_diagonal()) throw ArgumentError("reconstruct_diagonal: sum has X or Y terms");
  if (p.qubits() > kMaxDiagonalQubits) throw CapacityError("reconstruct_diagonal: too many qubits");
  std::vector<double> w(std::size_t{1} << p.qubits(), 0.0);
  for (const auto& t : p.terms()) w[t.string.z_mask()] = t.coefficient;
  walsh_hadamard(w);
  return w;
}

Complex string_expectation(const PauliString& s, const ComplexVector& state) {
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  Complex acc{};
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    acc += std::conj(state[static_cast<Eigen::Index>(b ^ x)]) * state[static_cast<Eigen::Index>(b)] *
           parity_sign(z & b);
  }
  return i_power(s.y_count()) * acc;
}

double expectation(const PauliSum& p, const ComplexVector& state) {
  if (state.size() != (Eigen::Index{1} << p.qubits())) {
    throw ArgumentError("expectation: state dimension " + std::to_string(state.size()) +
                        " does not match " + std::to_string(p.qubits()) + " qubits");
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw ValidationError("expectation: state is not normalized (norm " + std::to_string(norm) + ")");
  }
  double total = 0.0;
  for (const auto& t : p.terms()) total += t.coefficient * string_expectation(t.string, state).real();
  return total;
}

ComplexVector apply(const PauliSum& p, const ComplexVector& state) {
  if (state.size() != (Eigen::Index{1} << p.qubits())) {
    throw ArgumentError("apply: state dimension does not match qubit count");
  }
  ComplexVector out = ComplexVector::Zero(state.size());
  for (const auto& t : p.terms()) {
    const Complex base = t.coefficient * i_power(t.string.y_count());
    const std::uint64_t x = t.string.x_mask();
    const std::uint64_t z = t.string.z_mask();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
      out[static_cast<Eigen::Index>(b ^ x)] += base * parity_sign(z & b) * state[static_cast<Eigen::Index>(b)];
    }
  }
  return out;
}

std::string serialize(const PauliSum& p) {
  std::string out = "# ringcasimir pauli v1\nqubits " + std::to_string(p.qubits()) + "\n";
  char buf[64];
  for (const auto& t : p.terms()) {
    const auto res = std::to_chars(buf, buf + sizeof buf, t.coefficient);
    out.append(buf, res.ptr);
    out.push_back(' ');
    out += t.string.to_string();
    out.push_back('\n');
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) fields.push_back(line.substr(start, k - start));
  }
  return fields;
}

}  // namespace

PauliSum parse(std::string_view text) {
  int qubits = 0;
  std::vector<PauliTerm> terms;
  std::map<PauliString, std::size_t> first_seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (qubits == 0) {
      if (fields.size() != 2 || fields[0] != "qubits") {
        throw ParseError(line_no, "expected 'qubits <n>' header");
      }
      int n = 0;
      const auto res = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), n);
      if (res.ec != std::errc{} || res.ptr != fields[1].data() + fields[1].size() || n < 1 ||
          n > kMaxStringLength) {
        throw ParseError(line_no, "invalid qubit count '" + std::string(fields[1]) + "'");
      }
      qubits = n;
      continue;
    }

    if (fields.size() != 2) {
      throw ParseError(line_no, "expected '<coefficient> <pauli string>', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    double coeff = 0.0;
    const auto res = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), coeff);
    if (res.ec != std::errc{} || res.ptr != fields[0].data() + fields[0].size() || !std::isfinite(coeff)) {
      throw ParseError(line_no, "non-numeric coefficient '" + std::string(fields[0]) + "'");
    }
    const std::string_view letters = fields[1];
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const char ch = letters[k];
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
        throw ParseError(line_no, "invalid symbol '" + std::string(1, ch) + "' at column " +
                                      std::to_string(fields[1].data() - line.data() + k + 1));
      }
    }
    if (static_cast<int>(letters.size()) != qubits) {
      throw ParseError(line_no, "string '" + std::string(letters) + "' has length " +
                                    std::to_string(letters.size()) + ", expected " + std::to_string(qubits));
    }
    PauliString s = PauliString::from_string(letters);
    if (auto [it, inserted] = first_seen.emplace(s, line_no); !inserted) {
      throw ParseError(line_no, "duplicate string '" + std::string(letters) + "' (first on line " +
                                    std::to_string(it->second) + ")");
    }
    terms.push_back({coeff, std::move(s)});
  }
  if (!text.empty() && text.back() != '\n') {
    throw ParseError(line_no, "missing newline terminator (truncated file?)");
  }
  if (qubits == 0) throw ParseError(line_no + 1, "missing 'qubits <n>' header");
  return PauliSum(qubits, std::move(terms));
}

}  // namespace ringcasimir::pauli
