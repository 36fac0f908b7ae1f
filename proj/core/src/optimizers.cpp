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

#include "ringcasimir/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "ringcasimir/errors.hpp"

namespace ringcasimir::vqe {
namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Counts evaluations and keeps the best point and its improvement trace.
class Tracker {
 public:
  explicit Tracker(const Objective& f) : f_(f) {}

  double operator()(const Vec& x) {
    ++evaluations;
    const double v = f_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    if (!has_best_ || v < best_value) {  // ties keep the earlier point
      has_best_ = true;
      best_value = v;
      best_x = x;
      if (!trace.empty() && trace.back().iteration == iteration) {
        trace.back().energy = v;
      } else {
        trace.push_back({iteration, v});
      }
    }
    return v;
  }

  int iteration = 0;
  int evaluations = 0;
  double best_value = std::numeric_limits<double>::infinity();
  Vec best_x;
  std::vector<TracePoint> trace;

 private:
  const Objective& f_;
  bool has_best_ = false;
};

MinimizeResult finish(Tracker& t, bool converged) {
  MinimizeResult r;
  r.x.assign(t.best_x.data(), t.best_x.data() + t.best_x.size());
  r.value = t.best_value;
  r.trace = std::move(t.trace);
  r.iterations = t.iteration;
  r.evaluations = t.evaluations;
  r.converged = converged;
  return r;
}

// |det| of the edge matrix of `pts` taken relative to pts[anchor].
double simplex_volume(const std::vector<Vec>& pts, std::size_t anchor) {
  const auto n = static_cast<Eigen::Index>(pts.size() - 1);
  Mat d(n, n);
  Eigen::Index row = 0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == anchor) continue;
    d.row(row++) = (pts[j] - pts[anchor]).transpose();
  }
  return std::abs(d.determinant());
}

MinimizeResult linear_approx(const Objective& objective, Vec x0, const MinimizeOptions& opt) {
  Tracker eval(objective);
  const Eigen::Index n = x0.size();
  std::vector<Vec> pts;
  std::vector<double> vals;
  double rho = opt.initial_step;

  auto rebuild = [&](const Vec& centre, double centre_value) {
    pts.assign(1, centre);
    vals.assign(1, centre_value);
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec p = centre;
      p[j] += rho;
      pts.push_back(p);
      vals.push_back(eval(p));
    }
  };
  auto put_best_first = [&] {
    const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    std::swap(pts[0], pts[best]);
    std::swap(vals[0], vals[best]);
  };

  const double f0 = eval(x0);
  if (n == 0) return finish(eval, true);
  rebuild(x0, f0);
  bool poor_step = false;

  while (eval.iteration < opt.max_iterations) {
    put_best_first();
    Mat d(n, n);
    Vec df(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      d.row(j) = (pts[static_cast<std::size_t>(j + 1)] - pts[0]).transpose();
      df[j] = vals[static_cast<std::size_t>(j + 1)] - vals[0];
    }
    Eigen::FullPivLU<Mat> lu(d);
    if (!lu.isInvertible() || lu.rcond() < 1e-12) {
      ++eval.iteration;
      rebuild(pts[0], vals[0]);
      continue;
    }
    const Vec grad = lu.solve(df);
    const Mat inv = lu.inverse();

    // Farthest vertex decides whether the model is still local to rho.
    std::size_t far = 1;
    double far_dist = 0.0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
      const double dist = (pts[j] - pts[0]).norm();
      if (dist > far_dist) {
        far_dist = dist;
        far = j;
      }
    }

    const double gnorm = grad.norm();
    if (!poor_step && gnorm > 0.0 && std::isfinite(gnorm)) {
      ++eval.iteration;
      const Vec trial = pts[0] - (rho / gnorm) * grad;
      const double ft = eval(trial);
      if (ft < vals[0]) {
        // A decrease well short of the model's prediction keeps the point but
        // is treated like a failure for the radius.
        poor_step = vals[0] - ft < 0.1 * rho * gnorm;
        // Keep the n old points that span the largest simplex with the trial.
        std::size_t drop = 0;
        double best_volume = -1.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
          std::vector<Vec> cand;
          cand.reserve(pts.size());
          cand.push_back(trial);
          for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k != j) cand.push_back(pts[k]);
          }
          const double vol = simplex_volume(cand, 0);
          if (vol > best_volume) {
            best_volume = vol;
            drop = j;
          }
        }
        pts[drop] = trial;
        vals[drop] = ft;
        continue;
      }
    }
    poor_step = false;

    if (far_dist > 2.0 * rho) {
      // Geometry step: move the farthest vertex to distance rho along the
      // direction orthogonal to the other edges.
      ++eval.iteration;
      Vec dir = inv.col(static_cast<Eigen::Index>(far - 1));
      dir.normalize();
      if (grad.dot(dir) > 0.0) dir = -dir;
      pts[far] = pts[0] + rho * dir;
      vals[far] = eval(pts[far]);
      continue;
    }

    rho *= 0.5;
    if (rho < opt.tolerance) return finish(eval, true);
  }
  return finish(eval, false);
}

Vec fd_gradient(Tracker& eval, const Vec& x) {
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    Vec xp = x;
    Vec xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (eval(xp) - eval(xm)) / (2.0 * h);
  }
  return g;
}

MinimizeResult quadratic_model(const Objective& objective, Vec x, const MinimizeOptions& opt) {
  Tracker eval(objective);
  const Eigen::Index n = x.size();
  double fx = eval(x);
  if (n == 0) return finish(eval, true);
  Vec g = fd_gradient(eval, x);
  Mat hinv = Mat::Identity(n, n);

  while (eval.iteration < opt.max_iterations) {
    if (g.norm() < opt.tolerance) return finish(eval, true);
    ++eval.iteration;
    Vec p = -hinv * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      hinv = Mat::Identity(n, n);
      p = -g;
      slope = -g.squaredNorm();
    }
    double alpha = 1.0;
    double f_new = 0.0;
    Vec x_new;
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      x_new = x + alpha * p;
      f_new = eval(x_new);
      if (f_new <= fx + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
      if (alpha * p.norm() < opt.tolerance) break;
    }
    if (!accepted) return finish(eval, true);  // no descent above the step floor

    const Vec s = x_new - x;
    const Vec g_new = fd_gradient(eval, x_new);
    const Vec y = g_new - g;
    x = x_new;
    fx = f_new;
    g = g_new;
    if (s.norm() < opt.tolerance) return finish(eval, true);

    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double r = 1.0 / sy;
      const Mat id = Mat::Identity(n, n);
      hinv = (id - r * s * y.transpose()) * hinv * (id - r * y * s.transpose()) + r * s * s.transpose();
    }
  }
  return finish(eval, false);
}

}  // namespace

const char* optimizer_name(OptimizerKind k) {
  return k == OptimizerKind::LinearApprox ? "linear" : "quadratic";
}

MinimizeResult minimize(const Objective& objective, std::vector<double> x0, const MinimizeOptions& options) {
  if (options.max_iterations < 1) throw ArgumentError("minimize: max_iterations must be >= 1");
  if (!(options.tolerance > 0.0)) throw ArgumentError("minimize: tolerance must be positive");
  if (!(options.initial_step > 0.0)) throw ArgumentError("minimize: initial_step must be positive");
  Vec x = Eigen::Map<const Vec>(x0.data(), static_cast<Eigen::Index>(x0.size()));
  switch (options.kind) {
    case OptimizerKind::LinearApprox: return linear_approx(objective, std::move(x), options);
    case OptimizerKind::QuadraticModel: return quadratic_model(objective, std::move(x), options);
  }
  throw ArgumentError("minimize: unknown optimizer");
}

}  // namespace ringcasimir::vqe
