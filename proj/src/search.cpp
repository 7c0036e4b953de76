#include "pointint/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "pointint/errors.hpp"
#include "pointint/gamma.hpp"
#include "pointint/green.hpp"

namespace pointint {

AlphaSolution solve_alpha_for_kernel(const std::vector<Vec3>& centers, const RealVector& c,
                                     double tol) {
  const int n = static_cast<int>(centers.size());
  if (c.size() != n) throw std::invalid_argument("solve_alpha_for_kernel: dimension mismatch");

  RealMatrix g = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (j != k) g(j, k) = 1.0 / (four_pi * (centers[j] - centers[k]).norm());

  const RealVector gc = g * c;
  const double c_scale = c.cwiseAbs().maxCoeff();
  const double g_scale = g.cwiseAbs().maxCoeff() + 1e-300;

  AlphaSolution sol;
  sol.alphas = RealVector::Zero(n);
  sol.constrained.assign(n, true);
  for (int j = 0; j < n; ++j) {
    if (std::abs(c(j)) <= 1e-13 * c_scale) {
      // alpha_j never multiplies anything in Gamma0 c = 0; the equation at
      // row j must already hold on its own.
      if (std::abs(gc(j)) > tol * g_scale * c.norm()) {
        std::ostringstream msg;
        msg << "component " << j << " of c vanishes but the row residual is " << gc(j);
        throw InconsistentZeroComponent(msg.str());
      }
      sol.alphas(j) = 0.0;
      sol.constrained[j] = false;
    } else {
      sol.alphas(j) = gc(j) / c(j);
    }
  }
  return sol;
}

ScanResult scan_real_axis(const Configuration& config, double z_min, double z_max, int points) {
  validate(config);
  if (!(0.0 < z_min && z_min < z_max)) throw Error("scan_real_axis: need 0 < z_min < z_max");
  if (points < 2) throw Error("scan_real_axis: need at least 2 points");

  ScanResult result;
  result.min_singular_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double z = z_min + (z_max - z_min) * i / (points - 1);
    Eigen::JacobiSVD<ComplexMatrix> svd(gamma_matrix(config, Complex(z, 0.0)));
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    result.grid.push_back(z);
    result.singular_values.push_back(smin);
    if (smin < result.min_singular_value) {
      result.min_singular_value = smin;
      result.argmin = z;
    }
  }
  return result;
}

// --- multiplicity search -----------------------------------------------------------

namespace {

using Centers = std::vector<Vec3>;

void normalize_geometry(Centers& centers) {
  const int n = static_cast<int>(centers.size());
  Vec3 centroid = Vec3::Zero();
  for (const auto& y : centers) centroid += y;
  centroid /= n;
  for (auto& y : centers) y -= centroid;
  double mean_dist = 0.0;
  int pairs = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      mean_dist += (centers[j] - centers[k]).norm();
      ++pairs;
    }
  mean_dist /= pairs;
  if (mean_dist > 0.0)
    for (auto& y : centers) y /= mean_dist;
}

double min_distance(const Centers& centers) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < centers.size(); ++j)
    for (size_t k = j + 1; k < centers.size(); ++k)
      best = std::min(best, (centers[j] - centers[k]).norm());
  return best;
}

RealMatrix gamma0_of(const Centers& centers, const RealVector& alphas) {
  const int n = static_cast<int>(centers.size());
  RealMatrix gamma0 = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    gamma0(j, j) = alphas(j);
    for (int k = j + 1; k < n; ++k) {
      const double value = -1.0 / (four_pi * (centers[j] - centers[k]).norm());
      gamma0(j, k) = gamma0(k, j) = value;
    }
  }
  return gamma0;
}

// [Gamma0; w * 1^T]: its kernel is Ker Gamma0 intersected with the
// component-sum-zero hyperplane, i.e. the zero-eigenvalue space.  The ones
// row is scaled to the magnitude of Gamma0 so the singular values are
// comparable.
RealMatrix stacked_system(const Centers& centers, const RealVector& alphas) {
  const int n = static_cast<int>(centers.size());
  const RealMatrix gamma0 = gamma0_of(centers, alphas);
  const double w = std::max(gamma0.cwiseAbs().maxCoeff(), 1e-12);
  RealMatrix stack(n + 1, n);
  stack.topRows(n) = gamma0;
  stack.bottomRows(1) = w * RealMatrix::Ones(1, n);
  return stack;
}

RealVector project_sum_zero(RealVector v) {
  v.array() -= v.mean();
  const double norm = v.norm();
  return norm > 0.0 ? RealVector(v / norm) : v;
}

// Deterministic full-support candidate kernel vector for a geometry: the
// trailing right singular vector of the stack built with flat couplings,
// blended away from zero components when needed.
RealVector candidate_kernel_vector(const Centers& centers) {
  const int n = static_cast<int>(centers.size());
  double mean_dist = 0.0;
  int pairs = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      mean_dist += (centers[j] - centers[k]).norm();
      ++pairs;
    }
  mean_dist /= pairs;
  const RealVector flat = RealVector::Constant(n, -1.0 / (four_pi * mean_dist));

  Eigen::JacobiSVD<RealMatrix> svd(stacked_system(centers, flat), Eigen::ComputeFullV);
  RealVector c = project_sum_zero(svd.matrixV().col(n - 1));

  RealVector spread(n);
  for (int j = 0; j < n; ++j) spread(j) = std::cos(2.0 * pi * j / n + 0.7);
  spread = project_sum_zero(spread);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (c.cwiseAbs().minCoeff() >= 0.05 / std::sqrt(double(n))) break;
    c = project_sum_zero(c + 0.4 * spread);
  }
  return c;
}

struct Score {
  int e = 0;
  double smoothed = 1.0;  // normalized (e+1)-th smallest singular value
  double energy() const { return -double(e) + std::min(1.0, smoothed); }
};

Score score_geometry(const Centers& centers, const RealVector& c) {
  const int n = static_cast<int>(centers.size());
  const AlphaSolution sol = solve_alpha_for_kernel(centers, c);
  Eigen::JacobiSVD<RealMatrix> svd(stacked_system(centers, sol.alphas));
  const RealVector sv = svd.singularValues();  // descending, n values
  const double sigma_max = std::max(sv(0), 1e-300);
  Score score;
  for (int i = n - 1; i >= 0; --i) {
    if (sv(i) <= default_rank_tol * sigma_max)
      ++score.e;
    else
      break;
  }
  const int idx = n - 1 - score.e;  // (e+1)-th smallest
  score.smoothed = idx >= 0 ? sv(idx) / sigma_max : 1.0;
  return score;
}

// Gauss-Newton on the bordered system
//   S(Y) V = 0,   V^T V = I,
// solving for the geometry and an e_tgt-dimensional kernel basis together,
// which converges quadratically where driving singular values one at a time
// only converges linearly.  The first residual block is normalized by |S| so
// the scale gauge of the geometry cannot fake progress.  This is the step
// that pushes an almost-degenerate annealed geometry through the rank
// classification tolerance.
bool polish_geometry(Centers& centers, const RealVector& c, int e_tgt) {
  const int n = static_cast<int>(centers.size());
  const int nc = 3 * n;
  const int nv = n * e_tgt;
  const int nr = (n + 1) * e_tgt + e_tgt * e_tgt;
  const double h = 1e-6;

  auto stack_of = [&](const Centers& y) -> RealMatrix {
    const AlphaSolution sol = solve_alpha_for_kernel(y, c);
    return stacked_system(y, sol.alphas);
  };
  auto residual = [&](const Centers& y, const RealMatrix& v) -> RealVector {
    const RealMatrix s = stack_of(y);
    RealVector f(nr);
    const RealMatrix sv = s * v / s.norm();
    f.head((n + 1) * e_tgt) = Eigen::Map<const RealVector>(sv.data(), (n + 1) * e_tgt);
    const RealMatrix orth = v.transpose() * v - RealMatrix::Identity(e_tgt, e_tgt);
    f.tail(e_tgt * e_tgt) = Eigen::Map<const RealVector>(orth.data(), e_tgt * e_tgt);
    return f;
  };

  Centers y = centers;
  RealMatrix v;
  try {
    Eigen::JacobiSVD<RealMatrix> svd(stack_of(y), Eigen::ComputeFullV);
    v = svd.matrixV().rightCols(e_tgt);
  } catch (const Error&) {
    return false;
  }

  for (int outer = 0; outer < 25; ++outer) {
    try {
      Eigen::JacobiSVD<RealMatrix> svd(stack_of(y));
      const RealVector sv = svd.singularValues();
      if (sv(n - e_tgt) <= 1e-13 * std::max(sv(0), 1e-300) && min_distance(y) > 0.05) {
        centers = y;
        return true;
      }

      const RealVector f = residual(y, v);
      RealMatrix jac(nr, nc + nv);
      for (int q = 0; q < nc; ++q) {
        Centers yq = y;
        yq[q / 3](q % 3) += h;
        jac.col(q) = (residual(yq, v) - f) / h;
      }
      for (int q = 0; q < nv; ++q) {
        RealMatrix vq = v;
        vq(q % n, q / n) += h;
        jac.col(nc + q) = (residual(y, vq) - f) / h;
      }

      Eigen::JacobiSVD<RealMatrix> jsvd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
      jsvd.setThreshold(1e-10);
      const RealVector step = jsvd.solve(-f);

      bool improved = false;
      const double f0 = f.norm();
      for (double t : {1.0, 0.5, 0.25, 0.125}) {
        Centers yt = y;
        RealMatrix vt = v;
        for (int q = 0; q < nc; ++q) yt[q / 3](q % 3) += t * step(q);
        for (int q = 0; q < nv; ++q) vt(q % n, q / n) += t * step(nc + q);
        if (min_distance(yt) < 0.05) continue;
        if (residual(yt, vt).norm() < f0) {
          y = yt;
          v = vt;
          improved = true;
          break;
        }
      }
      if (!improved) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return false;
}

Centers random_geometry(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Centers centers(n);
  for (int attempt = 0; attempt < 200; ++attempt) {
    for (auto& y : centers) y = Vec3(gauss(rng), gauss(rng), gauss(rng));
    normalize_geometry(centers);
    if (min_distance(centers) > 0.2) break;
  }
  return centers;
}

Configuration config_from(const Centers& centers, const RealVector& c) {
  Configuration config;
  config.centers = centers;
  const AlphaSolution sol = solve_alpha_for_kernel(centers, c);
  config.alphas.assign(sol.alphas.data(), sol.alphas.data() + sol.alphas.size());
  config.label = "search";
  return config;
}

// One annealing run targeting a kernel of dimension e_tgt.  Returns true on
// a polished geometry whose classification reaches the target.
bool anneal_target(int n, int e_tgt, int budget, std::mt19937_64& rng, SearchResult& out) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Centers current = random_geometry(n, rng);
  RealVector c = candidate_kernel_vector(current);
  Score cur_score = score_geometry(current, c);
  Centers best = current;
  Score best_score = cur_score;

  const double t0 = 0.1;
  const double t_end = 1e-4;
  const double cooling = std::pow(t_end / t0, 1.0 / std::max(1, budget));
  double temp = t0;
  const int polish_period = std::max(200, budget / 50);
  int polish_attempts = 0;

  auto try_polish = [&](Centers geometry) -> bool {
    const RealVector cand = candidate_kernel_vector(geometry);
    if (!polish_geometry(geometry, cand, e_tgt)) return false;
    // Keep the candidate the polish step was driven by; the polished stack
    // is exactly degenerate for that choice of couplings.
    Configuration config = config_from(geometry, cand);
    const ZeroModeReport report = classify_zero_energy(config);
    if (report.e < e_tgt) return false;
    out.config = std::move(config);
    out.e = report.e;
    out.r = report.r;
    out.objective = score_geometry(geometry, cand).energy();
    return true;
  };

  for (int iter = 0; iter < budget; ++iter, temp *= cooling) {
    // Periodic polish attempts: the Newton basin is wide, so trying from the
    // current and the best geometry in turn costs little and converts
    // near-degeneracies the annealer will not sharpen on its own.
    if (iter % polish_period == 0 && polish_attempts < 64) {
      ++polish_attempts;
      if (try_polish(polish_attempts % 2 == 0 ? current : best)) {
        out.iterations = iter + 1;
        return true;
      }
    }
    Centers proposal = current;
    double diameter = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        diameter = std::max(diameter, (proposal[j] - proposal[k]).norm());
    const int which = pick(rng);
    const double step = 0.1 * diameter;
    proposal[which] += step * Vec3(gauss(rng), gauss(rng), gauss(rng));
    normalize_geometry(proposal);
    if (min_distance(proposal) < 0.05) continue;

    Score prop_score;
    try {
      c = candidate_kernel_vector(proposal);
      prop_score = score_geometry(proposal, c);
    } catch (const Error&) {
      continue;
    }

    const double delta = prop_score.energy() - cur_score.energy();
    if (delta <= 0.0 || std::exp(-delta / temp) > unif(rng)) {
      current = proposal;
      cur_score = prop_score;
      if (cur_score.energy() < best_score.energy()) {
        best = current;
        best_score = cur_score;
      }
    }
  }

  out.iterations = budget;
  if (try_polish(best)) return true;

  // No exact degeneracy reached; report the best annealed configuration.
  const RealVector cand = candidate_kernel_vector(best);
  Configuration config = config_from(best, cand);
  const ZeroModeReport report = classify_zero_energy(config);
  if (report.e > out.e || out.config.centers.empty()) {
    out.config = std::move(config);
    out.e = report.e;
    out.r = report.r;
    out.objective = best_score.energy();
  }
  return false;
}

}  // namespace

SearchResult maximize_zero_multiplicity(int n, int budget, std::uint64_t seed) {
  if (n < 2) throw Error("maximize_zero_multiplicity: need at least two centers");
  std::mt19937_64 rng(seed);
  SearchResult result;
  result.seed = seed;

  // Four mutually equidistant points is the most R^3 allows, so cap the
  // target kernel dimension at three; for n >= 5 spend a slice of the budget
  // probing whether four is reachable anyway.
  std::vector<int> targets;
  if (n >= 5) targets = {4, 3};
  else targets = {std::min(n - 1, 3)};

  int remaining = budget;
  for (size_t t = 0; t < targets.size(); ++t) {
    const int slice = (targets.size() > 1 && t == 0) ? budget / 4 : remaining;
    remaining -= slice;
    if (anneal_target(n, targets[t], slice, rng, result)) return result;
  }
  return result;
}

}  // namespace pointint
