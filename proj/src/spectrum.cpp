#include "pointint/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pointint/errors.hpp"
#include "pointint/green.hpp"

namespace pointint {

int SpectrumResult::total_multiplicity() const {
  int total = 0;
  for (const auto& s : states) total += s.multiplicity;
  return total;
}

double default_lambda_max(const Configuration& config) {
  double max_alpha = 0.0;
  for (double a : config.alphas) max_alpha = std::max(max_alpha, std::abs(a));
  double coupling = 0.0;
  if (config.size() > 1) {
    const double g_max = 1.0 / (four_pi * min_pairwise_distance(config));
    coupling = config.size() * g_max * four_pi;
  }
  return four_pi * (max_alpha + 1.0) + coupling;
}

namespace {

RealVector sorted_eigenvalues(const Configuration& config, double lambda) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gamma_imag_axis(config, lambda),
                                                   Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

// Bisection of the k-th sorted eigenvalue branch on [lo, hi], where the
// branch is negative at lo and non-negative at hi.  Branches are strictly
// increasing in lambda (the derivative matrix is positive definite), so the
// sorted index identifies the same analytic branch throughout.
double refine_root(const Configuration& config, int k, double lo, double hi) {
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (sorted_eigenvalues(config, mid)(k) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double lambda = 0.5 * (lo + hi);
  // One Newton step on the tracked branch, using Hellmann-Feynman for the
  // derivative mu' = v^T Gamma'(i lambda) v.
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gamma_imag_axis(config, lambda));
  const double mu = solver.eigenvalues()(k);
  const RealVector v = solver.eigenvectors().col(k);
  const double dmu = v.dot(gamma_imag_axis_derivative(config, lambda) * v);
  if (dmu > 0.0) {
    const double next = lambda - mu / dmu;
    if (next > lo - 1e-9 && next < hi + 1e-9) lambda = next;
  }
  return lambda;
}

}  // namespace

SpectrumResult find_negative_eigenvalues(const Configuration& config, double lambda_max,
                                         double tol) {
  validate(config);
  if (lambda_max <= 0.0) lambda_max = default_lambda_max(config);
  const int n = config.size();
  SpectrumResult result;

  // A branch carries a root in (0, lambda_max] iff it starts negative at
  // lambda = 0; branches at exactly zero belong to the zero-energy analysis
  // and are excluded.
  const RealVector at_zero = sorted_eigenvalues(config, 0.0);
  const double zero_floor = tol * at_zero.cwiseAbs().maxCoeff();

  const int grid_points = 128;
  std::vector<RealVector> grid_values;
  grid_values.reserve(grid_points + 1);
  std::vector<double> grid_lambda(grid_points + 1);
  for (int i = 0; i <= grid_points; ++i) {
    grid_lambda[i] = lambda_max * static_cast<double>(i) / grid_points;
    grid_values.push_back(sorted_eigenvalues(config, grid_lambda[i]));
  }

  // Empirical monotonicity guard; a violation is a diagnostic, not an error.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i + 1 <= grid_points; ++i)
      if (grid_values[i + 1](k) < grid_values[i](k) - 1e-12 * (1.0 + std::abs(grid_values[i](k)))) {
        std::ostringstream msg;
        msg << "eigenvalue branch " << k << " decreases near lambda = " << grid_lambda[i];
        result.diagnostics.push_back(msg.str());
      }

  std::vector<double> roots;
  for (int k = 0; k < n; ++k) {
    if (!(at_zero(k) < -zero_floor)) continue;
    if (grid_values[grid_points](k) < 0.0) {
      std::ostringstream msg;
      msg << "branch " << k << " is still negative at lambda_max = " << lambda_max
          << "; increase lambda_max";
      throw BranchNotBracketed(msg.str());
    }
    int cell = 0;
    while (cell < grid_points && grid_values[cell + 1](k) < 0.0) ++cell;
    roots.push_back(refine_root(config, k, grid_lambda[cell], grid_lambda[cell + 1]));
  }
  std::sort(roots.begin(), roots.end());

  // Merge clusters of nearly coincident roots (exactly degenerate branches of
  // symmetric configurations) and read the multiplicity off the SVD there.
  size_t i = 0;
  while (i < roots.size()) {
    size_t j = i + 1;
    while (j < roots.size() && roots[j] - roots[j - 1] < 1e-8) ++j;
    double lambda = 0.0;
    for (size_t m = i; m < j; ++m) lambda += roots[m];
    lambda /= static_cast<double>(j - i);

    const Nullspace kernel = nullspace(gamma_imag_axis(config, lambda).cast<Complex>(), tol);
    BoundState state;
    state.lambda = lambda;
    state.energy = -lambda * lambda;
    state.multiplicity = kernel.dimension();
    state.coefficient_basis = kernel.basis;
    if (state.multiplicity == 0) {
      std::ostringstream msg;
      msg << "root near lambda = " << lambda
          << " has no singular value below tolerance; reporting branch count";
      result.diagnostics.push_back(msg.str());
      state.multiplicity = static_cast<int>(j - i);
    }
    result.states.push_back(std::move(state));
    i = j;
  }
  return result;
}

Complex evaluate_bound_state(const EigenfunctionRep& rep, const Vec3& x) {
  Complex value(0.0, 0.0);
  for (size_t j = 0; j < rep.centers.size(); ++j) {
    const double r = (x - rep.centers[j]).norm();
    if (r == 0.0) throw CoincidentWithCenter{};
    value += rep.coefficients(static_cast<int>(j)) * std::exp(-rep.lambda * r) / (four_pi * r);
  }
  return value;
}

double gram_inner(double lambda, const Vec3& a, const Vec3& b) {
  // <G_{i lambda}^a, G_{i lambda}^b> = e^{-lambda |a-b|} / (8 pi lambda),
  // the kernel of (-Delta + lambda^2)^{-2}.
  return std::exp(-lambda * (a - b).norm()) / (eight_pi * lambda);
}

double bound_state_l2_norm(const EigenfunctionRep& rep) {
  const int n = static_cast<int>(rep.centers.size());
  ComplexMatrix gram(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      gram(j, k) = gram_inner(rep.lambda, rep.centers[j], rep.centers[k]);
  const Complex q = rep.coefficients.adjoint() * gram * rep.coefficients;
  return std::sqrt(std::max(0.0, q.real()));
}

}  // namespace pointint
