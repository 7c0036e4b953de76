#pragma once

#include <cstdint>
#include <vector>

#include "pointint/config.hpp"
#include "pointint/types.hpp"
#include "pointint/zero_modes.hpp"

namespace pointint {

/// Couplings that place a prescribed coefficient vector in Ker Gamma0:
///   alpha_j = (sum_{k != j} G_0^{y_j y_k} c_k) / c_j          for c_j != 0.
/// Components with c_j = 0 leave alpha_j free (reported unconstrained, set
/// to 0) provided the consistency condition sum_k G_0^{y_j y_k} c_k = 0
/// holds; otherwise InconsistentZeroComponent is thrown.
struct AlphaSolution {
  RealVector alphas;
  std::vector<bool> constrained;
};

AlphaSolution solve_alpha_for_kernel(const std::vector<Vec3>& centers, const RealVector& c,
                                     double tol = 1e-10);

/// Best configuration found by a stochastic search for large zero-eigenvalue
/// multiplicity.  Simulated annealing moves the centers; at every geometry
/// the couplings are re-solved from a candidate kernel vector taken from the
/// trailing singular subspace of the stacked system [Gamma0; 1^T], and the
/// smoothed score is the (e+1)-th smallest singular value of that stack.
/// Near-degenerate geometries are polished by damped Gauss-Newton on the
/// trailing singular directions, which is what pushes the kernel dimension
/// through the classification tolerance.  Deterministic for a fixed seed.
struct SearchResult {
  Configuration config;
  int e = 0;
  int r = 0;
  double objective = 0.0;  // final smoothed score
  std::uint64_t seed = 0;
  int iterations = 0;
};

SearchResult maximize_zero_multiplicity(int n, int budget, std::uint64_t seed);

/// Smallest singular value of Gamma(z) over a uniform real grid.
struct ScanResult {
  double min_singular_value = 0.0;
  double argmin = 0.0;
  std::vector<double> grid;
  std::vector<double> singular_values;
};

ScanResult scan_real_axis(const Configuration& config, double z_min, double z_max, int points);

}  // namespace pointint
