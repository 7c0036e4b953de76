#pragma once

#include <string>
#include <vector>

#include "pointint/config.hpp"
#include "pointint/gamma.hpp"

namespace pointint {

/// One negative eigenvalue -lambda^2 of the operator, located as a value
/// lambda > 0 where Gamma(i lambda) is singular.
struct BoundState {
  double lambda = 0.0;
  double energy = 0.0;          // -lambda^2
  int multiplicity = 0;         // dim Ker Gamma(i lambda)
  ComplexMatrix coefficient_basis;  // orthonormal columns
};

struct SpectrumResult {
  std::vector<BoundState> states;       // sorted by lambda
  std::vector<std::string> diagnostics; // e.g. branch monotonicity warnings
  int total_multiplicity() const;
};

/// Gershgorin-type bound beyond which Gamma(i lambda) is positive definite.
double default_lambda_max(const Configuration& config);

/// Finds all lambda in (0, lambda_max] where Gamma(i lambda) is singular by
/// tracking the sorted eigenvalue branches of the real symmetric matrix
/// Gamma(i lambda) and bisecting each sign change (one Newton step at the
/// end).  Roots closer than 1e-8 are merged and the multiplicity is read
/// from the singular-value count at the merged point.
/// lambda_max <= 0 selects default_lambda_max.  Throws BranchNotBracketed
/// if a branch is still negative at lambda_max.
SpectrumResult find_negative_eigenvalues(const Configuration& config,
                                         double lambda_max = 0.0,
                                         double tol = default_rank_tol);

/// psi = sum_j c_j G_{i lambda}^{y_j}, the coefficient representation of an
/// eigenfunction (lambda > 0) or zero mode (lambda = 0).
struct EigenfunctionRep {
  double lambda = 0.0;
  ComplexVector coefficients;
  std::vector<Vec3> centers;
};

/// Pointwise value sum_j c_j e^{-lambda |x-y_j|} / (4 pi |x-y_j|).
Complex evaluate_bound_state(const EigenfunctionRep& rep, const Vec3& x);

/// L^2 inner product <G_{i lambda}^a, G_{i lambda}^b> = e^{-lambda |a-b|} / (8 pi lambda).
double gram_inner(double lambda, const Vec3& a, const Vec3& b);

/// ||psi||_{L^2} through the Gram matrix of the anchors.
double bound_state_l2_norm(const EigenfunctionRep& rep);

}  // namespace pointint
