#pragma once

#include "pointint/config.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// Interaction matrix Gamma(z)_{jk} = (alpha_j - i z / (4 pi)) delta_{jk} - G_z^{y_j y_k}.
/// Complex symmetric (not Hermitian) for every z; entire in z.
ComplexMatrix gamma_matrix(const Configuration& config, Complex z);

/// Value of Gamma at z = i*lambda, which is real symmetric for real lambda.
RealMatrix gamma_imag_axis(const Configuration& config, double lambda);

/// d/dlambda of gamma_imag_axis; positive definite for distinct centers,
/// which makes every eigenvalue branch strictly increasing in lambda.
RealMatrix gamma_imag_axis_derivative(const Configuration& config, double lambda);

/// Coefficients of Gamma(z) = Gamma0 + z*Gamma1 + z^2*Gamma2 + O(z^3):
///   Gamma0_{jk} = alpha_j delta_{jk} - G_0^{y_j y_k}      (real symmetric)
///   Gamma1_{jk} = 1/(4 pi i)                              (skew-Hermitian)
///   Gamma2_{jk} = |y_j - y_k| / (8 pi)                    (real symmetric, zero diagonal)
struct GammaTaylor {
  RealMatrix gamma0;
  ComplexMatrix gamma1;
  RealMatrix gamma2;
};

GammaTaylor gamma_taylor(const Configuration& config);

/// Numerical kernel of a complex matrix at a relative singular-value cutoff.
struct Nullspace {
  double tolerance = default_rank_tol;
  ComplexMatrix basis;          // orthonormal columns spanning the kernel
  RealVector singular_values;   // all singular values, descending

  int dimension() const { return static_cast<int>(basis.cols()); }
};

/// Kernel = span of right singular vectors whose singular value is
/// <= tol * (largest singular value).  SVD-based for stable rank revelation.
Nullspace nullspace(const ComplexMatrix& m, double tol = default_rank_tol);

/// Kernel of b restricted to span(a.basis): orthonormal basis of
/// { v in span(a.basis) : |b v| <= tol * |b| }.  Working on the restricted
/// operator keeps the result orthonormal inside span(a.basis).
Nullspace intersect_kernels(const Nullspace& a, const ComplexMatrix& b, double tol = default_rank_tol);

}  // namespace pointint
