#pragma once

#include <string>
#include <vector>

#include "pointint/config.hpp"
#include "pointint/gamma.hpp"

namespace pointint {

enum class ZeroModeKind { Regular, ResonanceOnly, EigenvalueOnly, Mixed };

const char* to_string(ZeroModeKind kind);

/// Classification of the z = 0 behavior.
///   e = dim(Ker Gamma0 ∩ Ker Gamma1)   zero-eigenvalue multiplicity
///   r = dim Ker Gamma0 - e             resonance multiplicity
/// Eigen-basis vectors have zero component sum (the L^2 condition);
/// resonance representatives are chosen inside Ker Gamma0 orthogonal to the
/// eigen basis, so e + r = dim Ker Gamma0 exactly.
struct ZeroModeReport {
  int e = 0;
  int r = 0;
  ComplexMatrix eigen_basis;
  ComplexMatrix resonance_basis;
  ZeroModeKind kind = ZeroModeKind::Regular;
  bool borderline = false;  // some singular value of Gamma0 within 100x of the cutoff
  RealVector gamma0_singular_values;
};

ZeroModeReport classify_zero_energy(const Configuration& config, double tol = default_rank_tol);

/// psi(x) = sum_j c_j / (4 pi |x - y_j|).
Complex zero_mode_value(const Configuration& config, const ComplexVector& c, const Vec3& x);

/// Checks the boundary-condition identity behind zero eigenfunctions: with
/// F_z := sum_j c_j (G_0^{y_j} - G_z^{y_j}), whose value at a center includes
/// the finite diagonal limit (1 - e^{izr})/(4 pi r) -> -iz/(4 pi), one has
/// F_z(y_k) = (Gamma(z) c)_k whenever Gamma0 c = 0.
struct ZeroModeResidualReport {
  std::vector<double> lambdas;
  std::vector<double> max_residuals;  // per lambda, max over centers
  double worst() const;
};

/// Requires c in Ker Gamma0 ∩ Ker Gamma1 numerically (throws NotAZeroMode
/// otherwise) and evaluates the identity at z = i*lambda for the given
/// sample lambdas.
ZeroModeResidualReport verify_zero_eigenfunction(const Configuration& config,
                                                 const ComplexVector& c,
                                                 const std::vector<double>& lambdas = {0.1, 0.01});

}  // namespace pointint
