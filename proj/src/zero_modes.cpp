#include "pointint/zero_modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>

#include "pointint/errors.hpp"
#include "pointint/green.hpp"

namespace pointint {

const char* to_string(ZeroModeKind kind) {
  switch (kind) {
    case ZeroModeKind::Regular: return "Regular";
    case ZeroModeKind::ResonanceOnly: return "ResonanceOnly";
    case ZeroModeKind::EigenvalueOnly: return "EigenvalueOnly";
    case ZeroModeKind::Mixed: return "Mixed";
  }
  return "?";
}

ZeroModeReport classify_zero_energy(const Configuration& config, double tol) {
  validate(config);
  const GammaTaylor taylor = gamma_taylor(config);
  const ComplexMatrix gamma0 = taylor.gamma0.cast<Complex>();

  const Nullspace k0 = nullspace(gamma0, tol);
  const Nullspace inter = intersect_kernels(k0, taylor.gamma1, tol);

  ZeroModeReport report;
  report.gamma0_singular_values = k0.singular_values;
  report.e = inter.dimension();
  report.r = k0.dimension() - report.e;
  report.eigen_basis = inter.basis;

  // Resonance representatives: the orthogonal complement of the eigen basis
  // inside Ker Gamma0.  Such vectors automatically have nonzero component
  // sum, otherwise they would lie in the intersection.
  const int n = config.size();
  if (report.r > 0) {
    ComplexMatrix rest = k0.basis - report.eigen_basis * (report.eigen_basis.adjoint() * k0.basis);
    Eigen::JacobiSVD<ComplexMatrix> svd(rest, Eigen::ComputeThinU);
    report.resonance_basis = svd.matrixU().leftCols(report.r);
  } else {
    report.resonance_basis = ComplexMatrix(n, 0);
  }

  if (report.e == 0 && report.r == 0)
    report.kind = ZeroModeKind::Regular;
  else if (report.e == 0)
    report.kind = ZeroModeKind::ResonanceOnly;
  else if (report.r == 0)
    report.kind = ZeroModeKind::EigenvalueOnly;
  else
    report.kind = ZeroModeKind::Mixed;

  // Tolerance ambiguity: singular values of Gamma0 inside a factor 100 of
  // the cutoff make the e/r split fragile; report instead of failing.
  const double sigma_max = k0.singular_values.size() > 0 ? k0.singular_values(0) : 0.0;
  const double cutoff = tol * sigma_max;
  for (int i = 0; i < k0.singular_values.size(); ++i) {
    const double s = k0.singular_values(i);
    if (s >= cutoff / 100.0 && s <= cutoff * 100.0 && s > 0.0) report.borderline = true;
  }
  return report;
}

Complex zero_mode_value(const Configuration& config, const ComplexVector& c, const Vec3& x) {
  Complex value(0.0, 0.0);
  for (int j = 0; j < config.size(); ++j) {
    const double r = (x - config.centers[j]).norm();
    if (r == 0.0) throw CoincidentWithCenter{};
    value += c(j) / (four_pi * r);
  }
  return value;
}

double ZeroModeResidualReport::worst() const {
  double w = 0.0;
  for (double v : max_residuals) w = std::max(w, v);
  return w;
}

ZeroModeResidualReport verify_zero_eigenfunction(const Configuration& config,
                                                 const ComplexVector& c,
                                                 const std::vector<double>& lambdas) {
  validate(config);
  const int n = config.size();
  if (c.size() != n) throw NotAZeroMode("coefficient vector has wrong dimension");

  const GammaTaylor taylor = gamma_taylor(config);
  const double scale = taylor.gamma0.cwiseAbs().maxCoeff() + 1.0 / four_pi;
  const double c_norm = c.norm();
  const double gamma0_residual = (taylor.gamma0.cast<Complex>() * c).norm();
  const double sum_residual = std::abs(c.sum());
  if (gamma0_residual > 1e-10 * scale * c_norm || sum_residual > 1e-10 * c_norm) {
    std::ostringstream msg;
    msg << "coefficients are not in Ker Gamma0 ∩ Ker Gamma1: |Gamma0 c| = " << gamma0_residual
        << ", |sum c| = " << sum_residual;
    throw NotAZeroMode(msg.str());
  }

  ZeroModeResidualReport report;
  for (double lambda : lambdas) {
    const Complex z(0.0, lambda);
    const ComplexMatrix gamma_z = gamma_matrix(config, z);
    const ComplexVector gc = gamma_z * c;
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      // F_z(y_k): the j = k term is the continuous limit of
      // (1 - e^{izr}) / (4 pi r) as r -> 0, i.e. -iz/(4 pi) = lambda/(4 pi).
      Complex f = c(k) * (lambda / four_pi);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        f += c(j) * (green_pair(0.0, config.centers[j], config.centers[k]) -
                     green_pair(z, config.centers[j], config.centers[k]));
      }
      worst = std::max(worst, std::abs(f - gc(k)));
    }
    report.lambdas.push_back(lambda);
    report.max_residuals.push_back(worst);
  }
  return report;
}

}  // namespace pointint
