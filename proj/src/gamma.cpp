#include "pointint/gamma.hpp"

#include <Eigen/SVD>

#include "pointint/green.hpp"

namespace pointint {

ComplexMatrix gamma_matrix(const Configuration& config, Complex z) {
  const int n = config.size();
  ComplexMatrix gamma(n, n);
  const Complex diag_shift = -Complex(0.0, 1.0) * z / four_pi;
  for (int j = 0; j < n; ++j) {
    gamma(j, j) = config.alphas[j] + diag_shift;
    for (int k = j + 1; k < n; ++k) {
      const Complex value = -green_pair(z, config.centers[j], config.centers[k]);
      gamma(j, k) = value;
      gamma(k, j) = value;
    }
  }
  return gamma;
}

RealMatrix gamma_imag_axis(const Configuration& config, double lambda) {
  const int n = config.size();
  RealMatrix gamma(n, n);
  for (int j = 0; j < n; ++j) {
    gamma(j, j) = config.alphas[j] + lambda / four_pi;
    for (int k = j + 1; k < n; ++k) {
      const double d = (config.centers[j] - config.centers[k]).norm();
      const double value = -std::exp(-lambda * d) / (four_pi * d);
      gamma(j, k) = value;
      gamma(k, j) = value;
    }
  }
  return gamma;
}

RealMatrix gamma_imag_axis_derivative(const Configuration& config, double lambda) {
  const int n = config.size();
  RealMatrix deriv(n, n);
  for (int j = 0; j < n; ++j) {
    deriv(j, j) = 1.0 / four_pi;
    for (int k = j + 1; k < n; ++k) {
      const double d = (config.centers[j] - config.centers[k]).norm();
      const double value = std::exp(-lambda * d) / four_pi;
      deriv(j, k) = value;
      deriv(k, j) = value;
    }
  }
  return deriv;
}

GammaTaylor gamma_taylor(const Configuration& config) {
  const int n = config.size();
  GammaTaylor t;
  t.gamma0 = RealMatrix::Zero(n, n);
  t.gamma1 = ComplexMatrix::Constant(n, n, Complex(0.0, -1.0) / four_pi);
  t.gamma2 = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    t.gamma0(j, j) = config.alphas[j];
    for (int k = j + 1; k < n; ++k) {
      const double d = (config.centers[j] - config.centers[k]).norm();
      t.gamma0(j, k) = t.gamma0(k, j) = -1.0 / (four_pi * d);
      t.gamma2(j, k) = t.gamma2(k, j) = d / eight_pi;
    }
  }
  return t;
}

Nullspace nullspace(const ComplexMatrix& m, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * tol;
  int dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) ++dim;
  Nullspace result;
  result.tolerance = tol;
  result.singular_values = sv;
  result.basis = svd.matrixV().rightCols(dim);
  return result;
}

Nullspace intersect_kernels(const Nullspace& a, const ComplexMatrix& b, double tol) {
  Nullspace result;
  result.tolerance = tol;
  if (a.dimension() == 0) {
    result.basis = ComplexMatrix(b.rows(), 0);
    result.singular_values = RealVector(0);
    return result;
  }
  // Kernel of b restricted to span(a.basis); the cutoff is relative to |b|
  // so that the set matches { v in span(a) : |b v| <= tol |b| }.
  const ComplexMatrix restricted = b * a.basis;
  Eigen::JacobiSVD<ComplexMatrix> svd_b(b);
  const double norm_b = svd_b.singularValues().size() > 0 ? svd_b.singularValues()(0) : 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(restricted, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = norm_b * tol;
  int dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) ++dim;
  result.singular_values = sv;
  result.basis = a.basis * svd.matrixV().rightCols(dim);
  return result;
}

}  // namespace pointint
