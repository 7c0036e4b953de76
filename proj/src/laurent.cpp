#include "pointint/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "pointint/errors.hpp"
#include "pointint/green.hpp"
#include "pointint/spectrum.hpp"

namespace pointint {

const char* to_string(LaurentCase c) {
  switch (c) {
    case LaurentCase::Regular: return "regular";
    case LaurentCase::ResonanceOnly: return "resonance_only";
    case LaurentCase::PureEigenvalue: return "pure_eigenvalue";
    case LaurentCase::Mixed: return "mixed";
  }
  return "?";
}

const char* to_string(LaurentMethod m) {
  switch (m) {
    case LaurentMethod::closed_form: return "closed_form";
    case LaurentMethod::contour: return "contour";
    case LaurentMethod::both: return "both";
  }
  return "?";
}

// --- projection inversion identity ------------------------------------------------

namespace {

// Orthonormal basis of the range of a (numerical) orthogonal projection.
ComplexMatrix projection_range(const ComplexMatrix& p) {
  Eigen::JacobiSVD<ComplexMatrix> svd(p, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 0.5) ++rank;
  return svd.matrixU().leftCols(rank);
}

double condition_estimate(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / (sv(sv.size() - 1));
}

// Inverse of the restriction of op to the span of the orthonormal columns u,
// lifted back to the ambient space: u (u^H op u)^{-1} u^H.
ComplexMatrix restricted_inverse(const ComplexMatrix& op, const ComplexMatrix& u,
                                 const char* what) {
  const ComplexMatrix block = u.adjoint() * op * u;
  Eigen::JacobiSVD<ComplexMatrix> svd(block);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return ComplexMatrix::Zero(op.rows(), op.cols());
  if (sv(sv.size() - 1) <= 1e-12 * std::max(sv(0), 1.0))
    throw RestrictedBlockSingular(std::string(what) + ": restricted block is singular");
  return u * block.inverse() * u.adjoint();
}

}  // namespace

ComplexMatrix jn_invert(const ComplexMatrix& a, const ComplexMatrix& p) {
  const ComplexMatrix shifted = a + p;
  if (condition_estimate(shifted) > 1e12)
    throw APlusPSingular("A + P is singular or too ill-conditioned to invert");
  const ComplexMatrix shifted_inv = shifted.inverse();

  const ComplexMatrix u = projection_range(p);
  if (u.cols() == 0) return shifted_inv;  // P = 0: the identity reduces to (A+P)^{-1}

  const ComplexMatrix b = p - p * shifted_inv * p;
  const ComplexMatrix b_block = u.adjoint() * b * u;
  Eigen::JacobiSVD<ComplexMatrix> svd(b_block);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(sv(0), 1.0))
    throw BSingular("B = P - P(A+P)^{-1}P is singular on ran P, so A is singular");
  const ComplexMatrix b_inv = u * b_block.inverse() * u.adjoint();
  return shifted_inv + shifted_inv * p * b_inv * p * shifted_inv;
}

// --- contour extraction -------------------------------------------------------------

double default_contour_radius(const Configuration& config) {
  const SpectrumResult spectrum = find_negative_eigenvalues(config);
  double radius = 0.1;
  if (!spectrum.states.empty()) radius = std::min(radius, 0.5 * spectrum.states.front().lambda);
  return radius;
}

namespace {

// Trapezoidal rule for (2 pi i)^{-1} \oint Gamma^{-1} z^{-k-1} dz, which for
// M nodes reduces to the average of Gamma(z_m)^{-1} z_m^{-k}.  Returns
// nothing if Gamma is numerically singular at some node.
std::optional<ComplexMatrix> contour_estimate(const Configuration& config, int k, double radius,
                                              int nodes) {
  const int n = config.size();
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (int m = 0; m < nodes; ++m) {
    const double theta = 2.0 * pi * m / nodes;
    const Complex z = radius * Complex(std::cos(theta), std::sin(theta));
    const ComplexMatrix gamma = gamma_matrix(config, z);
    Eigen::FullPivLU<ComplexMatrix> lu(gamma);
    if (!lu.isInvertible()) return std::nullopt;
    acc += lu.inverse() * std::pow(z, -k);
  }
  return acc / static_cast<double>(nodes);
}

}  // namespace

ComplexMatrix laurent_contour(const Configuration& config, int k, double radius, int nodes) {
  validate(config);
  if (k < -2 || k > 0) throw Error("laurent_contour: k must be in {-2, -1, 0}");
  if (nodes < 64) throw Error("laurent_contour: need at least 64 nodes");
  if (radius <= 0.0) radius = default_contour_radius(config);

  std::optional<ComplexMatrix> prev = contour_estimate(config, k, radius, nodes);
  bool all_singular = !prev.has_value();
  for (int halving = 0; halving < 8; ++halving) {
    const double next_radius = radius / 2.0;
    std::optional<ComplexMatrix> next = contour_estimate(config, k, next_radius, nodes);
    if (prev && next) {
      const double diff = (*prev - *next).cwiseAbs().maxCoeff();
      if (diff <= 1e-9) return *next;
    }
    if (next) all_singular = false;
    prev = next;
    radius = next_radius;
  }
  if (all_singular)
    throw SingularOnContour("Gamma(z) is singular on every attempted contour");
  throw NoConvergence("contour extraction did not stabilize after 8 halvings");
}

// --- closed forms -------------------------------------------------------------------

LaurentExpansion laurent_closed_form(const Configuration& config, double tol) {
  validate(config);
  const int n = config.size();
  const GammaTaylor taylor = gamma_taylor(config);

  LaurentExpansion exp;
  exp.method = LaurentMethod::closed_form;
  exp.a_minus2 = ComplexMatrix::Zero(n, n);
  exp.a_minus1 = ComplexMatrix::Zero(n, n);

  const Nullspace k0 = nullspace(taylor.gamma0.cast<Complex>(), tol);
  if (k0.dimension() == 0) {
    exp.kind = LaurentCase::Regular;
    return exp;
  }
  const Nullspace inter = intersect_kernels(k0, taylor.gamma1, tol);

  if (inter.dimension() == 0) {
    // Pole of order one: A_-1 = P (P Gamma1 P | ran P)^{-1} P with P the
    // orthogonal projection onto Ker Gamma0.
    exp.kind = LaurentCase::ResonanceOnly;
    exp.a_minus1 = restricted_inverse(taylor.gamma1, k0.basis, "P Gamma1 P");
    return exp;
  }

  // Pole of order two: A_-2 = P (P Gamma2 P | ran P)^{-1} P with P onto
  // Ker Gamma0 ∩ Ker Gamma1 (the restricted block is negative definite on
  // component-sum-zero vectors, hence invertible).
  exp.a_minus2 = restricted_inverse(taylor.gamma2.cast<Complex>(), inter.basis, "P Gamma2 P");
  if (inter.dimension() == k0.dimension()) {
    exp.kind = LaurentCase::PureEigenvalue;
    // No first-order pole in the projection construction when
    // Ker Gamma0 is contained in Ker Gamma1.
  } else {
    exp.kind = LaurentCase::Mixed;
    // The construction gives no closed form for A_-1 here; fall back to the
    // contour extractor, which is the source of truth for the mixed case.
    exp.radius = default_contour_radius(config);
    exp.a_minus1 = laurent_contour(config, -1, exp.radius);
    exp.notes.push_back("a_minus1 extracted by contour integration (mixed case)");
  }
  return exp;
}

namespace {

LaurentCase laurent_case(const Configuration& config, double tol) {
  const GammaTaylor taylor = gamma_taylor(config);
  const Nullspace k0 = nullspace(taylor.gamma0.cast<Complex>(), tol);
  if (k0.dimension() == 0) return LaurentCase::Regular;
  const Nullspace inter = intersect_kernels(k0, taylor.gamma1, tol);
  if (inter.dimension() == 0) return LaurentCase::ResonanceOnly;
  return inter.dimension() == k0.dimension() ? LaurentCase::PureEigenvalue : LaurentCase::Mixed;
}

}  // namespace

LaurentExpansion compute_laurent(const Configuration& config, LaurentMethod method, double tol,
                                 double radius, int nodes) {
  if (method == LaurentMethod::contour) {
    LaurentExpansion exp;
    exp.kind = laurent_case(config, tol);
    exp.method = LaurentMethod::contour;
    exp.radius = radius > 0.0 ? radius : default_contour_radius(config);
    exp.a_minus2 = laurent_contour(config, -2, exp.radius, nodes);
    exp.a_minus1 = laurent_contour(config, -1, exp.radius, nodes);
    return exp;
  }

  LaurentExpansion exp = laurent_closed_form(config, tol);
  if (method == LaurentMethod::closed_form) return exp;

  // both: compare against the contour extraction where the closed form pins
  // the coefficient (A_-2 always; A_-1 away from second-order poles).
  exp.method = LaurentMethod::both;
  if (exp.radius <= 0.0) exp.radius = radius > 0.0 ? radius : default_contour_radius(config);
  const ComplexMatrix c2 = laurent_contour(config, -2, exp.radius, nodes);
  double diff = (exp.a_minus2 - c2).cwiseAbs().maxCoeff();
  if (exp.kind == LaurentCase::Regular || exp.kind == LaurentCase::ResonanceOnly) {
    const ComplexMatrix c1 = laurent_contour(config, -1, exp.radius, nodes);
    diff = std::max(diff, (exp.a_minus1 - c1).cwiseAbs().maxCoeff());
  }
  exp.discrepancy = diff;

  // Sample the regular part on the comparison circle.
  const int samples = 8;
  for (int m = 0; m < samples; ++m) {
    const double theta = 2.0 * pi * m / samples;
    const Complex z = exp.radius * Complex(std::cos(theta), std::sin(theta));
    Eigen::FullPivLU<ComplexMatrix> lu(gamma_matrix(config, z));
    if (!lu.isInvertible()) continue;
    const ComplexMatrix rest = lu.inverse() - exp.a_minus2 / (z * z) - exp.a_minus1 / z;
    exp.regular_sample.emplace_back(z, rest);
  }
  return exp;
}

// --- resolvent assembly ------------------------------------------------------------

Complex Anchor::evaluate(const Vec3& x) const {
  if (kind == Kind::Constant) return Complex(1.0, 0.0);
  const double r = (x - center).norm();
  if (r == 0.0) throw CoincidentWithCenter{};
  return std::exp(-lambda * r) / (four_pi * r);
}

Complex RankNOperator::kernel(const Vec3& x, const Vec3& xp) const {
  const int rows = static_cast<int>(left_anchors.size());
  const int cols = static_cast<int>(right_anchors.size());
  ComplexVector gx(rows), gxp(cols);
  for (int j = 0; j < rows; ++j) gx(j) = left_anchors[j].evaluate(x);
  for (int k = 0; k < cols; ++k) gxp(k) = right_anchors[k].evaluate(xp);
  return gx.transpose() * coefficients * gxp;
}

double RankNOperator::max_abs_coefficient() const {
  if (coefficients.size() == 0) return 0.0;
  return coefficients.cwiseAbs().maxCoeff();
}

std::pair<RankNOperator, RankNOperator> resolvent_coefficients(const Configuration& config,
                                                               double tol) {
  const LaurentExpansion exp = laurent_closed_form(config, tol);
  const int n = config.size();

  std::vector<Anchor> static_anchors;
  for (int j = 0; j < n; ++j)
    static_anchors.push_back({Anchor::Kind::Green, config.centers[j], 0.0});

  RankNOperator r_minus2;
  r_minus2.coefficients = exp.a_minus2;
  r_minus2.left_anchors = static_anchors;
  r_minus2.right_anchors = static_anchors;

  // z^{-1} coefficient of sum_{jk} Gamma^{-1}_{jk}(z) G_z^{y_j}(x) G_z^{y_k}(xp):
  // A_-1 couples the static anchors, while A_-2 couples each static anchor to
  // the z-derivative of the other side, d/dz G_z^y|_0 = i/(4 pi) * 1.  The
  // derivative rows/columns live on one extra constant anchor.
  RankNOperator r_minus1;
  std::vector<Anchor> extended = static_anchors;
  extended.push_back({Anchor::Kind::Constant, Vec3::Zero(), 0.0});
  r_minus1.left_anchors = extended;
  r_minus1.right_anchors = extended;
  ComplexMatrix m = ComplexMatrix::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = exp.a_minus1;
  const Complex dgreen(0.0, 1.0 / four_pi);
  m.block(0, n, n, 1) = dgreen * (exp.a_minus2 * ComplexVector::Ones(n));
  m.block(n, 0, 1, n) = dgreen * (ComplexVector::Ones(n).transpose() * exp.a_minus2);
  r_minus1.coefficients = m;

  return {std::move(r_minus2), std::move(r_minus1)};
}

Complex resolvent_kernel(const Configuration& config, Complex z, const Vec3& x, const Vec3& xp) {
  validate(config);
  const int n = config.size();
  for (const auto& y : config.centers)
    if ((x - y).norm() == 0.0 || (xp - y).norm() == 0.0) throw CoincidentWithCenter{};

  const ComplexMatrix gamma = gamma_matrix(config, z);
  Eigen::JacobiSVD<ComplexMatrix> svd(gamma, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * sv(0))
    throw GammaSingular("Gamma(z) is singular at the requested spectral parameter");

  ComplexVector gx(n), gxp(n);
  for (int j = 0; j < n; ++j) {
    gx(j) = green_free(z, x, config.centers[j]);
    gxp(j) = green_free(z, xp, config.centers[j]);
  }
  const ComplexVector solved = svd.solve(gxp);
  return green_free(z, x, xp) + Complex(gx.transpose() * solved);
}

}  // namespace pointint
