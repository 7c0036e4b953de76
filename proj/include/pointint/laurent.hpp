#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointint/config.hpp"
#include "pointint/gamma.hpp"
#include "pointint/zero_modes.hpp"

namespace pointint {

/// Inverts A through the projection identity
///   B = P - P (A+P)^{-1} P,
///   A^{-1} = (A+P)^{-1} + (A+P)^{-1} P (B|ran P)^{-1} P (A+P)^{-1},
/// where P is an orthogonal projection with A+P invertible.  A singular B on
/// ran P signals that A itself is singular.
/// Throws APlusPSingular (condition number above 1e12) or BSingular.
ComplexMatrix jn_invert(const ComplexMatrix& a, const ComplexMatrix& p);

enum class LaurentCase { Regular, ResonanceOnly, PureEigenvalue, Mixed };
enum class LaurentMethod { closed_form, contour, both };

const char* to_string(LaurentCase c);
const char* to_string(LaurentMethod m);

/// Singular part of Gamma(z)^{-1} = A_-2 / z^2 + A_-1 / z + O(1) near z = 0.
struct LaurentExpansion {
  ComplexMatrix a_minus2;
  ComplexMatrix a_minus1;
  LaurentCase kind = LaurentCase::Regular;
  LaurentMethod method = LaurentMethod::closed_form;
  double radius = 0.0;  // contour radius actually used (0 if none)
  std::optional<double> discrepancy;  // closed vs contour, comparable coefficients only
  // samples of Gamma(z)^{-1} - A_-2/z^2 - A_-1/z on |z| = radius
  std::vector<std::pair<Complex, ComplexMatrix>> regular_sample;
  std::vector<std::string> notes;
};

/// Projection-based closed forms:
///   Regular:        A_-2 = A_-1 = 0.
///   ResonanceOnly:  A_-1 = P (P Gamma1 P | ran P)^{-1} P, P onto Ker Gamma0.
///   PureEigenvalue: A_-2 = P (P Gamma2 P | ran P)^{-1} P, P onto
///                   Ker Gamma0 ∩ Ker Gamma1; A_-1 reported as 0.
///   Mixed:          A_-2 as above; no closed form for A_-1, so it is
///                   extracted by the contour method.
/// Throws RestrictedBlockSingular when a restricted block is singular, which
/// indicates a tolerance misclassification.
LaurentExpansion laurent_closed_form(const Configuration& config, double tol = default_rank_tol);

/// Coefficient A_k = (2 pi i)^{-1} \oint_{|z|=radius} Gamma(z)^{-1} z^{-k-1} dz,
/// k in {-2,-1,0}, by trapezoidal quadrature on the circle (spectrally
/// accurate).  Halves the radius until two successive radii agree to 1e-9;
/// throws SingularOnContour / NoConvergence after 8 halvings.
/// radius <= 0 selects default_contour_radius.
ComplexMatrix laurent_contour(const Configuration& config, int k,
                              double radius = 0.0, int nodes = 256);

/// Half the distance to the nearest pole of Gamma^{-1} on the positive
/// imaginary axis, capped at 0.1.
double default_contour_radius(const Configuration& config);

/// One-stop computation used by the CLI; with LaurentMethod::both the
/// discrepancy over the comparable coefficients (A_-2 always, A_-1 in the
/// Regular/ResonanceOnly cases) is filled in.
LaurentExpansion compute_laurent(const Configuration& config,
                                 LaurentMethod method = LaurentMethod::both,
                                 double tol = default_rank_tol,
                                 double radius = 0.0, int nodes = 256);

/// Finite-rank operator sum_{jk} M_{jk} |g_j><conj g_k| encoded by its
/// coefficient matrix and anchor functions.  Anchors are either decaying
/// kernels e^{-lambda |x-y|} / (4 pi |x-y|) or the constant function 1.
struct Anchor {
  enum class Kind { Green, Constant } kind = Kind::Green;
  Vec3 center = Vec3::Zero();
  double lambda = 0.0;

  Complex evaluate(const Vec3& x) const;
};

struct RankNOperator {
  ComplexMatrix coefficients;
  std::vector<Anchor> left_anchors;
  std::vector<Anchor> right_anchors;

  /// Kernel value sum_{jk} M_{jk} g_j(x) g_k(xp).
  Complex kernel(const Vec3& x, const Vec3& xp) const;
  double max_abs_coefficient() const;
  bool is_zero(double threshold) const { return max_abs_coefficient() <= threshold; }
};

/// Singular part of the full resolvent near z = 0:
///   (-Delta_{alpha,Y} - z^2)^{-1} = R_-2 / z^2 + R_-1 / z + R_0(z).
/// R_-2 carries A_-2 over the static anchors G_0^{y_j}.  R_-1 combines A_-1
/// over the same anchors with the product-rule coupling of A_-2 to the
/// z-derivative of the anchors at 0, which is the constant i/(4 pi); the
/// coupling rows live on an extra constant anchor.
std::pair<RankNOperator, RankNOperator> resolvent_coefficients(const Configuration& config,
                                                               double tol = default_rank_tol);

/// Full resolvent kernel at spectral parameter z^2:
///   G_z(x - xp) + sum_{jk} (Gamma(z)^{-1})_{jk} G_z^{y_j}(x) G_z^{y_k}(xp).
/// Throws GammaSingular near poles and CoincidentWithCenter if x or xp hits a center.
Complex resolvent_kernel(const Configuration& config, Complex z, const Vec3& x, const Vec3& xp);

}  // namespace pointint
