#pragma once

#include <vector>

#include "pointint/types.hpp"

namespace pointint {

/// Quadratic form of the distance matrix,
///   (8 pi)^{-1} sum_{jk} |y_j - y_k| v_j v_k,
/// which is <= 0 (strictly, for v != 0) whenever sum_j v_j = 0.
double gamma2_form(const std::vector<Vec3>& centers, const RealVector& v);

/// One-dimensional reduction: sum_{jk} |yt_j - yt_k| v_j v_k for projected
/// centers yt, computed as -2 * sum over consecutive sorted gaps of
/// gap * (partial sum above the gap)^2.  Requires sum v = 0 (SumNotZero);
/// ties produce zero-length gaps and need no special handling.
double projected_form_oracle(const RealVector& yt, const RealVector& v);

/// Quadrature estimate of the sphere integral \int_{S^2} |<w, y>| dw, which
/// equals c |y| with c = 2 pi.  Product rule: composite Gauss-Legendre in
/// cos(theta) split at the integrand kink, uniform in azimuth, in a frame
/// adapted to y.  Returns the raw integral (so c itself for unit y).
double sphere_average_constant(int order, const Vec3& y = Vec3::UnitZ());

}  // namespace pointint
