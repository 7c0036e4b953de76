#pragma once

#include "pointint/errors.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// Free-space kernel G_z^y(x) = e^{i z |x-y|} / (4 pi |x-y|).
/// The formula is entire in z; the physically meaningful region is Im z >= 0.
inline Complex green_free(Complex z, const Vec3& x, const Vec3& y) {
  const double r = (x - y).norm();
  if (r == 0.0) throw CoincidentPoints{};
  return std::exp(Complex(0.0, 1.0) * z * r) / (four_pi * r);
}

/// Pair value G_z^{y y'} used in the interaction matrix: equals the free
/// kernel for distinct centers and 0 by convention for y == y'.
inline Complex green_pair(Complex z, const Vec3& ya, const Vec3& yb) {
  const double r = (ya - yb).norm();
  if (r == 0.0) return Complex(0.0, 0.0);
  return std::exp(Complex(0.0, 1.0) * z * r) / (four_pi * r);
}

}  // namespace pointint
