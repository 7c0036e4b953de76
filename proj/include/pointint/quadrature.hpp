#pragma once

#include <utility>
#include <vector>

namespace pointint {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.  n <= a few hundred is fine.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Same rule mapped to [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace pointint
