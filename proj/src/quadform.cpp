#include "pointint/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pointint/errors.hpp"
#include "pointint/quadrature.hpp"

namespace pointint {

double gamma2_form(const std::vector<Vec3>& centers, const RealVector& v) {
  const int n = static_cast<int>(centers.size());
  if (v.size() != n) throw std::invalid_argument("gamma2_form: dimension mismatch");
  double sum = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) sum += (centers[j] - centers[k]).norm() * v(j) * v(k);
  return sum / eight_pi;
}

double projected_form_oracle(const RealVector& yt, const RealVector& v) {
  const int n = static_cast<int>(yt.size());
  if (v.size() != n) throw std::invalid_argument("projected_form_oracle: dimension mismatch");
  const double total = v.sum();
  if (std::abs(total) > 1e-12 * (1.0 + v.cwiseAbs().sum()))
    throw SumNotZero("projected form requires a component-sum-zero vector");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return yt(a) < yt(b); });

  // sum_{jk} |yt_j - yt_k| v_j v_k = -2 * sum over gaps of
  //   (yt_{(m+1)} - yt_{(m)}) * (sum of v above the gap)^2,
  // using that the sums above and below a gap are opposite.  Ties give
  // zero-length gaps and contribute nothing.
  double result = 0.0;
  double above = total;
  for (int m = 0; m + 1 < n; ++m) {
    above -= v(order[m]);
    const double gap = yt(order[m + 1]) - yt(order[m]);
    result -= 2.0 * gap * above * above;
  }
  return result;
}

double sphere_average_constant(int order, const Vec3& y) {
  if (order < 8) throw std::invalid_argument("sphere_average_constant: order must be >= 8");
  const double norm_y = y.norm();
  if (norm_y == 0.0) return 0.0;

  // Frame adapted to y, so the integrand kink sits exactly on the equator
  // u = cos(theta) = 0 where the composite GL rule is split.
  const Vec3 e3 = y / norm_y;
  Vec3 seed = std::abs(e3.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (seed - seed.dot(e3) * e3).normalized();
  const Vec3 e2 = e3.cross(e1);

  GaussLegendre upper = gauss_legendre(order, 0.0, 1.0);
  GaussLegendre lower = gauss_legendre(order, -1.0, 0.0);
  std::vector<double> u_nodes = lower.nodes;
  u_nodes.insert(u_nodes.end(), upper.nodes.begin(), upper.nodes.end());
  std::vector<double> u_weights = lower.weights;
  u_weights.insert(u_weights.end(), upper.weights.begin(), upper.weights.end());

  const int m_phi = 2 * order;
  double integral = 0.0;
  for (size_t i = 0; i < u_nodes.size(); ++i) {
    const double u = u_nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    double ring = 0.0;
    for (int m = 0; m < m_phi; ++m) {
      const double phi = 2.0 * pi * m / m_phi;
      const Vec3 w = s * (std::cos(phi) * e1 + std::sin(phi) * e2) + u * e3;
      ring += std::abs(w.dot(y));
    }
    integral += u_weights[i] * ring * (2.0 * pi / m_phi);
  }
  return integral;
}

}  // namespace pointint
