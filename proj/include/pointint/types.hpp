#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace pointint {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double four_pi = 4.0 * pi;
inline constexpr double eight_pi = 8.0 * pi;

/// Default relative tolerance for rank / kernel decisions.
inline constexpr double default_rank_tol = 1e-10;

}  // namespace pointint
