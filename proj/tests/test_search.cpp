#include <doctest.h>

#include <random>

#include "pointint/errors.hpp"
#include "pointint/search.hpp"
#include "pointint/zero_modes.hpp"
#include "test_util.hpp"

using namespace pointint;
using testutil::random_config;
using testutil::random_sum_zero;

TEST_CASE("solve_alpha_for_kernel on worked examples") {
  SUBCASE("antisymmetric pair") {
    RealVector c(2);
    c << 1.0, -1.0;
    const AlphaSolution sol = solve_alpha_for_kernel({Vec3(0, 0, 0), Vec3(1, 0, 0)}, c);
    CHECK(sol.alphas(0) == doctest::Approx(-1.0 / four_pi));
    CHECK(sol.alphas(1) == doctest::Approx(-1.0 / four_pi));
    CHECK(sol.constrained[0]);
  }
  SUBCASE("triangle (1,1,-2)") {
    const Configuration tri = registry_get("equilateral_triangle", {1.0});
    RealVector c(3);
    c << 1.0, 1.0, -2.0;
    const AlphaSolution sol = solve_alpha_for_kernel(tri.centers, c);
    for (int j = 0; j < 3; ++j) CHECK(sol.alphas(j) == doctest::Approx(-1.0 / four_pi));
  }
  SUBCASE("symmetric pair gives a resonance") {
    RealVector c(2);
    c << 1.0, 1.0;
    const AlphaSolution sol = solve_alpha_for_kernel({Vec3(0, 0, 0), Vec3(1, 0, 0)}, c);
    CHECK(sol.alphas(0) == doctest::Approx(1.0 / four_pi));
    Configuration config;
    config.centers = {Vec3(0, 0, 0), Vec3(1, 0, 0)};
    config.alphas = {sol.alphas(0), sol.alphas(1)};
    const ZeroModeReport report = classify_zero_energy(config);
    CHECK(report.r == 1);
    CHECK(report.e == 0);
  }
  SUBCASE("zero component with inconsistent row is rejected") {
    // scalene triangle: G_13 != G_23, so c = (1,-1,0) cannot be extended
    std::vector<Vec3> scalene = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.2, 1.3, 0)};
    RealVector c(3);
    c << 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(solve_alpha_for_kernel(scalene, c), InconsistentZeroComponent);
  }
  SUBCASE("zero component with a consistent row leaves alpha free") {
    // isoceles: distances from the apex to the base pair agree
    std::vector<Vec3> isoceles = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, 1.3, 0)};
    RealVector c(3);
    c << 1.0, -1.0, 0.0;
    const AlphaSolution sol = solve_alpha_for_kernel(isoceles, c);
    CHECK_FALSE(sol.constrained[2]);
    CHECK(sol.constrained[0]);
  }
}

TEST_CASE("solved couplings place c in the kernel") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 5;
    const Configuration geometry = random_config(rng, n);
    RealVector c = random_sum_zero(rng, n);
    if (c.cwiseAbs().minCoeff() < 1e-3) continue;  // keep full support
    const AlphaSolution sol = solve_alpha_for_kernel(geometry.centers, c);
    Configuration config = geometry;
    for (int j = 0; j < n; ++j) config.alphas[j] = sol.alphas(j);
    const GammaTaylor t = gamma_taylor(config);
    CHECK((t.gamma0 * c).norm() <= 1e-12 * (1.0 + c.norm()));
    CHECK(classify_zero_energy(config).e >= 1);
  }
}

TEST_CASE("scan_real_axis") {
  SUBCASE("single(0): |Gamma| = z/(4 pi), minimum at the left endpoint") {
    const ScanResult scan = scan_real_axis(registry_get("single", {0.0}), 0.01, 10.0, 100);
    CHECK(scan.argmin == doctest::Approx(0.01));
    CHECK(scan.min_singular_value == doctest::Approx(0.01 / four_pi));
  }
  SUBCASE("registry configurations stay regular on the real axis") {
    for (const char* name : {"two_center", "tetrahedron"}) {
      const ScanResult scan = scan_real_axis(registry_get(name, {1.0}), 0.01, 10.0, 1000);
      CHECK(scan.min_singular_value > 1e-6);
      CHECK(scan.grid.size() == 1000);
    }
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(scan_real_axis(registry_get("single", {0.0}), -1.0, 1.0, 10), Error);
    CHECK_THROWS_AS(scan_real_axis(registry_get("single", {0.0}), 1.0, 0.5, 10), Error);
  }
}

TEST_CASE("optimizer reaches the known maxima") {
  SUBCASE("three centers: e = 2 at a near-equilateral triangle") {
    const SearchResult result = maximize_zero_multiplicity(3, 10000, 7);
    CHECK(result.e == 2);
    // all pairwise distances equal for the polished geometry
    const auto& y = result.config.centers;
    const double d01 = (y[0] - y[1]).norm();
    CHECK((y[0] - y[2]).norm() == doctest::Approx(d01).epsilon(1e-6));
    CHECK((y[1] - y[2]).norm() == doctest::Approx(d01).epsilon(1e-6));
  }
  SUBCASE("four centers: e = 3 at a near-regular tetrahedron") {
    const SearchResult result = maximize_zero_multiplicity(4, 10000, 7);
    CHECK(result.e == 3);
  }
  SUBCASE("two centers: e = 1 immediately") {
    CHECK(maximize_zero_multiplicity(2, 200, 1).e == 1);
  }
}

TEST_CASE("optimizer determinism and bounds") {
  const SearchResult a = maximize_zero_multiplicity(3, 3000, 12345);
  const SearchResult b = maximize_zero_multiplicity(3, 3000, 12345);
  CHECK(a.e == b.e);
  CHECK(a.r == b.r);
  CHECK(a.objective == b.objective);
  REQUIRE(a.config.size() == b.config.size());
  for (int j = 0; j < a.config.size(); ++j) {
    CHECK(a.config.centers[j] == b.config.centers[j]);
    CHECK(a.config.alphas[j] == b.config.alphas[j]);
  }
  // a sum-zero kernel inside C^N can never exceed N-1 dimensions
  for (int seed : {1, 2, 3}) {
    const SearchResult r = maximize_zero_multiplicity(3, 500, seed);
    CHECK(r.e <= 2);
    CHECK_NOTHROW(validate(r.config));
  }
}
