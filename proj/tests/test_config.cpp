#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pointint/config.hpp"
#include "pointint/errors.hpp"

using namespace pointint;

namespace {

std::string temp_path(const char* name) {
  return std::string("pointint_test_") + name + ".json";
}

}  // namespace

TEST_CASE("validate accepts a single center") {
  Configuration c;
  c.centers = {Vec3(0, 0, 0)};
  c.alphas = {0.0};
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("validate rejects coincident and near-coincident centers") {
  Configuration c;
  c.centers = {Vec3(0, 0, 0), Vec3(0, 0, 0)};
  c.alphas = {1.0, 1.0};
  CHECK_THROWS_AS(validate(c), DuplicateCenters);
  c.centers[1] = Vec3(5e-10, 0, 0);
  CHECK_THROWS_AS(validate(c), DuplicateCenters);
  c.centers[1] = Vec3(2e-9, 0, 0);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("validate rejects empty and non-finite configurations") {
  Configuration c;
  CHECK_THROWS_AS(validate(c), EmptyConfiguration);
  c.centers = {Vec3(0, 0, 0)};
  c.alphas = {std::nan("")};
  CHECK_THROWS_AS(validate(c), NonFiniteEntry);
  c.alphas = {0.0, 1.0};
  CHECK_THROWS_AS(validate(c), NonFiniteEntry);  // arity mismatch
}

TEST_CASE("two_center defaults reproduce the -1/(4 pi d) coupling") {
  const Configuration c = registry_get("two_center", {1.0});
  REQUIRE(c.size() == 2);
  CHECK(c.centers[0] == Vec3(0, 0, 0));
  CHECK(c.centers[1] == Vec3(1, 0, 0));
  CHECK(c.alphas[0] == doctest::Approx(-0.0795775).epsilon(1e-5));
  CHECK(c.alphas[1] == c.alphas[0]);
}

TEST_CASE("triangle and tetrahedron have the advertised geometry") {
  const Configuration tri = registry_get("equilateral_triangle", {1.0});
  REQUIRE(tri.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(tri.alphas[j] == doctest::Approx(-1.0 / four_pi));
    for (int k = j + 1; k < 3; ++k)
      CHECK((tri.centers[j] - tri.centers[k]).norm() == doctest::Approx(1.0));
  }
  const Configuration tet = registry_get("tetrahedron", {1.0});
  REQUIRE(tet.size() == 4);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      CHECK((tet.centers[j] - tet.centers[k]).norm() == doctest::Approx(1.0));
}

TEST_CASE("moser spindle ships 14 distinct points with unit edges") {
  const Configuration spindle = registry_get("moser_spindle");
  CHECK(spindle.size() == 14);
  CHECK_NOTHROW(validate(spindle));
  int unit_edges = 0;
  for (int j = 0; j < 14; ++j)
    for (int k = j + 1; k < 14; ++k)
      if (std::abs((spindle.centers[j] - spindle.centers[k]).norm() - 1.0) < 1e-12) ++unit_edges;
  CHECK(unit_edges >= 23);  // 11 per spindle plus the connecting edge
}

TEST_CASE("registry errors") {
  CHECK_THROWS_AS(registry_get("pentagon", {1.0}), UnknownName);
  CHECK_THROWS_AS(registry_get("two_center", {}), BadParameterCount);
  CHECK_THROWS_AS(registry_get("moser_spindle", {1.0}), BadParameterCount);
}

TEST_CASE("every registry entry validates") {
  CHECK_NOTHROW(validate(registry_get("single", {0.0})));
  CHECK_NOTHROW(validate(registry_get("single", {-1.0})));
  CHECK_NOTHROW(validate(registry_get("two_center", {1.0})));
  CHECK_NOTHROW(validate(registry_get("equilateral_triangle", {1.0})));
  CHECK_NOTHROW(validate(registry_get("tetrahedron", {1.0})));
  CHECK_NOTHROW(validate(registry_get("moser_spindle")));
}

TEST_CASE("registry spec parsing") {
  std::string name;
  std::vector<double> params;
  CHECK(parse_registry_spec("tetrahedron(1)", name, params));
  CHECK(name == "tetrahedron");
  REQUIRE(params.size() == 1);
  CHECK(params[0] == 1.0);
  CHECK(parse_registry_spec("single(-0.5)", name, params));
  CHECK(params[0] == -0.5);
  CHECK(parse_registry_spec("moser_spindle()", name, params));
  CHECK(params.empty());
  CHECK_FALSE(parse_registry_spec("some/file.json", name, params));
  CHECK_FALSE(parse_registry_spec("plain_name", name, params));
}

TEST_CASE("save/load round-trips bit exactly") {
  Configuration c = registry_get("two_center", {1.0});
  c.centers[1] = Vec3(1.0 / 3.0, 1e-17, -0.1);
  c.alphas = {-0.07957747154594767, 0.1 + 0.2};
  c.label = "round-trip";
  validate(c);

  const std::string path = temp_path("roundtrip");
  save(c, path);
  const Configuration back = load(path);
  REQUIRE(back.size() == c.size());
  for (int j = 0; j < c.size(); ++j) {
    CHECK(back.centers[j].x() == c.centers[j].x());
    CHECK(back.centers[j].y() == c.centers[j].y());
    CHECK(back.centers[j].z() == c.centers[j].z());
    CHECK(back.alphas[j] == c.alphas[j]);
  }
  CHECK(back.label == c.label);
  std::remove(path.c_str());
}

TEST_CASE("load rejects malformed files") {
  const std::string path = temp_path("malformed");

  SUBCASE("arity mismatch is a parse failure") {
    std::ofstream(path) << R"({"centers": [[0,0,0],[1,0,0]], "alphas": [1,1,1]})";
    CHECK_THROWS_AS(load(path), ParseFailure);
  }
  SUBCASE("broken JSON is a parse failure") {
    std::ofstream(path) << "{\"centers\": [[0,0";
    CHECK_THROWS_AS(load(path), ParseFailure);
  }
  SUBCASE("coincident centers fail validation") {
    std::ofstream(path) << R"({"centers": [[0,0,0],[0,0,0]], "alphas": [1,1]})";
    CHECK_THROWS_AS(load(path), ValidationFailure);
  }
  SUBCASE("missing file is an io failure") {
    CHECK_THROWS_AS(load("definitely_missing_6512.json"), IOFailure);
  }
  std::remove(path.c_str());
}
