#include "pointint/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pointint/errors.hpp"

namespace pointint {

namespace {

using nlohmann::ordered_json;

bool all_finite(const Configuration& config) {
  for (const auto& y : config.centers)
    if (!y.allFinite()) return false;
  for (double a : config.alphas)
    if (!std::isfinite(a)) return false;
  return true;
}

}  // namespace

const Configuration& validate(const Configuration& config) {
  if (config.centers.empty()) throw EmptyConfiguration{};
  if (config.alphas.size() != config.centers.size())
    throw NonFiniteEntry("configuration has " + std::to_string(config.centers.size()) +
                         " centers but " + std::to_string(config.alphas.size()) + " couplings");
  if (!all_finite(config)) throw NonFiniteEntry("configuration contains a non-finite entry");
  const int n = config.size();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const double d = (config.centers[j] - config.centers[k]).norm();
      if (d < separation_floor) {
        std::ostringstream msg;
        msg << "centers " << j << " and " << k << " are " << d
            << " apart, below the separation floor " << separation_floor;
        throw DuplicateCenters(msg.str());
      }
    }
  return config;
}

double min_pairwise_distance(const Configuration& config) {
  double best = std::numeric_limits<double>::infinity();
  const int n = config.size();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      best = std::min(best, (config.centers[j] - config.centers[k]).norm());
  return best;
}

double max_pairwise_distance(const Configuration& config) {
  double best = 0.0;
  const int n = config.size();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      best = std::max(best, (config.centers[j] - config.centers[k]).norm());
  return best;
}

// --- registry ------------------------------------------------------------------

namespace {

Configuration make_single(double alpha) {
  Configuration c;
  c.centers = {Vec3(0, 0, 0)};
  c.alphas = {alpha};
  c.label = "single";
  return c;
}

Configuration make_two_center(double d) {
  Configuration c;
  c.centers = {Vec3(0, 0, 0), Vec3(d, 0, 0)};
  c.alphas = {-1.0 / (four_pi * d), -1.0 / (four_pi * d)};
  c.label = "two_center";
  return c;
}

Configuration make_triangle(double s) {
  Configuration c;
  c.centers = {Vec3(0, 0, 0), Vec3(s, 0, 0), Vec3(0.5 * s, 0.5 * std::sqrt(3.0) * s, 0)};
  c.alphas.assign(3, -1.0 / (four_pi * s));
  c.label = "equilateral_triangle";
  return c;
}

Configuration make_tetrahedron(double s) {
  Configuration c;
  c.centers = {Vec3(0, 0, 0), Vec3(s, 0, 0), Vec3(0.5 * s, 0.5 * std::sqrt(3.0) * s, 0),
               Vec3(0.5 * s, s * std::sqrt(3.0) / 6.0, s * std::sqrt(2.0 / 3.0))};
  c.alphas.assign(4, -1.0 / (four_pi * s));
  c.label = "tetrahedron";
  return c;
}

// 14-point unit-distance configuration: two 7-vertex spindles.  A spindle is
// a pair of unit rhombi (each two unit triangles) hinged at the origin, the
// far tips one unit apart.  The second spindle is built in the xz-plane and
// translated so that its hinge sits one unit above the first spindle's far
// tip.  The couplings are a uniform -1/(4 pi) matched to the unit edge
// length; callers probing this geometry are expected to override them.
Configuration make_moser_spindle() {
  // half-angle between the rhombus axes so the tips are one unit apart
  const double half = std::asin(1.0 / (2.0 * std::sqrt(3.0)));
  auto planar_spindle = [&]() {
    std::vector<Eigen::Vector2d> pts;
    pts.emplace_back(0.0, 0.0);  // hinge
    for (double phi : {-half, half}) {
      const Eigen::Vector2d u(std::cos(phi - M_PI / 6.0), std::sin(phi - M_PI / 6.0));
      const Eigen::Vector2d v(std::cos(phi + M_PI / 6.0), std::sin(phi + M_PI / 6.0));
      pts.emplace_back(u);
      pts.emplace_back(v);
      pts.emplace_back(u + v);  // far tip at distance sqrt(3) from the hinge
    }
    return pts;
  };

  const auto flat = planar_spindle();
  Configuration c;
  for (const auto& p : flat) c.centers.emplace_back(p.x(), p.y(), 0.0);
  const Vec3 tip = c.centers[3];  // far tip of the first rhombus
  for (const auto& p : flat) c.centers.emplace_back(tip.x() + p.x(), tip.y(), 1.0 + p.y());
  c.alphas.assign(c.centers.size(), -1.0 / four_pi);
  c.label = "moser_spindle";
  return c;
}

void require_params(const std::string& name, const std::vector<double>& params, int want) {
  if (static_cast<int>(params.size()) != want) {
    std::ostringstream msg;
    msg << name << " takes " << want << " parameter(s), got " << params.size();
    throw BadParameterCount(msg.str());
  }
}

void require_positive_scale(const std::string& name, double value) {
  if (!(value > 0.0)) throw ValidationFailure(name + ": scale parameter must be positive");
}

}  // namespace

std::vector<RegistryEntry> registry_entries() {
  return {
      {"single", 1, "one center at the origin with coupling alpha"},
      {"two_center", 1, "two centers at distance d, couplings -1/(4 pi d)"},
      {"equilateral_triangle", 1, "unit-style triangle with side s, couplings -1/(4 pi s)"},
      {"tetrahedron", 1, "regular tetrahedron with side s, couplings -1/(4 pi s)"},
      {"moser_spindle", 0, "14-point unit-distance double spindle, couplings -1/(4 pi)"},
  };
}

Configuration registry_get(const std::string& name, const std::vector<double>& params) {
  Configuration c;
  if (name == "single") {
    require_params(name, params, 1);
    c = make_single(params[0]);
  } else if (name == "two_center") {
    require_params(name, params, 1);
    require_positive_scale(name, params[0]);
    c = make_two_center(params[0]);
  } else if (name == "equilateral_triangle") {
    require_params(name, params, 1);
    require_positive_scale(name, params[0]);
    c = make_triangle(params[0]);
  } else if (name == "tetrahedron") {
    require_params(name, params, 1);
    require_positive_scale(name, params[0]);
    c = make_tetrahedron(params[0]);
  } else if (name == "moser_spindle") {
    require_params(name, params, 0);
    c = make_moser_spindle();
  } else {
    throw UnknownName("unknown registry entry: " + name);
  }
  validate(c);
  return c;
}

bool parse_registry_spec(const std::string& text, std::string& name, std::vector<double>& params) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return false;
  name = text.substr(0, open);
  if (name.empty()) return false;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  params.clear();
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  if (inner.empty()) return true;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const double value = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) return false;
      params.push_back(value);
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

// --- persistence -----------------------------------------------------------------

std::string to_json_string(const Configuration& config) {
  ordered_json j;
  j["centers"] = ordered_json::array();
  for (const auto& y : config.centers) j["centers"].push_back({y.x(), y.y(), y.z()});
  j["alphas"] = config.alphas;
  if (!config.label.empty()) j["label"] = config.label;
  return j.dump(2);
}

Configuration from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseFailure(std::string("malformed configuration JSON: ") + e.what());
  }
  Configuration c;
  try {
    if (!j.contains("centers") || !j.contains("alphas"))
      throw ParseFailure("configuration JSON must contain \"centers\" and \"alphas\"");
    for (const auto& row : j.at("centers")) {
      if (!row.is_array() || row.size() != 3)
        throw ParseFailure("each center must be an [x, y, z] triple");
      c.centers.emplace_back(row[0].get<double>(), row[1].get<double>(), row[2].get<double>());
    }
    c.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("label")) c.label = j.at("label").get<std::string>();
  } catch (const ParseFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseFailure(std::string("malformed configuration JSON: ") + e.what());
  }
  if (c.alphas.size() != c.centers.size()) {
    std::ostringstream msg;
    msg << "arity mismatch: " << c.centers.size() << " centers vs " << c.alphas.size()
        << " alphas";
    throw ParseFailure(msg.str());
  }
  validate(c);
  return c;
}

void save(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOFailure("cannot open " + path + " for writing");
  out << to_json_string(config) << '\n';
  if (!out) throw IOFailure("failed writing " + path);
}

Configuration load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOFailure("cannot open " + path + " for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

}  // namespace pointint
