#pragma once

#include <string>
#include <vector>

#include "pointint/types.hpp"

namespace pointint {

/// A finite set of interaction centers in R^3 with one real coupling
/// constant per center.  Couplings are inverse scattering lengths; a large
/// positive alpha means a nearly transparent center.
struct Configuration {
  std::vector<Vec3> centers;
  std::vector<double> alphas;
  std::string label;

  int size() const { return static_cast<int>(centers.size()); }
};

/// Configurations with a pair of centers closer than this are rejected:
/// the pair Green function entries blow up and the model loses meaning.
inline constexpr double separation_floor = 1e-9;

/// Checks invariants (non-empty, finite entries, matching arity, pairwise
/// distinct centers) and returns the configuration unchanged.
/// Throws EmptyConfiguration, NonFiniteEntry, DuplicateCenters.
const Configuration& validate(const Configuration& config);

double min_pairwise_distance(const Configuration& config);
double max_pairwise_distance(const Configuration& config);

// --- named benchmark geometries ----------------------------------------------

struct RegistryEntry {
  std::string name;
  int parameter_count;
  std::string synopsis;
};

std::vector<RegistryEntry> registry_entries();

/// Builds a named configuration.  Names and parameters:
///   single(alpha), two_center(d), equilateral_triangle(s), tetrahedron(s),
///   moser_spindle().
/// For two_center/triangle/tetrahedron the couplings default to -1/(4*pi*scale),
/// the choice that pins a zero-energy eigenvalue on those geometries.
/// Throws UnknownName, BadParameterCount.
Configuration registry_get(const std::string& name, const std::vector<double>& params = {});

/// Parses a spec like "tetrahedron(1)" or "moser_spindle()" into a registry call.
/// Returns false if the text does not look like a registry spec at all.
bool parse_registry_spec(const std::string& text, std::string& name, std::vector<double>& params);

// --- persistence --------------------------------------------------------------

/// JSON schema: {"centers": [[x,y,z],...], "alphas": [...], "label": "..."}.
/// Numbers are written with full round-trip precision, so load(save(c)) == c
/// bit-exactly.  Throws IOFailure.
void save(const Configuration& config, const std::string& path);

/// Throws IOFailure (unreadable), ParseFailure (malformed JSON or arity
/// mismatch), or a ValidationFailure subclass (invalid configuration).
Configuration load(const std::string& path);

std::string to_json_string(const Configuration& config);
Configuration from_json_string(const std::string& text);

}  // namespace pointint
