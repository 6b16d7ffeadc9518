#ifndef COOPCOLOR_IO_HPP
#define COOPCOLOR_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "coopcolor/bounds.hpp"
#include "coopcolor/graph.hpp"
#include "coopcolor/randomized.hpp"
#include "coopcolor/solver.hpp"

namespace coopcolor {

using Json = nlohmann::json;

// Wire formats:
//   family     {"n": int, "graphs": [[[u, v], ...], ...]}
//   adapted    {"n": int, "m": int, "edges": [[u, v, c], ...]}
//   assignment {"colors": [c0, ..., c_{n-1}]}
// Readers throw InputError on anything that does not match.

Json family_to_json(const GraphFamily& family);
GraphFamily family_from_json(const Json& j);

Json adapted_to_json(const EdgeColoredMultigraph& ecm);
EdgeColoredMultigraph adapted_from_json(const Json& j);

Json assignment_to_json(const CoverAssignment& a);
CoverAssignment assignment_from_json(const Json& j);

enum class InstanceFormat { family, adapted };

/// "graphs" selects the family schema, "edges" the adapted one.
InstanceFormat detect_format(const Json& j);

/// Either schema, returned as a family.
GraphFamily instance_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);

Json outcome_to_json(const SolverOutcome& outcome, bool with_witness, bool with_stats);
Json violations_to_json(const std::vector<Violation>& violations);
Json report_to_json(const SampleReport& report);
Json bounds_to_json(const ClassBounds& b);

/// Graphviz rendering; color c uses palette entry (c - 1) mod 8, each entry a
/// distinct (pen color, line style) pair.
std::string to_dot(const EdgeColoredMultigraph& ecm);

}  // namespace coopcolor

#endif  // COOPCOLOR_IO_HPP
