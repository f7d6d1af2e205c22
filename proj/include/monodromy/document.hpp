#pragma once

#include "monodromy/resolution_graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monodromy {

inline constexpr const char* kSchemaVersion = "1";

/// Serialized input: a dual graph plus optional ample override and tags.
///
///   {
///     "schema_version": "1",
///     "vertices": [{"id": "D1", "self_intersection": -3, "genus": 0}, ...],
///     "edges": [["D1", "D3"], ...],
///     "arrows": [{"attached_to": "D3", "branch_multiplicity": 1}],
///     "ample": {"D1": "-13/3", ...},
///     "tags": {"first_blowup": "D1"}
///   }
///
/// `genus`, `branch_multiplicity`, `ample` and `tags` are optional. Unknown
/// keys are rejected.
struct GraphDocument {
  std::string schema_version = kSchemaVersion;
  DualGraph graph;
  std::optional<std::vector<Rational>> ample;
  std::optional<std::string> first_blowup;

  bool operator==(const GraphDocument&) const = default;
};

/// Throws SchemaError (with line/column or field path) for malformed input
/// and ValidationError when the graph violates its invariants.
GraphDocument parse_graph(std::string_view text);

/// Canonical text form; parse_graph(serialize_graph(d)) == d.
std::string serialize_graph(const GraphDocument& doc);

/// Built-in germs: "cusp", "smooth", "xk-yk" {k}, "xp-yq" {p, q}. Throws
/// InvalidParams on bad parameters.
GraphDocument germ_generator(std::string_view name, const std::vector<std::int64_t>& params = {});

/// Parses "xk-yk 4", "xp-yq:2,3" or "cusp".
GraphDocument germ_from_spec(std::string_view spec);

/// Minimal embedded resolution of x^p - y^q (p, q >= 2 coprime) built by
/// tracking the blowup sequence of the Euclidean algorithm on (p, q).
DualGraph resolve_one_pair(std::int64_t p, std::int64_t q);

/// Structural equality up to vertex relabelling (brute force; small graphs).
bool isomorphic(const DualGraph& a, const DualGraph& b);

}  // namespace monodromy
