#pragma once

#include "monodromy/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monodromy {

struct Vertex {
  std::string id;
  std::int64_t self_intersection = -1;
  std::int64_t genus = 0;

  bool operator==(const Vertex&) const = default;
};

/// Unordered pair of vertex ids. Parallel edges are allowed.
struct Edge {
  std::string a;
  std::string b;

  bool operator==(const Edge&) const = default;
};

/// A branch of the strict transform meeting one exceptional curve.
struct Arrow {
  std::string attached_to;
  std::int64_t branch_multiplicity = 1;

  bool operator==(const Arrow&) const = default;
};

/// Weighted resolution dual graph. Exceptional curves are vertices; branches of
/// the strict transform are arrows.
struct DualGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Arrow> arrows;

  bool operator==(const DualGraph&) const = default;

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws std::out_of_range for unknown ids.
  std::size_t require_index(std::string_view id) const;

  /// M_ii = self-intersection, M_ij = number of edges between i and j.
  RationalMatrix intersection_matrix() const;

  /// Neighbouring vertex indices, one entry per incident edge.
  std::vector<std::size_t> neighbours(std::size_t v) const;
  std::vector<std::size_t> arrows_at(std::size_t v) const;
  /// Number of punctures of the open stratum D_v minus the other components.
  std::size_t valence(std::size_t v) const;
  /// chi(D_v°) = 2 - 2 genus - valence.
  std::int64_t open_stratum_euler(std::size_t v) const;

  /// An id not yet used by any vertex, of the form "<prefix><n>".
  std::string fresh_id(std::string_view prefix = "B") const;
};

struct ValidationReport {
  bool connected = false;
  bool negative_definite = false;
  bool has_arrow = false;
  /// Leading principal minors of -M; all positive iff M is negative definite.
  std::vector<Rational> minors;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_graph(const DualGraph& g);

/// Throws ValidationError listing every violated invariant.
void require_valid(const DualGraph& g);

/// Per-vertex data derived from the graph, plus an optional ample divisor
/// H = sum b_i D_i. Arrows implicitly carry m = branch multiplicity, a = b = 0.
struct Decoration {
  std::vector<std::int64_t> mult;
  std::vector<Rational> discrepancy;
  std::optional<std::vector<Rational>> ample;
  std::vector<std::string> warnings;

  bool operator==(const Decoration& other) const {
    return mult == other.mult && discrepancy == other.discrepancy && ample == other.ample;
  }
};

struct DecoratedGraph {
  DualGraph graph;
  Decoration decoration;

  bool operator==(const DecoratedGraph&) const = default;

  std::int64_t mult_of(std::string_view id) const;
  const Rational& discrepancy_of(std::string_view id) const;
};

/// Unique solution of M m = -(arrow load). Throws NonIntegralMultiplicity or
/// NonPositiveMultiplicity when the graph cannot come from a germ resolution.
std::vector<std::int64_t> solve_multiplicities(const DualGraph& g);

/// Unique solution of sum_j M_ij a_j = -2 + 2 g_i - M_ii.
std::vector<Rational> solve_discrepancies(const DualGraph& g);

/// Validates, then solves both systems. Non-integral discrepancies and
/// non-reduced branches are recorded in `warnings`.
DecoratedGraph decorate(const DualGraph& g);

struct AmpleCheck {
  bool ample = false;
  bool all_negative = false;
  /// H . D_i = sum_j M_ij b_j, exactly.
  std::vector<Rational> intersections;
};

/// Relative Nakai-Moishezon test: H . D_i > 0 for every exceptional curve.
AmpleCheck check_ample(const DualGraph& g, const std::vector<Rational>& b);

/// Integral b with b_i < 0 and H . D_i > 0 for all i (solves M b = 1 and clears
/// denominators).
std::vector<Rational> suggest_ample(const DualGraph& g);

/// Like suggest_ample, scaled so that m * b_i / m_i is an integer for every i.
std::vector<Rational> suggest_integral_ample(const DecoratedGraph& dg, std::int64_t m);

enum class SiteKind { kEdge, kArrow, kGeneric };

/// A point to blow up: the crossing of an edge, the point where an arrow meets
/// its vertex, or a generic point of one exceptional curve.
struct BlowupSite {
  SiteKind kind = SiteKind::kEdge;
  std::size_t index = 0;
};

struct IntersectionPoint {
  BlowupSite site;
  std::int64_t mult_a = 0;
  std::int64_t mult_b = 0;
};

/// Every edge and arrow attachment together with its multiplicity pair.
std::vector<IntersectionPoint> intersection_points(const DecoratedGraph& dg);

bool is_separated(const DecoratedGraph& dg, std::int64_t m);

/// One blowup with incremental update of self-intersections, multiplicities
/// and discrepancies. Drops any attached ample divisor.
DecoratedGraph blow_up(const DecoratedGraph& dg, const BlowupSite& site);

/// Blows up crossings with m_i + m_j <= m until none remain.
DecoratedGraph separate(const DecoratedGraph& dg, std::int64_t m);

}  // namespace monodromy
