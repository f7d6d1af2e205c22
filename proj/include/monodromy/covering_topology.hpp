#pragma once

#include "monodromy/resolution_graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace monodromy {

/// Topology of one connected piece of a cyclic cover of a punctured sphere.
struct ComponentTopology {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  std::int64_t euler = 0;

  bool operator==(const ComponentTopology&) const = default;
};

/// Borel-Moore ranks [h0, h1, h2] of an open surface (totals over components).
using BmRanks = std::array<std::int64_t, 3>;

/// The canonical m_i-fold cover B_i° -> D_i° of an open stratum. All components
/// of a connected-base cyclic cover are homeomorphic, so one record describes
/// each of them.
struct StratumCover {
  std::string vertex;
  std::int64_t degree = 0;
  std::int64_t components = 0;
  ComponentTopology per_component;
  std::int64_t total_euler = 0;
  BmRanks bm_ranks{0, 0, 0};
  /// Monodromy residue around each puncture of the base, in Z/degree.
  std::vector<std::int64_t> residues;
};

/// Cover over the open stratum of exceptional vertex `vertex`. Puncture
/// residues are the neighbouring multiplicities (branch multiplicities for
/// arrows) reduced mod m_i.
StratumCover stratum_cover(const DecoratedGraph& dg, std::size_t vertex);
StratumCover stratum_cover(const DecoratedGraph& dg, std::string_view vertex_id);

/// Closed-form cover of a sphere with one puncture per residue.
StratumCover cyclic_cover_of_punctured_sphere(std::int64_t degree,
                                              const std::vector<std::int64_t>& residues);

/// h0 = 0, h2 = components, h1 = sum over components of (2g + n - 1).
BmRanks bm_ranks(const StratumCover& cover);

enum class ProperTransformMode {
  /// Borel-Moore homology of the proper-transform stratum vanishes.
  kVanishing,
  /// Punctured-disk pieces, for experiments outside the Milnor ball.
  kLiteral,
};

/// Stratum record for an arrow (branch of the strict transform).
StratumCover proper_transform_stratum(const DecoratedGraph& dg, std::size_t arrow,
                                      ProperTransformMode mode = ProperTransformMode::kVanishing);

}  // namespace monodromy
