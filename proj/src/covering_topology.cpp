#include "monodromy/covering_topology.hpp"

#include "monodromy/errors.hpp"

#include <numeric>

namespace monodromy {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

StratumCover cyclic_cover_of_punctured_sphere(std::int64_t degree,
                                              const std::vector<std::int64_t>& residues) {
  if (degree < 1) throw InvalidParams("cover degree must be positive");
  if (residues.empty()) throw ClosedStratum("open stratum has no punctures");

  StratumCover cover;
  cover.degree = degree;
  std::int64_t sum = 0;
  std::int64_t generated = degree;
  std::int64_t punctures = 0;
  for (std::int64_t r : residues) {
    const std::int64_t red = mod(r, degree);
    cover.residues.push_back(red);
    sum += red;
    generated = std::gcd(generated, red);
    // A loop with residue r has degree / gcd(degree, r)-fold orbits.
    punctures += std::gcd(degree, red);
  }
  if (sum % degree != 0) {
    throw InvalidParams("puncture residues do not sum to zero mod " + std::to_string(degree));
  }

  const auto k = static_cast<std::int64_t>(residues.size());
  cover.components = generated;
  cover.total_euler = degree * (2 - k);
  cover.per_component.punctures = punctures / cover.components;
  cover.per_component.euler = cover.total_euler / cover.components;
  const std::int64_t twice_genus = 2 - cover.per_component.euler - cover.per_component.punctures;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw InternalAssertion("cover has inconsistent Euler characteristic");
  }
  cover.per_component.genus = twice_genus / 2;
  cover.bm_ranks = bm_ranks(cover);
  return cover;
}

StratumCover stratum_cover(const DecoratedGraph& dg, std::size_t vertex) {
  const auto& g = dg.graph;
  const auto& v = g.vertices.at(vertex);
  if (v.genus != 0) {
    throw PositiveGenusUnsupported("vertex '" + v.id + "' has genus " + std::to_string(v.genus));
  }
  std::vector<std::int64_t> residues;
  for (std::size_t nb : g.neighbours(vertex)) residues.push_back(dg.decoration.mult[nb]);
  for (std::size_t a : g.arrows_at(vertex)) residues.push_back(g.arrows[a].branch_multiplicity);
  if (residues.empty()) {
    throw ClosedStratum("vertex '" + v.id + "' meets no other component");
  }
  StratumCover cover = cyclic_cover_of_punctured_sphere(dg.decoration.mult[vertex], residues);
  cover.vertex = v.id;
  return cover;
}

StratumCover stratum_cover(const DecoratedGraph& dg, std::string_view vertex_id) {
  return stratum_cover(dg, dg.graph.require_index(vertex_id));
}

BmRanks bm_ranks(const StratumCover& cover) {
  const auto& c = cover.per_component;
  BmRanks ranks{0, cover.components * (2 * c.genus + c.punctures - 1), cover.components};
  if (ranks[2] - ranks[1] + ranks[0] != cover.total_euler) {
    throw InternalAssertion("Borel-Moore ranks disagree with the Euler characteristic of '" +
                            cover.vertex + "'");
  }
  return ranks;
}

StratumCover proper_transform_stratum(const DecoratedGraph& dg, std::size_t arrow,
                                      ProperTransformMode mode) {
  const auto& a = dg.graph.arrows.at(arrow);
  const std::int64_t base_mult = dg.mult_of(a.attached_to);

  StratumCover cover;
  cover.vertex = "arrow@" + a.attached_to;
  cover.degree = a.branch_multiplicity;
  cover.residues = {mod(base_mult, a.branch_multiplicity)};
  cover.components = std::gcd(a.branch_multiplicity, cover.residues[0]);
  // Each piece is a disk punctured at the crossing with its exceptional curve.
  cover.per_component = {0, 2, 0};
  cover.total_euler = 0;
  if (mode == ProperTransformMode::kLiteral) {
    cover.bm_ranks = bm_ranks(cover);
  } else {
    cover.bm_ranks = {0, 0, 0};
  }
  return cover;
}

}  // namespace monodromy
