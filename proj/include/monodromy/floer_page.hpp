#pragma once

#include "monodromy/covering_topology.hpp"
#include "monodromy/resolution_graph.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace monodromy {

struct Bidegree {
  std::int64_t p = 0;
  std::int64_t q = 0;

  std::int64_t total() const { return p + q; }
  auto operator<=>(const Bidegree&) const = default;
};

struct PageContribution {
  std::string vertex;
  std::int64_t bm_degree = 0;
  std::int64_t rank = 0;

  bool operator==(const PageContribution&) const = default;
};

/// Action of a fixed-point family, (t b b_i + eps) m / m_i, with eps an
/// infinitesimal: compared lexicographically on (m b_i / m_i, m / m_i).
struct ActionKey {
  Rational column;
  Rational tiebreak;

  bool operator==(const ActionKey& o) const { return column == o.column && tiebreak == o.tiebreak; }
  std::strong_ordering operator<=>(const ActionKey& o) const {
    if (int c = cmp(column, o.column); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(tiebreak, o.tiebreak); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// First page of the action spectral sequence for the m-th iterate.
struct SpectralPage {
  std::int64_t m = 1;
  std::int64_t n = 2;
  std::map<Bidegree, std::vector<PageContribution>> entries;
  std::map<std::string, std::int64_t> cz;
  std::map<std::string, ActionKey> action_key;
  /// Column index p of every contributing family, including those whose
  /// homology vanishes.
  std::map<std::string, std::int64_t> column_of;

  bool operator==(const SpectralPage&) const = default;

  std::int64_t rank_at(Bidegree pos) const;
  std::int64_t total_rank() const;
  /// True when no position carries a nonzero rank.
  bool empty() const;
  std::set<std::int64_t> columns() const;
  /// sum over positions of (-1)^(p+q+n-1) rank; equals the Lefschetz number.
  std::int64_t euler_characteristic() const;
};

struct PageOptions {
  std::int64_t n = 2;
  ProperTransformMode arrows = ProperTransformMode::kVanishing;
  /// Vertex id -> Borel-Moore ranks [h0, h1, ...], replacing the surface
  /// computation. Required for every contributing vertex when n != 2.
  std::map<std::string, std::vector<std::int64_t>> injected_ranks;
};

/// 2 (m / m_i)(a_i + 1) - 2m. Requires m_i | m.
std::int64_t cz_index(const DecoratedGraph& dg, std::size_t vertex, std::int64_t m);

/// Requires an m-separated decoration carrying an ample divisor with
/// m b_i / m_i integral for every i with m_i | m.
SpectralPage assemble_page(const DecoratedGraph& dg, std::int64_t m, const PageOptions& options = {});

struct ActionEntry {
  std::string vertex;
  ActionKey key;
  /// Position in the ascending order; equal keys share a position.
  std::size_t position = 0;
};

/// Exceptional vertices with m_i | m sorted by ascending action.
std::vector<ActionEntry> action_order(const DecoratedGraph& dg, std::int64_t m);

struct ForbiddenArrow {
  std::int64_t source_column = 0;
  std::int64_t target_column = 0;

  auto operator<=>(const ForbiddenArrow&) const = default;
};

/// Directed column pairs (p -> p') along which no differential can be nonzero
/// because every family in p has strictly smaller action than every family in
/// p'.
std::vector<ForbiddenArrow> forbidden_arrows(const SpectralPage& page,
                                             const std::vector<ActionEntry>& order);

/// Vertex pairs (i, j) with ac(i) < ac(j): no trajectory from i to j.
std::vector<std::pair<std::string, std::string>> forbidden_vertex_pairs(
    const std::vector<ActionEntry>& order);

enum class DifferentialConvention {
  /// d_r : E_{p,q} -> E_{p-r, q+r-1}
  kHomological,
  /// d_r : E_{p,q} -> E_{p+r, q-r+1}
  kCohomological,
};

Bidegree differential_target(Bidegree source, std::int64_t r, DifferentialConvention convention);

struct DifferentialArrow {
  std::int64_t r = 1;
  Bidegree source;
  Bidegree target;

  auto operator<=>(const DifferentialArrow&) const = default;
};

/// Differentials d_r between nonzero positions of E^1 that are not excluded by
/// the action filtration.
std::vector<DifferentialArrow> allowed_differentials(
    const SpectralPage& page, const std::vector<ForbiddenArrow>& forbidden,
    DifferentialConvention convention = DifferentialConvention::kHomological);

struct DifferentialRank {
  DifferentialArrow arrow;
  std::int64_t rank = 0;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Nonzero differentials of one consistent pattern, page by page.
  std::vector<DifferentialRank> differentials;
  /// E^infinity ranks per total degree for that pattern.
  std::map<std::int64_t, std::int64_t> limit;
  std::string reason;
};

inline constexpr std::size_t kMaxFeasibilityColumns = 4;
inline constexpr std::int64_t kMaxFeasibilityRank = 64;

/// Exhaustive search for ranks of d_1, d_2, ... compatible with bidegrees,
/// forbidden arrows and d^2 = 0 whose limit has the target ranks per total
/// degree. Throws SearchBoundExceeded beyond 4 columns or total rank 64.
FeasibilityResult degeneration_feasibility(
    const SpectralPage& page, const std::vector<ForbiddenArrow>& forbidden,
    const std::map<std::int64_t, std::int64_t>& target,
    DifferentialConvention convention = DifferentialConvention::kHomological);

}  // namespace monodromy
