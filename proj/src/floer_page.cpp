#include "monodromy/floer_page.hpp"

#include "monodromy/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace monodromy {

std::int64_t SpectralPage::rank_at(Bidegree pos) const {
  auto it = entries.find(pos);
  if (it == entries.end()) return 0;
  std::int64_t total = 0;
  for (const auto& c : it->second) total += c.rank;
  return total;
}

std::int64_t SpectralPage::total_rank() const {
  std::int64_t total = 0;
  for (const auto& [pos, list] : entries) total += rank_at(pos);
  return total;
}

bool SpectralPage::empty() const { return total_rank() == 0; }

std::set<std::int64_t> SpectralPage::columns() const {
  std::set<std::int64_t> out;
  for (const auto& [pos, list] : entries) {
    if (rank_at(pos) > 0) out.insert(pos.p);
  }
  return out;
}

std::int64_t SpectralPage::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [pos, list] : entries) {
    const std::int64_t sign = ((pos.total() + n - 1) % 2 == 0) ? 1 : -1;
    chi += sign * rank_at(pos);
  }
  return chi;
}

namespace {

Rational cz_rational(std::int64_t m, std::int64_t mi, const Rational& a) {
  return Rational(2 * (m / mi)) * (a + 1) - 2 * m;
}

void add_family(SpectralPage& page, const std::string& id, std::int64_t p, std::int64_t cz,
                const ActionKey& key, const std::vector<std::int64_t>& ranks) {
  page.cz[id] = cz;
  page.action_key[id] = key;
  page.column_of[id] = p;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (ranks[k] == 0) continue;
    const auto degree = static_cast<std::int64_t>(k);
    // bm_degree = n - 1 + p + q + CZ
    const std::int64_t q = degree - (page.n - 1) - p - cz;
    page.entries[{p, q}].push_back({id, degree, ranks[k]});
  }
}

}  // namespace

std::int64_t cz_index(const DecoratedGraph& dg, std::size_t vertex, std::int64_t m) {
  const std::int64_t mi = dg.decoration.mult.at(vertex);
  if (m % mi != 0) {
    throw InvalidParams("multiplicity " + std::to_string(mi) + " does not divide " + std::to_string(m));
  }
  const Rational cz = cz_rational(m, mi, dg.decoration.discrepancy.at(vertex));
  if (!is_integer(cz)) {
    throw InvalidParams("non-integral Conley-Zehnder index at '" + dg.graph.vertices[vertex].id + "'");
  }
  return to_int64(cz);
}

SpectralPage assemble_page(const DecoratedGraph& dg, std::int64_t m, const PageOptions& options) {
  if (m < 1) throw InvalidParams("iterate m must be positive");
  if (options.n < 1) throw InvalidParams("dimension n must be positive");
  if (!is_separated(dg, m)) {
    throw NotSeparated("resolution is not " + std::to_string(m) + "-separated");
  }
  if (!dg.decoration.ample) throw InvalidParams("page assembly needs an ample divisor");
  const auto& b = *dg.decoration.ample;
  const auto& g = dg.graph;

  SpectralPage page;
  page.m = m;
  page.n = options.n;

  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const std::int64_t mi = dg.decoration.mult[i];
    if (m % mi != 0) continue;
    const std::string& id = g.vertices[i].id;
    Rational column = Rational(m) * b.at(i) / mi;
    column.canonicalize();
    if (!is_integer(column)) {
      throw NonIntegralColumn("m * b_i / m_i = " + to_string(column) + " at '" + id +
                              "' is not an integer");
    }

    std::vector<std::int64_t> ranks;
    if (auto it = options.injected_ranks.find(id); it != options.injected_ranks.end()) {
      ranks = it->second;
    } else if (options.n == 2) {
      const auto cover = stratum_cover(dg, i);
      ranks.assign(cover.bm_ranks.begin(), cover.bm_ranks.end());
    } else {
      throw InvalidParams("no Borel-Moore ranks supplied for '" + id + "' in dimension " +
                          std::to_string(options.n));
    }
    add_family(page, id, to_int64(column), cz_index(dg, i, m), {column, Rational(m / mi)}, ranks);
  }

  if (options.arrows == ProperTransformMode::kLiteral) {
    for (std::size_t k = 0; k < g.arrows.size(); ++k) {
      const std::int64_t mk = g.arrows[k].branch_multiplicity;
      if (m % mk != 0) continue;
      const auto cover = proper_transform_stratum(dg, k, options.arrows);
      const std::string id = "arrow" + std::to_string(k) + "@" + g.arrows[k].attached_to;
      const std::int64_t cz = 2 * (m / mk) - 2 * m;
      add_family(page, id, 0, cz, {Rational(0), Rational(m / mk)},
                 {cover.bm_ranks.begin(), cover.bm_ranks.end()});
    }
  }
  return page;
}

std::vector<ActionEntry> action_order(const DecoratedGraph& dg, std::int64_t m) {
  if (!dg.decoration.ample) throw InvalidParams("action order needs an ample divisor");
  std::vector<ActionEntry> out;
  for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
    const std::int64_t mi = dg.decoration.mult[i];
    if (m % mi != 0) continue;
    Rational column = Rational(m) * (*dg.decoration.ample)[i] / mi;
    column.canonicalize();
    out.push_back({dg.graph.vertices[i].id, {column, Rational(m / mi)}, 0});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ActionEntry& x, const ActionEntry& y) { return x.key < y.key; });
  for (std::size_t k = 1; k < out.size(); ++k) {
    out[k].position = out[k].key == out[k - 1].key ? out[k - 1].position : out[k - 1].position + 1;
  }
  return out;
}

std::vector<ForbiddenArrow> forbidden_arrows(const SpectralPage& page,
                                             const std::vector<ActionEntry>& order) {
  std::map<std::int64_t, std::pair<ActionKey, ActionKey>> span;  // column -> (min, max)
  for (const auto& entry : order) {
    auto col = page.column_of.find(entry.vertex);
    if (col == page.column_of.end()) continue;
    auto [it, inserted] = span.try_emplace(col->second, entry.key, entry.key);
    if (!inserted) {
      it->second.first = std::min(it->second.first, entry.key);
      it->second.second = std::max(it->second.second, entry.key);
    }
  }
  std::vector<ForbiddenArrow> out;
  for (const auto& [src, src_span] : span) {
    for (const auto& [dst, dst_span] : span) {
      if (src != dst && src_span.second < dst_span.first) out.push_back({src, dst});
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> forbidden_vertex_pairs(
    const std::vector<ActionEntry>& order) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : order) {
    for (const auto& b : order) {
      if (a.key < b.key) out.emplace_back(a.vertex, b.vertex);
    }
  }
  return out;
}

Bidegree differential_target(Bidegree source, std::int64_t r, DifferentialConvention convention) {
  if (convention == DifferentialConvention::kHomological) return {source.p - r, source.q + r - 1};
  return {source.p + r, source.q - r + 1};
}

namespace {

bool is_forbidden(const std::vector<ForbiddenArrow>& forbidden, std::int64_t from, std::int64_t to) {
  return std::find(forbidden.begin(), forbidden.end(), ForbiddenArrow{from, to}) != forbidden.end();
}

std::int64_t column_span(const SpectralPage& page) {
  const auto cols = page.columns();
  if (cols.empty()) return 0;
  return *cols.rbegin() - *cols.begin();
}

}  // namespace

std::vector<DifferentialArrow> allowed_differentials(const SpectralPage& page,
                                                     const std::vector<ForbiddenArrow>& forbidden,
                                                     DifferentialConvention convention) {
  std::vector<DifferentialArrow> out;
  const std::int64_t span = column_span(page);
  for (std::int64_t r = 1; r <= span; ++r) {
    for (const auto& [pos, list] : page.entries) {
      if (page.rank_at(pos) == 0) continue;
      const Bidegree target = differential_target(pos, r, convention);
      if (page.rank_at(target) == 0) continue;
      if (is_forbidden(forbidden, pos.p, target.p)) continue;
      out.push_back({r, pos, target});
    }
  }
  return out;
}

namespace {

using RankState = std::map<Bidegree, std::int64_t>;

class FeasibilitySearch {
 public:
  FeasibilitySearch(const std::vector<ForbiddenArrow>& forbidden,
                    const std::map<std::int64_t, std::int64_t>& target,
                    DifferentialConvention convention, std::int64_t max_r)
      : forbidden_(forbidden), target_(target), convention_(convention), max_r_(max_r) {}

  bool run(const RankState& state, std::int64_t r, std::int64_t budget) {
    if (budget < 0) return false;
    if (r > max_r_) {
      if (budget != 0 || degree_totals(state) != target_) return false;
      limit_ = degree_totals(state);
      return true;
    }
    if (dead_.count({r, state})) return false;

    std::vector<DifferentialArrow> arrows;
    for (const auto& [pos, rank] : state) {
      if (rank == 0) continue;
      const Bidegree t = differential_target(pos, r, convention_);
      auto it = state.find(t);
      if (it == state.end() || it->second == 0) continue;
      if (is_forbidden(forbidden_, pos.p, t.p)) continue;
      arrows.push_back({r, pos, t});
    }

    std::map<Bidegree, std::int64_t> used;
    std::vector<std::int64_t> chosen(arrows.size(), 0);
    const std::size_t mark = trail_.size();
    std::function<bool(std::size_t, std::int64_t)> assign = [&](std::size_t k,
                                                                std::int64_t left) -> bool {
      if (k == arrows.size()) {
        RankState next = state;
        for (std::size_t j = 0; j < arrows.size(); ++j) {
          next[arrows[j].source] -= chosen[j];
          next[arrows[j].target] -= chosen[j];
        }
        for (std::size_t j = 0; j < arrows.size(); ++j) {
          if (chosen[j] > 0) trail_.push_back({arrows[j], chosen[j]});
        }
        if (run(next, r + 1, left)) return true;
        trail_.resize(mark);
        return false;
      }
      const auto& a = arrows[k];
      // Image lies in the kernel: in + out never exceeds the rank at a spot.
      const std::int64_t cap = std::min({state.at(a.source) - used[a.source],
                                         state.at(a.target) - used[a.target], left});
      for (std::int64_t x = cap; x >= 0; --x) {
        chosen[k] = x;
        used[a.source] += x;
        used[a.target] += x;
        const bool ok = assign(k + 1, left - x);
        used[a.source] -= x;
        used[a.target] -= x;
        if (ok) return true;
      }
      chosen[k] = 0;
      return false;
    };

    if (assign(0, budget)) return true;
    dead_.insert({r, state});
    return false;
  }

  std::vector<DifferentialRank> trail() const { return trail_; }
  std::map<std::int64_t, std::int64_t> limit() const { return limit_; }

  static std::map<std::int64_t, std::int64_t> degree_totals(const RankState& state) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [pos, rank] : state) {
      if (rank != 0) out[pos.total()] += rank;
    }
    return out;
  }

 private:
  const std::vector<ForbiddenArrow>& forbidden_;
  std::map<std::int64_t, std::int64_t> target_;
  DifferentialConvention convention_;
  std::int64_t max_r_;
  std::set<std::pair<std::int64_t, RankState>> dead_;
  std::vector<DifferentialRank> trail_;
  std::map<std::int64_t, std::int64_t> limit_;
};

}  // namespace

FeasibilityResult degeneration_feasibility(const SpectralPage& page,
                                           const std::vector<ForbiddenArrow>& forbidden,
                                           const std::map<std::int64_t, std::int64_t>& target,
                                           DifferentialConvention convention) {
  if (page.columns().size() > kMaxFeasibilityColumns) {
    throw SearchBoundExceeded("page has " + std::to_string(page.columns().size()) +
                              " nonzero columns; search is limited to " +
                              std::to_string(kMaxFeasibilityColumns));
  }
  if (page.total_rank() > kMaxFeasibilityRank) {
    throw SearchBoundExceeded("page has total rank " + std::to_string(page.total_rank()) +
                              "; search is limited to " + std::to_string(kMaxFeasibilityRank));
  }

  std::map<std::int64_t, std::int64_t> clean_target;
  for (const auto& [deg, rank] : target) {
    if (rank < 0) throw InvalidParams("target ranks must be non-negative");
    if (rank > 0) clean_target[deg] = rank;
  }

  FeasibilityResult result;
  RankState state;
  for (const auto& [pos, list] : page.entries) {
    if (const auto r = page.rank_at(pos); r > 0) state[pos] = r;
  }

  std::int64_t chi_page = 0;
  std::int64_t total_page = 0;
  for (const auto& [deg, rank] : FeasibilitySearch::degree_totals(state)) {
    chi_page += (deg % 2 == 0 ? 1 : -1) * rank;
    total_page += rank;
  }
  std::int64_t chi_target = 0;
  std::int64_t total_target = 0;
  for (const auto& [deg, rank] : clean_target) {
    chi_target += (deg % 2 == 0 ? 1 : -1) * rank;
    total_target += rank;
  }
  if (chi_page != chi_target) {
    result.reason = "Euler characteristic mismatch: page " + std::to_string(chi_page) +
                    ", target " + std::to_string(chi_target);
    return result;
  }
  if (total_target > total_page || (total_page - total_target) % 2 != 0) {
    result.reason = "target total rank unreachable from the page";
    return result;
  }

  FeasibilitySearch search(forbidden, clean_target, convention, column_span(page));
  if (search.run(state, 1, (total_page - total_target) / 2)) {
    result.feasible = true;
    result.differentials = search.trail();
    result.limit = search.limit();
  } else {
    result.reason = "no differential pattern reaches the target";
  }
  return result;
}

}  // namespace monodromy
