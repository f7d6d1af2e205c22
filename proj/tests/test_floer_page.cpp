#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monodromy/classical_invariants.hpp"
#include "monodromy/document.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/floer_page.hpp"
#include "oracles.hpp"

using namespace monodromy;

namespace {

/// Cusp with b_i / m_i = x_i / 6.
DecoratedGraph cusp_with_ratios(std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  auto dg = decorate(oracle::cusp_graph());
  dg.decoration.ample = std::vector<Rational>{Rational(2 * x1, 6), Rational(3 * x2, 6), Rational(6 * x3, 6)};
  return dg;
}

std::int64_t count_at(const SpectralPage& page) {
  std::int64_t n = 0;
  for (const auto& [pos, list] : page.entries) n += page.rank_at(pos) != 0;
  return n;
}

}  // namespace

TEST_CASE("Conley-Zehnder indices of the cusp at m = 6") {
  const auto dg = decorate(oracle::cusp_graph());
  CHECK(cz_index(dg, 0, 6) == 0);
  CHECK(cz_index(dg, 1, 6) == 0);
  CHECK(cz_index(dg, 2, 6) == -2);
  CHECK(cz_index(dg, 0, 2) == 0);
  CHECK(cz_index(dg, 1, 3) == 0);
  CHECK_THROWS_AS(cz_index(dg, 0, 3), InvalidParams);
}

TEST_CASE("first ample choice") {
  const auto page = assemble_page(cusp_with_ratios(-13, -13, -12), 6);
  CHECK(page.rank_at({-13, 14}) == 5);
  CHECK(page.rank_at({-12, 14}) == 7);
  CHECK(page.rank_at({-12, 15}) == 1);
  CHECK(count_at(page) == 3);
  CHECK(page.total_rank() == 13);
  CHECK(page.columns() == std::set<std::int64_t>{-13, -12});
  CHECK(page.euler_characteristic() == -1);

  const auto order = action_order(cusp_with_ratios(-13, -13, -12), 6);
  REQUIRE(order.size() == 3);
  CHECK(order[0].vertex == "D2");
  CHECK(order[1].vertex == "D1");
  CHECK(order[2].vertex == "D3");
  CHECK(order[0].position < order[1].position);

  const auto forbidden = forbidden_arrows(page, order);
  CHECK(forbidden == std::vector<ForbiddenArrow>{{-13, -12}});
  const auto allowed = allowed_differentials(page, forbidden);
  REQUIRE(allowed.size() == 1);
  CHECK(allowed[0] == DifferentialArrow{1, {-12, 14}, {-13, 14}});

  const auto pairs = forbidden_vertex_pairs(order);
  CHECK(std::count(pairs.begin(), pairs.end(), std::pair<std::string, std::string>{"D1", "D3"}) == 1);
  CHECK(std::count(pairs.begin(), pairs.end(), std::pair<std::string, std::string>{"D3", "D1"}) == 0);
}

TEST_CASE("second ample choice") {
  const auto dg = cusp_with_ratios(-13, -14, -12);
  const auto page = assemble_page(dg, 6);
  CHECK(page.rank_at({-14, 15}) == 3);  // D2
  CHECK(page.rank_at({-13, 14}) == 2);  // D1
  CHECK(page.rank_at({-12, 14}) == 7);
  CHECK(page.rank_at({-12, 15}) == 1);
  CHECK(page.columns() == std::set<std::int64_t>{-14, -13, -12});
  const auto allowed = allowed_differentials(page, forbidden_arrows(page, action_order(dg, 6)));
  CHECK(allowed == std::vector<DifferentialArrow>{{1, {-12, 14}, {-13, 14}}, {2, {-12, 14}, {-14, 15}}});
}

TEST_CASE("fourth ample choice needs d3") {
  const auto dg = cusp_with_ratios(-15, -13, -12);
  const auto page = assemble_page(dg, 6);
  CHECK(page.rank_at({-15, 16}) == 2);
  const auto allowed = allowed_differentials(page, forbidden_arrows(page, action_order(dg, 6)));
  CHECK(std::count(allowed.begin(), allowed.end(), DifferentialArrow{3, {-12, 14}, {-15, 16}}) == 1);
  const auto result = degeneration_feasibility(page, forbidden_arrows(page, action_order(dg, 6)), {{2, 2}, {3, 1}});
  REQUIRE(result.feasible);
  bool uses_d3 = false;
  for (const auto& d : result.differentials) uses_d3 = uses_d3 || (d.arrow.r == 3 && d.rank == 2);
  CHECK(uses_d3);
}

TEST_CASE("page preconditions") {
  auto dg = decorate(oracle::cusp_graph());
  CHECK_THROWS_AS(assemble_page(dg, 6), InvalidParams);
  CHECK_THROWS_AS(assemble_page(cusp_with_ratios(-13, -13, -12), 7), NotSeparated);
  dg.decoration.ample = std::vector<Rational>{Rational(-13, 3), Rational(-13, 2), Rational(-23, 2)};
  CHECK_THROWS_AS(assemble_page(dg, 6), NonIntegralColumn);
}

TEST_CASE("iterates not divisible by any multiplicity give an empty page") {
  const auto page = assemble_page(cusp_with_ratios(-13, -13, -12), 5);
  CHECK(page.empty());
  CHECK(page.euler_characteristic() == 0);
}

TEST_CASE("Euler characteristic equals the Lefschetz number on the corpus") {
  for (const auto& germ : oracle::corpus()) {
    const auto base = decorate(germ_from_spec(germ.spec).graph);
    for (std::int64_t m = 1; m <= 12; ++m) {
      auto dg = separate(base, m);
      dg.decoration.ample = suggest_integral_ample(dg, m);
      const auto page = assemble_page(dg, m);
      CHECK_MESSAGE(page.euler_characteristic() == germ.lefschetz(m, germ.a, germ.b), germ.spec << " m=" << m);
    }
  }
}

TEST_CASE("literal arrows add punctured-disk strata") {
  auto dg = cusp_with_ratios(-13, -13, -12);
  dg = separate(dg, 7);
  dg.decoration.ample = suggest_integral_ample(dg, 7);
  PageOptions opts;
  opts.arrows = ProperTransformMode::kLiteral;
  const auto vanishing = assemble_page(dg, 7);
  const auto literal = assemble_page(dg, 7, opts);
  CHECK(literal.total_rank() == vanishing.total_rank() + 2);
  CHECK(literal.euler_characteristic() == vanishing.euler_characteristic());
}

TEST_CASE("injected ranks for higher dimension") {
  auto dg = cusp_with_ratios(-13, -13, -12);
  PageOptions opts;
  opts.n = 3;
  opts.injected_ranks = {{"D1", {0, 0, 0, 1}}, {"D2", {0, 0, 0, 1}}, {"D3", {0, 0, 1, 0}}};
  const auto page = assemble_page(dg, 6, opts);
  CHECK(page.n == 3);
  CHECK(page.total_rank() == 3);
  opts.injected_ranks.erase("D3");
  CHECK_THROWS_AS(assemble_page(dg, 6, opts), InvalidParams);
}

TEST_CASE("differential conventions") {
  CHECK(differential_target({-12, 14}, 1, DifferentialConvention::kHomological) == Bidegree{-13, 14});
  CHECK(differential_target({-12, 14}, 2, DifferentialConvention::kHomological) == Bidegree{-14, 15});
  CHECK(differential_target({-13, 14}, 1, DifferentialConvention::kCohomological) == Bidegree{-12, 14});
}

TEST_CASE("feasibility on the first ample choice") {
  const auto dg = cusp_with_ratios(-13, -13, -12);
  const auto page = assemble_page(dg, 6);
  const auto forbidden = forbidden_arrows(page, action_order(dg, 6));
  const auto yes = degeneration_feasibility(page, forbidden, {{2, 2}, {3, 1}});
  REQUIRE(yes.feasible);
  REQUIRE(yes.differentials.size() == 1);
  CHECK(yes.differentials[0].arrow == DifferentialArrow{1, {-12, 14}, {-13, 14}});
  CHECK(yes.differentials[0].rank == 5);
  CHECK(yes.limit == std::map<std::int64_t, std::int64_t>{{2, 2}, {3, 1}});

  CHECK_FALSE(degeneration_feasibility(page, forbidden, {{0, 1}}).feasible);
  // Every differential vanishing is always consistent.
  CHECK(degeneration_feasibility(page, forbidden, {{1, 5}, {2, 7}, {3, 1}}).feasible);
  // A partial cancellation leaves matching ranks in adjacent degrees.
  const auto partial = degeneration_feasibility(page, forbidden, {{1, 2}, {2, 4}, {3, 1}});
  REQUIRE(partial.feasible);
  CHECK(partial.differentials[0].rank == 3);
  CHECK_FALSE(degeneration_feasibility(page, forbidden, {{1, 2}, {2, 5}, {3, 1}}).feasible);
  // Under the cohomological convention d1 points from column -13 to -12,
  // which the action filtration forbids.
  CHECK_FALSE(
      degeneration_feasibility(page, forbidden, {{2, 2}, {3, 1}}, DifferentialConvention::kCohomological).feasible);
}

TEST_CASE("feasibility search bounds") {
  SpectralPage page;
  page.m = 1;
  for (std::int64_t p = 0; p < 5; ++p) page.entries[{p, 0}] = {{"V" + std::to_string(p), 2, 1}};
  CHECK_THROWS_AS(degeneration_feasibility(page, {}, {{0, 1}}), SearchBoundExceeded);
  SpectralPage big;
  big.entries[{0, 0}] = {{"V", 2, 65}};
  CHECK_THROWS_AS(degeneration_feasibility(big, {}, {{0, 65}}), SearchBoundExceeded);
}

TEST_CASE("pages are empty below the multiplicity and nonempty at it") {
  for (const auto& germ : oracle::corpus()) {
    const auto base = decorate(germ_from_spec(germ.spec).graph);
    CAPTURE(germ.spec);
    for (std::int64_t m = 1; m <= germ.multiplicity; ++m) {
      auto dg = separate(base, m);
      dg.decoration.ample = suggest_integral_ample(dg, m);
      CHECK(assemble_page(dg, m).empty() == (m < germ.multiplicity));
    }
  }
}

TEST_CASE("re-separating a separated model leaves the page unchanged") {
  const auto dg = cusp_with_ratios(-13, -13, -12);
  auto again = separate(dg, 6);
  again.decoration.ample = dg.decoration.ample;
  CHECK(assemble_page(again, 6) == assemble_page(dg, 6));
}

TEST_CASE("grading is an affine shift within a column") {
  auto dg = separate(decorate(germ_from_spec("xp-yq 3 5").graph), 15);
  dg.decoration.ample = suggest_integral_ample(dg, 15);
  const auto page = assemble_page(dg, 15);
  std::map<std::string, std::int64_t> shift;
  for (const auto& [pos, list] : page.entries) {
    for (const auto& c : list) {
      const auto s = c.bm_degree - pos.total();
      auto [it, fresh] = shift.emplace(c.vertex, s);
      CHECK(it->second == s);
      CHECK(s == page.n - 1 + page.cz.at(c.vertex));
    }
  }
  CHECK_FALSE(shift.empty());
}

TEST_CASE("ties in action") {
  auto dg = decorate(germ_from_spec("xk-yk 3").graph);
  dg.decoration.ample = suggest_integral_ample(dg, 3);
  const auto order = action_order(dg, 3);
  REQUIRE(order.size() == 1);
  // Equal keys share a position and forbid nothing.
  ActionEntry a = order[0];
  ActionEntry b = a;
  b.vertex = "copy";
  const std::vector<ActionEntry> tied{a, b};
  CHECK(forbidden_vertex_pairs(tied).empty());
}

TEST_CASE("empty page with empty target is feasible") {
  SpectralPage page;
  CHECK(degeneration_feasibility(page, {}, {}).feasible);
  CHECK_FALSE(degeneration_feasibility(page, {}, {{1, 1}}).feasible);
}
