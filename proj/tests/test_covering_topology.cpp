#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monodromy/covering_topology.hpp"
#include "monodromy/document.hpp"
#include "monodromy/errors.hpp"
#include "oracles.hpp"
#include "random_blowups.hpp"

#include <random>

using namespace monodromy;

TEST_CASE("cusp strata covers") {
  const auto dg = decorate(oracle::cusp_graph());
  const auto d1 = stratum_cover(dg, "D1");
  CHECK(d1.components == 2);
  CHECK(d1.per_component == ComponentTopology{0, 1, 1});
  CHECK(d1.bm_ranks == BmRanks{0, 0, 2});

  const auto d2 = stratum_cover(dg, "D2");
  CHECK(d2.components == 3);
  CHECK(d2.bm_ranks == BmRanks{0, 0, 3});

  // Six-fold cover of a thrice-punctured sphere: a torus with six holes.
  const auto d3 = stratum_cover(dg, "D3");
  CHECK(d3.components == 1);
  CHECK(d3.per_component == ComponentTopology{1, 6, -6});
  CHECK(d3.total_euler == -6);
  CHECK(d3.bm_ranks == BmRanks{0, 7, 1});
}

TEST_CASE("degree one cover is the base") {
  const auto c = cyclic_cover_of_punctured_sphere(1, {0, 0, 0});
  CHECK(c.components == 1);
  CHECK(c.per_component == ComponentTopology{0, 3, -1});
  CHECK(c.bm_ranks == BmRanks{0, 2, 1});
}

TEST_CASE("error cases") {
  CHECK_THROWS_AS(cyclic_cover_of_punctured_sphere(3, {}), ClosedStratum);
  CHECK_THROWS_AS(cyclic_cover_of_punctured_sphere(3, {1, 1}), InvalidParams);
  DualGraph g;
  g.vertices = {{"E", -1, 1}};
  g.arrows = {{"E", 1}};
  CHECK_THROWS_AS(stratum_cover(decorate(g), "E"), PositiveGenusUnsupported);
}

TEST_CASE("closed form agrees with the explicit cell complex") {
  for (std::int64_t d = 1; d <= 12; ++d) {
    for (int k = 1; k <= 4; ++k) {
      // All residue tuples of length k summing to 0 mod d.
      std::vector<std::int64_t> r(k, 0);
      for (;;) {
        std::int64_t sum = 0;
        for (int j = 0; j + 1 < k; ++j) sum += r[j];
        r[k - 1] = ((-sum) % d + d) % d;
        const auto cover = cyclic_cover_of_punctured_sphere(d, r);
        const auto census = oracle::brute_force_cover(d, r);
        CHECK(cover.components == census.components);
        CHECK(cover.total_euler == census.euler);
        CHECK(cover.per_component.punctures * cover.components == census.punctures);
        CHECK(cover.bm_ranks == BmRanks{0, census.h1, census.components});
        CHECK(bm_ranks(cover) == cover.bm_ranks);
        int j = 0;
        while (j + 1 < k && ++r[j] == d) r[j++] = 0;
        if (j + 1 >= k) break;
      }
    }
  }
}

TEST_CASE("covers over every stratum of blown-up corpus germs") {
  std::mt19937_64 rng(5);
  for (const auto& germ : oracle::corpus()) {
    const auto dg = testing_support::random_blowups(decorate(germ_from_spec(germ.spec).graph), 4, rng);
    for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
      const auto cover = stratum_cover(dg, i);
      std::vector<std::int64_t> residues;
      for (auto nb : dg.graph.neighbours(i)) residues.push_back(dg.decoration.mult[nb] % dg.decoration.mult[i]);
      for (auto a : dg.graph.arrows_at(i)) {
        residues.push_back(dg.graph.arrows[a].branch_multiplicity % dg.decoration.mult[i]);
      }
      const auto census = oracle::brute_force_cover(dg.decoration.mult[i], residues);
      CHECK(cover.bm_ranks == BmRanks{0, census.h1, census.components});
      CHECK(cover.total_euler == dg.decoration.mult[i] * dg.graph.open_stratum_euler(i));
    }
  }
}

TEST_CASE("proper transform strata") {
  const auto dg = decorate(oracle::cusp_graph());
  const auto vanishing = proper_transform_stratum(dg, 0);
  CHECK(vanishing.bm_ranks == BmRanks{0, 0, 0});
  CHECK(vanishing.total_euler == 0);
  const auto literal = proper_transform_stratum(dg, 0, ProperTransformMode::kLiteral);
  CHECK(literal.per_component == ComponentTopology{0, 2, 0});
  CHECK(literal.bm_ranks == BmRanks{0, 1, 1});
}

TEST_CASE("k generic lines: the cover is the Milnor fiber") {
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto dg = decorate(germ_from_spec("xk-yk " + std::to_string(k)).graph);
    const auto c = stratum_cover(dg, "E1");
    CHECK(c.components == 1);
    CHECK(c.per_component.genus == (k - 1) * (k - 2) / 2);
    CHECK(c.per_component.punctures == k);
    CHECK(c.bm_ranks == BmRanks{0, (k - 1) * (k - 1), 1});
  }
}

TEST_CASE("components times subgroup order is the degree") {
  for (const auto& germ : oracle::corpus()) {
    const auto dg = decorate(germ_from_spec(germ.spec).graph);
    for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
      const auto c = stratum_cover(dg, i);
      CHECK(c.degree % c.components == 0);
      CHECK(c.per_component.euler == 2 - 2 * c.per_component.genus - c.per_component.punctures);
      CHECK(c.bm_ranks[2] - c.bm_ranks[1] + c.bm_ranks[0] == c.total_euler);
    }
  }
}
