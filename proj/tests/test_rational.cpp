#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monodromy/rational.hpp"

#include <random>
#include <stdexcept>

using namespace monodromy;

TEST_CASE("parse and print rationals") {
  CHECK(to_string(parse_rational("-13/3")) == "-13/3");
  CHECK(to_string(parse_rational("12/6")) == "2");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("4/-6"), std::invalid_argument);
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("integrality helpers") {
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(7, 3)));
  CHECK(to_int64(Rational(-12)) == -12);
  CHECK_THROWS_AS(to_int64(Rational(1, 2)), std::domain_error);
  CHECK(lcm_of_denominators({Rational(1, 4), Rational(5, 6), Rational(3)}) == 12);
}

TEST_CASE("exact solve on the cusp intersection matrix") {
  RationalMatrix m(3, 3);
  const int entries[3][3] = {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = entries[r][c];
  }
  const auto x = solve_exact(m, {0, 0, -1});
  CHECK(x == std::vector<Rational>{2, 3, 6});
  CHECK(m.multiply(x) == std::vector<Rational>{0, 0, -1});
  CHECK(determinant(m) == -1);
}

TEST_CASE("singular systems are rejected") {
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK_THROWS_AS(solve_exact(m, {1, 2}), std::domain_error);
  CHECK(determinant(m) == 0);
}

TEST_CASE("leading minors survive a zero pivot") {
  RationalMatrix m(3, 3);
  const int entries[3][3] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 5}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = entries[r][c];
  }
  CHECK(leading_principal_minors(m) == std::vector<Rational>{0, -1, -5});
}

// Oracle: 2x2 and 3x3 minors by the explicit cofactor formula.
TEST_CASE("leading minors agree with cofactor expansion on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    RationalMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        m(r, c) = Rational(entry(rng), 1 + (trial % 3));
        m(r, c).canonicalize();
      }
    }
    const Rational d1 = m(0, 0);
    const Rational d2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Rational d3 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                        m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                        m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    const auto minors = leading_principal_minors(m);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == d1);
    CHECK(minors[1] == d2);
    CHECK(minors[2] == d3);
    CHECK(determinant(m) == d3);
    if (d3 != 0) {
      const std::vector<Rational> rhs{1, Rational(-2, 3), 5};
      CHECK(m.multiply(solve_exact(m, rhs)) == rhs);
    }
  }
}
