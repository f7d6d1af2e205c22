#include "monodromy/classical_invariants.hpp"

#include "monodromy/errors.hpp"
#include "monodromy/floer_page.hpp"

#include <algorithm>

namespace monodromy {

std::map<std::int64_t, std::int64_t> lefschetz_numbers(const DecoratedGraph& dg, std::int64_t max_m) {
  std::map<std::int64_t, std::int64_t> out;
  const auto& g = dg.graph;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      const std::int64_t mi = dg.decoration.mult[i];
      if (m % mi == 0) sum += mi * g.open_stratum_euler(i);
    }
    out[m] = sum;
  }
  return out;
}

namespace {

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// (1 - t^k)^e truncated, for any integer e.
Series cyclotomic_power(std::size_t k, std::int64_t e, std::size_t order) {
  Series out(order + 1, Rational(0));
  out[0] = 1;
  // Generalised binomial series in x = -t^k: sum_j C(e, j) x^j.
  Rational coeff = 1;
  for (std::size_t j = 1; j * k <= order; ++j) {
    coeff *= Rational(e - static_cast<std::int64_t>(j) + 1, static_cast<long>(j));
    coeff.canonicalize();
    out[j * k] = (j % 2 == 0) ? coeff : Rational(-coeff);
  }
  return out;
}

}  // namespace

std::vector<Rational> zeta_product_form(const DecoratedGraph& dg, std::size_t order) {
  Series acc(order + 1, Rational(0));
  acc[0] = 1;
  for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
    const auto mi = static_cast<std::size_t>(dg.decoration.mult[i]);
    const std::int64_t chi = dg.graph.open_stratum_euler(i);
    if (chi == 0) continue;
    acc = multiply(acc, cyclotomic_power(mi, -chi, order));
  }
  return acc;
}

std::vector<Rational> zeta_exp_form(const std::map<std::int64_t, std::int64_t>& lefschetz,
                                    std::size_t order) {
  // L(t) = sum Lambda(m) t^m / m, Z = exp(L): Z' = L' Z, so
  // n c_n = sum_{m=1}^{n} Lambda(m) c_{n-m}.
  Series c(order + 1, Rational(0));
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t m = 1; m <= n; ++m) {
      auto it = lefschetz.find(static_cast<std::int64_t>(m));
      if (it == lefschetz.end()) throw InvalidParams("Lefschetz table too short for zeta order");
      acc += Rational(it->second) * c[n - m];
    }
    c[n] = acc / static_cast<long>(n);
    c[n].canonicalize();
  }
  return c;
}

std::vector<Rational> zeta_function(const DecoratedGraph& dg, std::size_t order) {
  const auto product = zeta_product_form(dg, order);
  const auto exp_form = zeta_exp_form(lefschetz_numbers(dg, static_cast<std::int64_t>(order)), order);
  if (product != exp_form) {
    throw InternalAssertion("zeta product form disagrees with exp(sum Lambda t^m / m)");
  }
  return product;
}

std::int64_t milnor_fiber_euler(const DecoratedGraph& dg) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
    chi += dg.decoration.mult[i] * dg.graph.open_stratum_euler(i);
  }
  return chi;
}

std::int64_t milnor_number(const DecoratedGraph& dg) { return 1 - milnor_fiber_euler(dg); }

std::int64_t multiplicity_from_pages(const DecoratedGraph& dg) {
  const auto max_mult = *std::max_element(dg.decoration.mult.begin(), dg.decoration.mult.end());
  for (std::int64_t m = 1; m <= max_mult; ++m) {
    DecoratedGraph model = separate(dg, m);
    model.decoration.ample = suggest_integral_ample(model, m);
    if (!assemble_page(model, m).empty()) return m;
  }
  throw InternalAssertion("no nonempty page up to the largest multiplicity");
}

std::int64_t multiplicity(const DecoratedGraph& dg) {
  const auto nu = *std::min_element(dg.decoration.mult.begin(), dg.decoration.mult.end());
  const auto from_pages = multiplicity_from_pages(dg);
  if (nu != from_pages) {
    throw InternalAssertion("minimal multiplicity " + std::to_string(nu) +
                            " disagrees with first nonempty page at m = " +
                            std::to_string(from_pages));
  }
  return nu;
}

TangentConeColumn tangent_cone_column(const DecoratedGraph& dg,
                                      const std::optional<std::string>& first_blowup,
                                      std::int64_t n) {
  if (!first_blowup) throw MissingFirstBlowupTag("graph has no first_blowup tag");
  const std::size_t v = dg.graph.require_index(*first_blowup);
  const auto nu = *std::min_element(dg.decoration.mult.begin(), dg.decoration.mult.end());

  TangentConeColumn out;
  out.vertex = *first_blowup;
  out.multiplicity = dg.decoration.mult[v];
  if (out.multiplicity != nu) {
    throw InvalidParams("first_blowup vertex '" + out.vertex + "' has multiplicity " +
                        std::to_string(out.multiplicity) + ", expected " + std::to_string(nu));
  }
  out.ranks = stratum_cover(dg, v).bm_ranks;
  out.degree_shift = 3 * n - 1 - 2 * nu;
  // A reduced tangent cone is resolved by the first blowup alone, so the
  // first exceptional curve then meets no other exceptional curve.
  out.non_reduced = !dg.graph.neighbours(v).empty();
  if (out.non_reduced) out.warnings.emplace_back("tangent cone is non-reduced");
  return out;
}

InvariantReport compute_invariants(const DecoratedGraph& dg, std::int64_t max_m,
                                   std::size_t zeta_order,
                                   const std::optional<std::string>& first_blowup) {
  InvariantReport report;
  report.lefschetz = lefschetz_numbers(dg, max_m);
  report.zeta_coeffs = zeta_function(dg, zeta_order);
  report.euler_fiber = milnor_fiber_euler(dg);
  report.milnor = milnor_number(dg);
  report.multiplicity = multiplicity(dg);
  if (first_blowup) report.tangent_cone = tangent_cone_column(dg, first_blowup);
  return report;
}

}  // namespace monodromy
