#pragma once

#include "monodromy/covering_topology.hpp"
#include "monodromy/resolution_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monodromy {

/// Lefschetz numbers of the iterates 1..max_m: sum over exceptional vertices
/// with m_i | m of chi(B_i°) = m_i chi(D_i°). Strict-transform strata add 0.
std::map<std::int64_t, std::int64_t> lefschetz_numbers(const DecoratedGraph& dg, std::int64_t max_m);

/// Coefficients c_0..c_order of prod_i (1 - t^{m_i})^{-chi(D_i°)}.
std::vector<Rational> zeta_product_form(const DecoratedGraph& dg, std::size_t order);

/// Coefficients c_0..c_order of exp(sum_m Lambda(m) t^m / m).
std::vector<Rational> zeta_exp_form(const std::map<std::int64_t, std::int64_t>& lefschetz,
                                    std::size_t order);

/// Zeta function of the monodromy to the given order. Both series forms are
/// computed; disagreement throws InternalAssertion.
std::vector<Rational> zeta_function(const DecoratedGraph& dg, std::size_t order);

/// chi(F) = sum_i m_i chi(D_i°).
std::int64_t milnor_fiber_euler(const DecoratedGraph& dg);

/// mu = 1 - chi(F).
std::int64_t milnor_number(const DecoratedGraph& dg);

/// Least m for which the first page of a suitable m-separated model has a
/// nonzero entry. Builds the model by separating and choosing an integral
/// ample divisor.
std::int64_t multiplicity_from_pages(const DecoratedGraph& dg);

/// min_i m_i, cross-checked against multiplicity_from_pages.
std::int64_t multiplicity(const DecoratedGraph& dg);

struct TangentConeColumn {
  std::string vertex;
  std::int64_t multiplicity = 0;
  BmRanks ranks{0, 0, 0};
  /// HF_*(phi^nu) = H^BM_{* + shift}(F_in) with shift = 3n - 1 - 2 nu.
  std::int64_t degree_shift = 0;
  bool non_reduced = false;
  std::vector<std::string> warnings;
};

/// Borel-Moore ranks of the cover over the first-blowup divisor. Throws
/// MissingFirstBlowupTag when no tag is given.
TangentConeColumn tangent_cone_column(const DecoratedGraph& dg,
                                      const std::optional<std::string>& first_blowup,
                                      std::int64_t n = 2);

struct InvariantReport {
  std::map<std::int64_t, std::int64_t> lefschetz;
  std::vector<Rational> zeta_coeffs;
  std::int64_t euler_fiber = 0;
  std::int64_t milnor = 0;
  std::int64_t multiplicity = 0;
  std::optional<TangentConeColumn> tangent_cone;
};

InvariantReport compute_invariants(const DecoratedGraph& dg, std::int64_t max_m,
                                   std::size_t zeta_order,
                                   const std::optional<std::string>& first_blowup);

}  // namespace monodromy
