#pragma once

#include "monodromy/errors.hpp"
#include "monodromy/resolution_graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace monodromy {

inline constexpr double kIntegralityTolerance = 1e-9;
inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kFiniteDifferenceStep = 1e-6;
inline constexpr double kFiniteDifferenceTolerance = 1e-6;

/// eta(0) = 0, eta(s) = 1 / (1 - log s). Increasing bijection of [0, 1].
double eta(double s);

/// Inverse of eta: e^{1 - 1/u}, with 0 at 0.
double eta_inverse(double u);

/// zeta(0) = 0, zeta(s) = s^{-2} e^{1 - 1/s}; the derivative of eta^{-1}.
/// Increasing on [0, 1/2], decreasing after.
double zeta_fn(double s);

/// Point of a face of the rounded simplex: weights w_i > 0 summing to one on
/// the support, and u_i = eta(w_i).
class SimplexPoint {
 public:
  /// Throws DomainError when a weight leaves (0, 1] or the sum is off by more
  /// than kSimplexTolerance.
  SimplexPoint(std::vector<std::string> support, std::vector<double> w);

  const std::vector<std::string>& support() const { return support_; }
  const std::vector<double>& w() const { return w_; }
  const std::vector<double>& u() const { return u_; }

 private:
  std::vector<std::string> support_;
  std::vector<double> w_;
  std::vector<double> u_;
};

/// l_j = zeta(u_j) / sum_i m_i zeta(u_i), aligned with pt.support().
std::vector<double> rotation_numbers(const SimplexPoint& pt, const std::vector<std::int64_t>& mult);

/// True iff every m l_j lies within tol of an integer.
bool fixed_point_test(const SimplexPoint& pt, const std::vector<std::int64_t>& mult, std::int64_t m,
                      double tol = kIntegralityTolerance);

/// Uniform Dirichlet(1, ..., 1) sample on a face with `dim` vertices.
std::vector<double> sample_dirichlet(std::size_t dim, std::mt19937_64& rng);

struct StratumSample {
  std::vector<std::string> support;
  std::vector<double> w;
  double scaled_rotation = 0.0;  // m l_j at j = argmin zeta(u_j)
};

struct EdgeStratumReport {
  std::string a;
  std::string b;
  std::int64_t mult_a = 0;
  std::int64_t mult_b = 0;
  /// m / (m_a + m_b), the a priori bound on m l_j.
  double bound = 0.0;
  double min_observed = 0.0;
  double max_observed = 0.0;
  std::size_t samples = 0;
  std::size_t fixed_hits = 0;
};

struct SeparationReport {
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  std::vector<EdgeStratumReport> edges;
  bool passed = true;
};

/// The bound 0 < m l_j < 1 failed on some mixed stratum.
class SeparationViolated : public Error {
 public:
  SeparationViolated(std::string message, StratumSample witness, SeparationReport report);
  const StratumSample& witness() const { return witness_; }
  const SeparationReport& report() const { return report_; }

 private:
  StratumSample witness_;
  SeparationReport report_;
};

/// Samples every edge stratum (edges and arrow crossings) and checks
/// 0 < m l_j < 1 where j minimises zeta(u_j). Throws
/// SeparationViolated with a witness when the bound fails.
SeparationReport separation_bound_check(const DecoratedGraph& dg, std::int64_t m,
                                        std::size_t samples, std::uint64_t seed);

struct IdentityCheck {
  std::string name;
  double worst_error = 0.0;
  double worst_at = 0.0;
  std::size_t samples = 0;
};

struct CalculusReport {
  std::vector<IdentityCheck> checks;
  bool passed = true;
};

class IdentityViolated : public Error {
 public:
  IdentityViolated(std::string message, CalculusReport report);
  const CalculusReport& report() const { return report_; }

 private:
  CalculusReport report_;
};

/// Error used by the calculus suite: |a - b| / max(1, |b|).
double scaled_error(double approx, double exact);

/// Finite-difference checks of
///   d/dg eta^{-1}(g) = t (1 - log t)^2 = zeta(g)   at g = eta(t),
///   eta'(w) = u^2 / w,
///   vbar_i dl_i + vbar_j dl_j = d(vbar_i l_i + vbar_j l_j)  along an edge,
/// at `samples` points drawn from (0.05, 0.95). `edge_mults` lists the
/// multiplicity pairs used for the telescoping identity.
CalculusReport calculus_identity_suite(
    std::size_t samples, std::uint64_t seed,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& edge_mults = {{2, 6}, {3, 6}, {1, 1}});

}  // namespace monodromy
