#include "monodromy/monodromy_dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>

namespace monodromy {

double eta(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("eta is defined on [0, 1]");
  if (s == 0.0) return 0.0;
  return 1.0 / (1.0 - std::log(s));
}

double eta_inverse(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("eta^{-1} is defined on [0, 1]");
  if (u == 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / u);
}

double zeta_fn(double s) {
  if (!(s >= 0.0)) throw DomainError("zeta is defined on [0, inf)");
  if (s == 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / s) / (s * s);
}

SimplexPoint::SimplexPoint(std::vector<std::string> support, std::vector<double> w)
    : support_(std::move(support)), w_(std::move(w)) {
  if (support_.empty() || support_.size() != w_.size()) {
    throw DomainError("simplex point needs one weight per support label");
  }
  double sum = 0.0;
  for (double x : w_) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("simplex weights must lie in (0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) throw DomainError("simplex weights must sum to 1");
  u_.reserve(w_.size());
  for (double x : w_) u_.push_back(eta(x));
}

std::vector<double> rotation_numbers(const SimplexPoint& pt, const std::vector<std::int64_t>& mult) {
  if (mult.size() != pt.support().size()) {
    throw DomainError("one multiplicity per support label is required");
  }
  std::vector<double> z(mult.size());
  double denom = 0.0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    z[i] = zeta_fn(pt.u()[i]);
    denom += static_cast<double>(mult[i]) * z[i];
  }
  for (double& x : z) x /= denom;
  return z;
}

bool fixed_point_test(const SimplexPoint& pt, const std::vector<std::int64_t>& mult, std::int64_t m,
                      double tol) {
  const auto ell = rotation_numbers(pt, mult);
  return std::all_of(ell.begin(), ell.end(), [&](double l) {
    const double x = static_cast<double>(m) * l;
    return std::abs(x - std::round(x)) <= tol;
  });
}

std::vector<double> sample_dirichlet(std::size_t dim, std::mt19937_64& rng) {
  std::exponential_distribution<double> gamma1(1.0);
  std::vector<double> w(dim);
  for (;;) {
    double sum = 0.0;
    for (double& x : w) {
      x = gamma1(rng);
      sum += x;
    }
    for (double& x : w) x /= sum;
    if (std::all_of(w.begin(), w.end(), [](double x) { return x > 0.0; })) break;
  }
  // Absorb rounding so the closure holds to the last ulp.
  const double rest = std::accumulate(w.begin() + 1, w.end(), 0.0);
  w[0] = 1.0 - rest;
  return w;
}

SeparationViolated::SeparationViolated(std::string message, StratumSample witness,
                                       SeparationReport report)
    : Error(std::move(message)), witness_(std::move(witness)), report_(std::move(report)) {}

IdentityViolated::IdentityViolated(std::string message, CalculusReport report)
    : Error(std::move(message)), report_(std::move(report)) {}

namespace {

/// m l_j on a two-point support with weights (w, 1 - w), j = argmin zeta(u).
double scaled_rotation_on_edge(double w, std::int64_t mult_a, std::int64_t mult_b, std::int64_t m) {
  const double za = zeta_fn(eta(w));
  const double zb = zeta_fn(eta(1.0 - w));
  return static_cast<double>(m) * std::min(za, zb) /
         (static_cast<double>(mult_a) * za + static_cast<double>(mult_b) * zb);
}

}  // namespace

SeparationReport separation_bound_check(const DecoratedGraph& dg, std::int64_t m,
                                        std::size_t samples, std::uint64_t seed) {
  SeparationReport report;
  report.m = m;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  struct Stratum {
    std::string a, b;
    std::int64_t ma, mb;
  };
  std::vector<Stratum> strata;
  const auto& g = dg.graph;
  for (const auto& e : g.edges) strata.push_back({e.a, e.b, dg.mult_of(e.a), dg.mult_of(e.b)});
  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    strata.push_back({g.arrows[k].attached_to, "arrow" + std::to_string(k),
                      dg.mult_of(g.arrows[k].attached_to), g.arrows[k].branch_multiplicity});
  }

  for (const auto& s : strata) {
    EdgeStratumReport er;
    er.a = s.a;
    er.b = s.b;
    er.mult_a = s.ma;
    er.mult_b = s.mb;
    er.bound = static_cast<double>(m) / static_cast<double>(s.ma + s.mb);
    er.min_observed = 1.0;
    er.max_observed = 0.0;

    std::optional<StratumSample> witness;
    for (std::size_t k = 0; k < samples; ++k) {
      const auto w = sample_dirichlet(2, rng);
      const SimplexPoint pt({s.a, s.b}, w);
      // zeta is not monotone on (0, 1), so pick j by zeta(u_j), not by w_j.
      const std::size_t j = zeta_fn(pt.u()[0]) <= zeta_fn(pt.u()[1]) ? 0 : 1;
      const auto ell = rotation_numbers(pt, {s.ma, s.mb});
      const double x = static_cast<double>(m) * ell[j];
      er.min_observed = std::min(er.min_observed, x);
      er.max_observed = std::max(er.max_observed, x);
      ++er.samples;
      const bool fixed = fixed_point_test(pt, {s.ma, s.mb}, m);
      if (fixed) ++er.fixed_hits;
      if ((fixed || !(x > 0.0 && x < 1.0)) && !witness) {
        witness = StratumSample{{s.a, s.b}, w, x};
      }
    }

    if (!witness && er.bound >= 1.0) {
      // m l_j tends to 0 at the end of the edge and equals m / (m_a + m_b) at
      // the midpoint, so it reaches 1 somewhere in between.
      double lo = 1e-9;
      double hi = 0.5;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (scaled_rotation_on_edge(mid, s.ma, s.mb, m) >= 1.0) hi = mid;
        else lo = mid;
      }
      witness = StratumSample{{s.a, s.b}, {hi, 1.0 - hi}, scaled_rotation_on_edge(hi, s.ma, s.mb, m)};
    }

    report.edges.push_back(er);
    if (witness) {
      report.passed = false;
      throw SeparationViolated("m l_j leaves (0, 1) on the stratum " + s.a + "-" + s.b +
                                   " (bound m/(m_a+m_b) = " + std::to_string(er.bound) + ")",
                               *witness, report);
    }
  }
  return report;
}

double scaled_error(double approx, double exact) {
  return std::abs(approx - exact) / std::max(1.0, std::abs(exact));
}

CalculusReport calculus_identity_suite(
    std::size_t samples, std::uint64_t seed,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& edge_mults) {
  constexpr double h = kFiniteDifferenceStep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> interior(0.05, 0.95);

  CalculusReport report;
  auto record = [&](IdentityCheck& check, double at, double approx, double exact) {
    const double err = scaled_error(approx, exact);
    if (err > check.worst_error || check.samples == 0) {
      check.worst_error = err;
      check.worst_at = at;
    }
    ++check.samples;
  };

  IdentityCheck t_fd{"t' = t (1 - log t)^2 (finite difference)"};
  IdentityCheck t_zeta{"zeta(eta(t)) = t (1 - log t)^2"};
  IdentityCheck eta_prime{"eta'(w) = u^2 / w"};
  std::vector<IdentityCheck> telescoping;
  std::vector<IdentityCheck> closedness;
  for (const auto& [mi, mj] : edge_mults) {
    const std::string tag = "(" + std::to_string(mi) + ", " + std::to_string(mj) + ")";
    telescoping.push_back({"vbar_i dl_i + vbar_j dl_j = d(vbar_i l_i + vbar_j l_j) " + tag});
    closedness.push_back({"l_i dvbar_i + l_j dvbar_j = 0 " + tag});
  }

  for (std::size_t k = 0; k < samples; ++k) {
    const double t = interior(rng);
    const double g = eta(t);
    const double closed = t * std::pow(1.0 - std::log(t), 2);
    record(t_fd, t, (eta_inverse(g + h) - eta_inverse(g - h)) / (2 * h), closed);
    record(t_zeta, t, zeta_fn(g), closed);

    const double w = interior(rng);
    const double u = eta(w);
    record(eta_prime, w, (eta(w + h) - eta(w - h)) / (2 * h), u * u / w);

    // Edge path w_i = s, w_j = 1 - s with vbar = -u.
    const double s = interior(rng);
    for (std::size_t e = 0; e < edge_mults.size(); ++e) {
      const auto [mi, mj] = edge_mults[e];
      auto ell = [&](double x) {
        return rotation_numbers(SimplexPoint({"i", "j"}, {x, 1.0 - x}), {mi, mj});
      };
      auto vbar = [](double x) { return std::array<double, 2>{-eta(x), -eta(1.0 - x)}; };
      const auto lp = ell(s + h);
      const auto lm = ell(s - h);
      const auto l0 = ell(s);
      const auto v0 = vbar(s);
      const auto vp = vbar(s + h);
      const auto vm = vbar(s - h);
      const double lhs = v0[0] * (lp[0] - lm[0]) / (2 * h) + v0[1] * (lp[1] - lm[1]) / (2 * h);
      const double rhs = ((vp[0] * lp[0] + vp[1] * lp[1]) - (vm[0] * lm[0] + vm[1] * lm[1])) / (2 * h);
      record(telescoping[e], s, lhs, rhs);

      // Closed form: dvbar_l/ds = -eta'(w_l) dw_l/ds with eta'(w) = u^2 / w.
      const double ui = eta(s);
      const double uj = eta(1.0 - s);
      const double dvi = -(ui * ui / s);
      const double dvj = (uj * uj / (1.0 - s));
      record(closedness[e], s, l0[0] * dvi + l0[1] * dvj, 0.0);
    }
  }

  report.checks.push_back(t_fd);
  report.checks.push_back(t_zeta);
  report.checks.push_back(eta_prime);
  for (auto& c : telescoping) report.checks.push_back(c);
  for (auto& c : closedness) report.checks.push_back(c);

  for (const auto& c : report.checks) {
    if (c.worst_error > kFiniteDifferenceTolerance) {
      report.passed = false;
      throw IdentityViolated(c.name + " fails with error " + std::to_string(c.worst_error) +
                                 " at " + std::to_string(c.worst_at),
                             report);
    }
  }
  return report;
}

}  // namespace monodromy
