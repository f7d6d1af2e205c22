#include "monodromy/resolution_graph.hpp"

#include "monodromy/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace monodromy {

std::optional<std::size_t> DualGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t DualGraph::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
}

RationalMatrix DualGraph::intersection_matrix() const {
  const std::size_t n = vertices.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(vertices[i].self_intersection);
  for (const auto& e : edges) {
    const std::size_t a = require_index(e.a);
    const std::size_t b = require_index(e.b);
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return m;
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  const std::string& id = vertices.at(v).id;
  for (const auto& e : edges) {
    if (e.a == id) out.push_back(require_index(e.b));
    else if (e.b == id) out.push_back(require_index(e.a));
  }
  return out;
}

std::vector<std::size_t> DualGraph::arrows_at(std::size_t v) const {
  std::vector<std::size_t> out;
  const std::string& id = vertices.at(v).id;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].attached_to == id) out.push_back(k);
  }
  return out;
}

std::size_t DualGraph::valence(std::size_t v) const {
  return neighbours(v).size() + arrows_at(v).size();
}

std::int64_t DualGraph::open_stratum_euler(std::size_t v) const {
  return 2 - 2 * vertices.at(v).genus - static_cast<std::int64_t>(valence(v));
}

std::string DualGraph::fresh_id(std::string_view prefix) const {
  for (std::size_t n = vertices.size() + 1;; ++n) {
    std::string candidate = std::string(prefix) + std::to_string(n);
    if (!index_of(candidate)) return candidate;
  }
}

ValidationReport validate_graph(const DualGraph& g) {
  ValidationReport report;
  auto& v = report.violations;

  if (g.vertices.empty()) v.emplace_back("graph has no vertices");

  bool structural_ok = true;
  std::set<std::string> ids;
  for (const auto& vert : g.vertices) {
    if (vert.id.empty()) {
      v.emplace_back("vertex with empty id");
      structural_ok = false;
    } else if (!ids.insert(vert.id).second) {
      v.push_back("duplicate vertex id '" + vert.id + "'");
      structural_ok = false;
    }
    if (vert.genus < 0) v.push_back("vertex '" + vert.id + "' has negative genus");
  }
  for (const auto& e : g.edges) {
    if (!ids.count(e.a) || !ids.count(e.b)) {
      v.push_back("edge (" + e.a + ", " + e.b + ") references an unknown vertex");
      structural_ok = false;
    } else if (e.a == e.b) {
      v.push_back("self-loop at vertex '" + e.a + "'");
      structural_ok = false;
    }
  }
  for (const auto& a : g.arrows) {
    if (!ids.count(a.attached_to)) {
      v.push_back("arrow attached to unknown vertex '" + a.attached_to + "'");
      structural_ok = false;
    }
    if (a.branch_multiplicity <= 0) {
      v.push_back("arrow at '" + a.attached_to + "' has non-positive branch multiplicity");
    }
  }

  report.has_arrow = !g.arrows.empty();
  if (!report.has_arrow) v.emplace_back("at least one arrow is required");

  if (!structural_ok || g.vertices.empty()) return report;

  // Connectivity over vertices and edges; arrows hang off a single vertex.
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(g.require_index(e.a))] = find(g.require_index(e.b));
  report.connected = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) report.connected = false;
  }
  if (!report.connected) v.emplace_back("graph is not connected");

  RationalMatrix neg = g.intersection_matrix();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) neg(r, c) = -neg(r, c);
  }
  report.minors = leading_principal_minors(neg);
  report.negative_definite =
      std::all_of(report.minors.begin(), report.minors.end(), [](const Rational& x) { return x > 0; });
  if (!report.negative_definite) v.emplace_back("intersection matrix is not negative definite");

  return report;
}

void require_valid(const DualGraph& g) {
  auto report = validate_graph(g);
  if (!report.ok()) throw ValidationError(std::move(report.violations));
}

std::int64_t DecoratedGraph::mult_of(std::string_view id) const {
  return decoration.mult.at(graph.require_index(id));
}

const Rational& DecoratedGraph::discrepancy_of(std::string_view id) const {
  return decoration.discrepancy.at(graph.require_index(id));
}

std::vector<std::int64_t> solve_multiplicities(const DualGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<Rational> load(n, Rational(0));
  for (const auto& a : g.arrows) load[g.require_index(a.attached_to)] -= a.branch_multiplicity;

  const auto solution = solve_exact(g.intersection_matrix(), load);
  std::vector<std::int64_t> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer(solution[i])) {
      throw NonIntegralMultiplicity("multiplicity of '" + g.vertices[i].id + "' is " +
                                    to_string(solution[i]));
    }
    if (solution[i] <= 0) {
      throw NonPositiveMultiplicity("multiplicity of '" + g.vertices[i].id + "' is " +
                                    to_string(solution[i]));
    }
    mult[i] = to_int64(solution[i]);
  }
  return mult;
}

std::vector<Rational> solve_discrepancies(const DualGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& vert = g.vertices[i];
    rhs[i] = Rational(-2 + 2 * vert.genus - vert.self_intersection);
  }
  return solve_exact(g.intersection_matrix(), rhs);
}

DecoratedGraph decorate(const DualGraph& g) {
  require_valid(g);
  DecoratedGraph dg{g, {}};
  dg.decoration.mult = solve_multiplicities(g);
  dg.decoration.discrepancy = solve_discrepancies(g);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!is_integer(dg.decoration.discrepancy[i])) {
      dg.decoration.warnings.push_back("non-integral discrepancy " +
                                       to_string(dg.decoration.discrepancy[i]) + " at '" +
                                       g.vertices[i].id + "'");
    }
  }
  for (const auto& a : g.arrows) {
    if (a.branch_multiplicity != 1) {
      dg.decoration.warnings.push_back("non-reduced branch of multiplicity " +
                                       std::to_string(a.branch_multiplicity) + " at '" +
                                       a.attached_to + "'");
    }
  }
  return dg;
}

AmpleCheck check_ample(const DualGraph& g, const std::vector<Rational>& b) {
  if (b.size() != g.vertices.size()) {
    throw std::invalid_argument("ample coefficient count does not match vertex count");
  }
  AmpleCheck out;
  out.intersections = g.intersection_matrix().multiply(b);
  for (auto& x : out.intersections) x.canonicalize();
  out.all_negative = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x < 0; });
  out.ample = out.all_negative && std::all_of(out.intersections.begin(), out.intersections.end(),
                                              [](const Rational& x) { return x > 0; });
  return out;
}

std::vector<Rational> suggest_ample(const DualGraph& g) {
  require_valid(g);
  const std::vector<Rational> ones(g.vertices.size(), Rational(1));
  auto b = solve_exact(g.intersection_matrix(), ones);
  const std::int64_t scale = lcm_of_denominators(b);
  for (auto& x : b) {
    x *= scale;
    x.canonicalize();
  }
  if (!check_ample(g, b).ample) {
    throw InternalAssertion("suggested ample divisor fails the positivity check");
  }
  return b;
}

std::vector<Rational> suggest_integral_ample(const DecoratedGraph& dg, std::int64_t m) {
  auto b = suggest_ample(dg.graph);
  std::vector<Rational> columns;
  for (std::size_t i = 0; i < b.size(); ++i) {
    columns.push_back(Rational(m) * b[i] / dg.decoration.mult[i]);
  }
  const std::int64_t scale = lcm_of_denominators(columns);
  for (auto& x : b) x *= scale;
  return b;
}

std::vector<IntersectionPoint> intersection_points(const DecoratedGraph& dg) {
  std::vector<IntersectionPoint> out;
  const auto& g = dg.graph;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    out.push_back({{SiteKind::kEdge, k}, dg.mult_of(g.edges[k].a), dg.mult_of(g.edges[k].b)});
  }
  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    out.push_back({{SiteKind::kArrow, k}, dg.mult_of(g.arrows[k].attached_to),
                   g.arrows[k].branch_multiplicity});
  }
  return out;
}

bool is_separated(const DecoratedGraph& dg, std::int64_t m) {
  const auto points = intersection_points(dg);
  return std::all_of(points.begin(), points.end(),
                     [m](const IntersectionPoint& p) { return p.mult_a + p.mult_b > m; });
}

DecoratedGraph blow_up(const DecoratedGraph& dg, const BlowupSite& site) {
  DecoratedGraph out = dg;
  auto& g = out.graph;
  auto& dec = out.decoration;
  dec.ample.reset();

  const std::string id = g.fresh_id();
  std::int64_t new_mult = 0;
  Rational new_disc = 1;

  switch (site.kind) {
    case SiteKind::kEdge: {
      const Edge e = g.edges.at(site.index);
      const std::size_t a = g.require_index(e.a);
      const std::size_t b = g.require_index(e.b);
      g.vertices[a].self_intersection -= 1;
      g.vertices[b].self_intersection -= 1;
      new_mult = dec.mult[a] + dec.mult[b];
      new_disc = dec.discrepancy[a] + dec.discrepancy[b] + 1;
      g.edges[site.index] = Edge{e.a, id};
      g.edges.insert(g.edges.begin() + static_cast<std::ptrdiff_t>(site.index) + 1, Edge{id, e.b});
      break;
    }
    case SiteKind::kArrow: {
      Arrow& arrow = g.arrows.at(site.index);
      const std::size_t a = g.require_index(arrow.attached_to);
      g.vertices[a].self_intersection -= 1;
      new_mult = dec.mult[a] + arrow.branch_multiplicity;
      new_disc = dec.discrepancy[a] + 1;
      g.edges.push_back(Edge{arrow.attached_to, id});
      arrow.attached_to = id;
      break;
    }
    case SiteKind::kGeneric: {
      const std::size_t a = site.index;
      if (a >= g.vertices.size()) throw std::out_of_range("generic blowup site out of range");
      g.vertices[a].self_intersection -= 1;
      new_mult = dec.mult[a];
      new_disc = dec.discrepancy[a] + 1;
      g.edges.push_back(Edge{g.vertices[a].id, id});
      break;
    }
  }

  new_disc.canonicalize();
  g.vertices.push_back(Vertex{id, -1, 0});
  dec.mult.push_back(new_mult);
  dec.discrepancy.push_back(new_disc);
  return out;
}

DecoratedGraph separate(const DecoratedGraph& dg, std::int64_t m) {
  if (m < 1) throw InvalidParams("separation order must be positive");
  DecoratedGraph current = dg;
  // Each blowup replaces a crossing with sum s by crossings with sums > s,
  // so the loop terminates.
  for (;;) {
    const auto points = intersection_points(current);
    auto bad = std::find_if(points.begin(), points.end(), [m](const IntersectionPoint& p) {
      return p.mult_a + p.mult_b <= m;
    });
    if (bad == points.end()) break;
    current = blow_up(current, bad->site);
  }
  if (current.graph != dg.graph) current.decoration.ample.reset();
  return current;
}

}  // namespace monodromy
