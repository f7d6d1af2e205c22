#include "monodromy/cli.hpp"

#include "monodromy/classical_invariants.hpp"
#include "monodromy/covering_topology.hpp"
#include "monodromy/document.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/floer_page.hpp"
#include "monodromy/monodromy_dynamics.hpp"
#include "monodromy/resolution_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace monodromy {

using json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalAssertion("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

namespace {

struct InputOptions {
  std::string germ;
  std::string graph_file;
  std::string format = "text";
  std::string output;
};

struct AmpleOptions {
  std::string values;
  std::string scale = "1";
  bool absolute = false;
};

GraphDocument load_document(const InputOptions& in) {
  if (!in.germ.empty() && !in.graph_file.empty()) {
    throw InvalidParams("give either --germ or --graph, not both");
  }
  if (!in.germ.empty()) return germ_from_spec(in.germ);
  if (in.graph_file.empty()) throw InvalidParams("an input graph is required (--germ or --graph)");
  std::ifstream file(in.graph_file, std::ios::binary);
  if (!file) throw InvalidParams("cannot read '" + in.graph_file + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_graph(buf.str());
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InvalidParams(std::string("bad ample value: ") + e.what());
    }
  }
  return out;
}

/// `--ample` values divided by `--scale` are b_i / m_i, or b_i itself with
/// `--absolute`.
std::optional<std::vector<Rational>> ample_from_flags(const AmpleOptions& opt, const DecoratedGraph& dg) {
  if (opt.values.empty()) return std::nullopt;
  Rational scale;
  try {
    scale = parse_rational(opt.scale);
  } catch (const std::invalid_argument& e) {
    throw InvalidParams(std::string("bad --scale: ") + e.what());
  }
  if (scale <= 0) throw InvalidParams("--scale must be positive");
  auto values = parse_rational_list(opt.values);
  if (values.size() != dg.graph.vertices.size()) {
    throw InvalidParams("--ample needs " + std::to_string(dg.graph.vertices.size()) +
                        " values in vertex order");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] /= scale;
    if (!opt.absolute) values[i] *= dg.decoration.mult[i];
    values[i].canonicalize();
  }
  return values;
}

json rational_array(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json decoration_json(const DecoratedGraph& dg) {
  json out = json::array();
  for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
    json v = {{"id", dg.graph.vertices[i].id},
              {"self_intersection", dg.graph.vertices[i].self_intersection},
              {"multiplicity", dg.decoration.mult[i]},
              {"discrepancy", to_string(dg.decoration.discrepancy[i])},
              {"open_stratum_euler", dg.graph.open_stratum_euler(i)}};
    if (dg.decoration.ample) v["ample"] = to_string((*dg.decoration.ample)[i]);
    out.push_back(v);
  }
  return out;
}

json cover_json(const StratumCover& c) {
  return {{"vertex", c.vertex},
          {"degree", c.degree},
          {"components", c.components},
          {"genus", c.per_component.genus},
          {"punctures", c.per_component.punctures},
          {"component_euler", c.per_component.euler},
          {"total_euler", c.total_euler},
          {"bm_ranks", json::array({c.bm_ranks[0], c.bm_ranks[1], c.bm_ranks[2]})}};
}

json page_json(const SpectralPage& page, const std::vector<ActionEntry>& order,
               const std::vector<ForbiddenArrow>& forbidden,
               const std::vector<DifferentialArrow>& allowed) {
  json entries = json::array();
  for (const auto& [pos, list] : page.entries) {
    json contribs = json::array();
    for (const auto& c : list) {
      contribs.push_back({{"vertex", c.vertex}, {"bm_degree", c.bm_degree}, {"rank", c.rank}});
    }
    entries.push_back({{"p", pos.p}, {"q", pos.q}, {"rank", page.rank_at(pos)}, {"contributions", contribs}});
  }
  json cz = json::object();
  for (const auto& [id, value] : page.cz) cz[id] = value;
  json actions = json::array();
  for (const auto& a : order) {
    actions.push_back({{"vertex", a.vertex},
                       {"column", to_string(a.key.column)},
                       {"tiebreak", to_string(a.key.tiebreak)},
                       {"position", a.position}});
  }
  json forb = json::array();
  for (const auto& f : forbidden) forb.push_back(json::array({f.source_column, f.target_column}));
  json diffs = json::array();
  for (const auto& d : allowed) {
    diffs.push_back({{"r", d.r},
                     {"source", json::array({d.source.p, d.source.q})},
                     {"target", json::array({d.target.p, d.target.q})}});
  }
  return {{"m", page.m},
          {"n", page.n},
          {"entries", entries},
          {"cz", cz},
          {"action_order", actions},
          {"forbidden", forb},
          {"allowed_differentials", diffs},
          {"euler_characteristic", page.euler_characteristic()}};
}

void print_page_text(std::ostream& out, const SpectralPage& page, const std::vector<ActionEntry>& order,
                     const std::vector<ForbiddenArrow>& forbidden,
                     const std::vector<DifferentialArrow>& allowed) {
  out << "E^1 page, m = " << page.m << ", n = " << page.n << "\n";
  out << "  " << std::setw(6) << "p" << std::setw(6) << "q" << std::setw(6) << "rank"
      << "  contributions\n";
  for (const auto& [pos, list] : page.entries) {
    out << "  " << std::setw(6) << pos.p << std::setw(6) << pos.q << std::setw(6) << page.rank_at(pos)
        << " ";
    for (const auto& c : list) out << " " << c.vertex << ":H" << c.bm_degree << "^BM=" << c.rank;
    out << "\n";
  }
  if (page.entries.empty()) out << "  (empty)\n";
  out << "CZ:";
  for (const auto& [id, v] : page.cz) out << " " << id << "=" << v;
  out << "\naction order:";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) out << (order[k].position == order[k - 1].position ? " = " : " < ");
    else out << " ";
    out << order[k].vertex << "(" << to_string(order[k].key.column) << ", "
        << to_string(order[k].key.tiebreak) << ")";
  }
  out << "\nforbidden column arrows:";
  for (const auto& f : forbidden) out << " " << f.source_column << "->" << f.target_column;
  out << "\nallowed differentials:";
  for (const auto& d : allowed) {
    out << " d" << d.r << ":(" << d.source.p << "," << d.source.q << ")->(" << d.target.p << ","
        << d.target.q << ")";
  }
  out << "\nEuler characteristic: " << page.euler_characteristic() << "\n";
}

std::map<std::int64_t, std::int64_t> parse_target(const std::string& text) {
  std::map<std::int64_t, std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidParams("target entries look like degree:rank");
    try {
      out[std::stoll(item.substr(0, colon))] += std::stoll(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw InvalidParams("bad target entry '" + item + "'");
    }
  }
  return out;
}

struct Emitter {
  const InputOptions& in;
  std::ostream& out;

  void emit(const json& doc, const std::string& text) const {
    std::ostream* target = &out;
    std::ofstream file;
    if (!in.output.empty()) {
      file.open(in.output, std::ios::binary);
      if (!file) throw InvalidParams("cannot write '" + in.output + "'");
      target = &file;
    }
    if (in.format == "json") {
      *target << doc.dump(2) << "\n";
    } else {
      *target << text;
    }
  }
};

json provenance(const GraphDocument& doc, const std::string& command, std::optional<std::uint64_t> seed) {
  json p = {{"tool", "monodromy"},
            {"version", kToolVersion},
            {"command", command},
            {"input_sha256", sha256_hex(serialize_graph(doc))}};
  p["seed"] = seed ? json(*seed) : json(nullptr);
  return p;
}

DecoratedGraph decorated_with_ample(const GraphDocument& doc, const AmpleOptions& ample) {
  DecoratedGraph dg = decorate(doc.graph);
  if (auto b = ample_from_flags(ample, dg)) {
    dg.decoration.ample = std::move(b);
  } else if (doc.ample) {
    dg.decoration.ample = doc.ample;
  }
  return dg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy invariants of plane-curve singularities from resolution dual graphs",
               "monodromy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  InputOptions in;
  AmpleOptions ample;
  std::int64_t m = 0;
  std::int64_t max_m = 12;
  std::size_t zeta_order = 20;
  std::size_t samples = 10000;
  std::size_t calculus_samples = 1000;
  std::uint64_t seed = 42;
  bool check = false;
  bool suggest = false;
  bool literal_arrows = false;
  bool auto_separate = false;
  std::string target;
  std::string convention = "homological";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--germ", in.germ, "built-in germ: cusp | smooth | 'xk-yk K' | 'xp-yq P Q'");
    sub->add_option("--graph", in.graph_file, "graph document (JSON)");
    sub->add_option("--format", in.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", in.output, "write the report to a file");
  };
  auto add_ample = [&](CLI::App* sub) {
    sub->add_option("--ample", ample.values,
                    "comma-separated numerators in vertex order; value/scale is b_i/m_i");
    sub->add_option("--scale", ample.scale, "common denominator for --ample");
    sub->add_flag("--absolute", ample.absolute, "--ample values are b_i rather than b_i/m_i");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check graph invariants");
  add_input(validate_cmd);
  auto* decorate_cmd = app.add_subcommand("decorate", "print multiplicities and discrepancies");
  add_input(decorate_cmd);
  auto* ample_cmd = app.add_subcommand("ample", "check or suggest an ample divisor");
  add_input(ample_cmd);
  add_ample(ample_cmd);
  auto* check_flag = ample_cmd->add_flag("--check", check, "check the given divisor");
  auto* suggest_flag = ample_cmd->add_flag("--suggest", suggest, "suggest an integral divisor");
  check_flag->excludes(suggest_flag);
  auto* separate_cmd = app.add_subcommand("separate", "blow up until m-separated");
  add_input(separate_cmd);
  separate_cmd->add_option("--m", m, "iterate")->required()->check(CLI::PositiveNumber);
  auto* page_cmd = app.add_subcommand("page", "first page of the spectral sequence");
  add_input(page_cmd);
  add_ample(page_cmd);
  page_cmd->add_option("--m", m, "iterate")->required()->check(CLI::PositiveNumber);
  page_cmd->add_flag("--literal-arrows", literal_arrows, "give strict-transform strata punctured-disk topology");
  page_cmd->add_flag("--separate", auto_separate, "separate first and suggest an ample divisor");
  page_cmd->add_option("--convention", convention)->check(CLI::IsMember({"homological", "cohomological"}));
  auto* invariants_cmd = app.add_subcommand("invariants", "Lefschetz numbers, zeta, Milnor number");
  add_input(invariants_cmd);
  invariants_cmd->add_option("--max-m", max_m, "largest iterate")->check(CLI::PositiveNumber);
  invariants_cmd->add_option("--zeta-order", zeta_order, "zeta coefficients up to t^N");
  auto* dynamics_cmd = app.add_subcommand("dynamics", "numeric check of the radius-zero monodromy");
  add_input(dynamics_cmd);
  dynamics_cmd->add_option("--m", m, "iterate")->required()->check(CLI::PositiveNumber);
  dynamics_cmd->add_option("--samples", samples, "samples per edge stratum");
  dynamics_cmd->add_option("--calculus-samples", calculus_samples, "samples for the identity suite");
  dynamics_cmd->add_option("--seed", seed, "RNG seed");
  auto* feasibility_cmd = app.add_subcommand("feasibility", "search for a degeneration pattern");
  add_input(feasibility_cmd);
  add_ample(feasibility_cmd);
  feasibility_cmd->add_option("--m", m, "iterate")->required()->check(CLI::PositiveNumber);
  feasibility_cmd->add_option("--target", target, "degree:rank,... of the limit")->required();
  feasibility_cmd->add_option("--convention", convention)->check(CLI::IsMember({"homological", "cohomological"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const auto conv = convention == "homological" ? DifferentialConvention::kHomological
                                                : DifferentialConvention::kCohomological;
  const Emitter emitter{in, out};

  try {
    const GraphDocument doc = load_document(in);

    if (validate_cmd->parsed()) {
      const auto report = validate_graph(doc.graph);
      json minors = rational_array(report.minors);
      json j = {{"provenance", provenance(doc, "validate", std::nullopt)},
                {"valid", report.ok()},
                {"connected", report.connected},
                {"negative_definite", report.negative_definite},
                {"has_arrow", report.has_arrow},
                {"minors", minors},
                {"violations", report.violations}};
      std::ostringstream text;
      text << (report.ok() ? "valid" : "invalid") << "\n";
      for (const auto& v : report.violations) text << "  " << v << "\n";
      emitter.emit(j, text.str());
      return report.ok() ? kExitOk : kExitValidation;
    }

    if (decorate_cmd->parsed()) {
      const auto dg = decorate(doc.graph);
      json j = {{"provenance", provenance(doc, "decorate", std::nullopt)},
                {"vertices", decoration_json(dg)},
                {"warnings", dg.decoration.warnings}};
      std::ostringstream text;
      text << std::left << std::setw(10) << "vertex" << std::setw(8) << "E.E" << std::setw(8) << "m"
           << "a\n";
      for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
        text << std::setw(10) << dg.graph.vertices[i].id << std::setw(8)
             << dg.graph.vertices[i].self_intersection << std::setw(8) << dg.decoration.mult[i]
             << to_string(dg.decoration.discrepancy[i]) << "\n";
      }
      for (const auto& w : dg.decoration.warnings) text << "warning: " << w << "\n";
      emitter.emit(j, text.str());
      return kExitOk;
    }

    if (ample_cmd->parsed()) {
      DecoratedGraph dg = decorated_with_ample(doc, ample);
      if (suggest) dg.decoration.ample = suggest_ample(dg.graph);
      if (!dg.decoration.ample) throw InvalidParams("no ample divisor given (use --ample or --suggest)");
      const auto result = check_ample(dg.graph, *dg.decoration.ample);
      json j = {{"provenance", provenance(doc, "ample", std::nullopt)},
                {"b", rational_array(*dg.decoration.ample)},
                {"intersections", rational_array(result.intersections)},
                {"all_negative", result.all_negative},
                {"ample", result.ample}};
      std::ostringstream text;
      text << (result.ample ? "ample" : "not ample") << "\n";
      for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
        text << "  " << dg.graph.vertices[i].id << ": b = " << to_string((*dg.decoration.ample)[i])
             << ", H.D = " << to_string(result.intersections[i]) << "\n";
      }
      emitter.emit(j, text.str());
      return result.ample ? kExitOk : kExitValidation;
    }

    if (separate_cmd->parsed()) {
      const auto dg = separate(decorate(doc.graph), m);
      GraphDocument sep_doc;
      sep_doc.graph = dg.graph;
      sep_doc.first_blowup = doc.first_blowup;
      json j = {{"provenance", provenance(doc, "separate", std::nullopt)},
                {"m", m},
                {"graph", json::parse(serialize_graph(sep_doc))},
                {"decoration", decoration_json(dg)}};
      std::ostringstream text;
      text << m << "-separated model: " << dg.graph.vertices.size() << " vertices, "
           << dg.graph.edges.size() << " edges\n";
      text << serialize_graph(sep_doc);
      emitter.emit(j, text.str());
      return kExitOk;
    }

    if (page_cmd->parsed() || feasibility_cmd->parsed()) {
      DecoratedGraph dg = decorated_with_ample(doc, ample);
      if (auto_separate) {
        dg = separate(dg, m);
        dg.decoration.ample = suggest_integral_ample(dg, m);
      } else if (!dg.decoration.ample) {
        dg.decoration.ample = suggest_integral_ample(dg, m);
      }
      if (!check_ample(dg.graph, *dg.decoration.ample).ample) {
        throw InvalidParams("the given divisor is not ample");
      }
      PageOptions options;
      if (literal_arrows) options.arrows = ProperTransformMode::kLiteral;
      const auto page = assemble_page(dg, m, options);
      const auto order = action_order(dg, m);
      const auto forbidden = forbidden_arrows(page, order);
      const auto allowed = allowed_differentials(page, forbidden, conv);

      json j = {{"provenance", provenance(doc, page_cmd->parsed() ? "page" : "feasibility", std::nullopt)},
                {"ample", rational_array(*dg.decoration.ample)},
                {"page", page_json(page, order, forbidden, allowed)}};
      std::ostringstream text;
      print_page_text(text, page, order, forbidden, allowed);

      if (feasibility_cmd->parsed()) {
        const auto result = degeneration_feasibility(page, forbidden, parse_target(target), conv);
        json diffs = json::array();
        for (const auto& d : result.differentials) {
          diffs.push_back({{"r", d.arrow.r},
                           {"source", json::array({d.arrow.source.p, d.arrow.source.q})},
                           {"target", json::array({d.arrow.target.p, d.arrow.target.q})},
                           {"rank", d.rank}});
        }
        json limit = json::object();
        for (const auto& [deg, rank] : result.limit) limit[std::to_string(deg)] = rank;
        j["feasibility"] = {{"feasible", result.feasible},
                            {"differentials", diffs},
                            {"limit", limit},
                            {"reason", result.reason}};
        text << (result.feasible ? "feasible" : "infeasible");
        if (!result.reason.empty()) text << ": " << result.reason;
        text << "\n";
        for (const auto& d : result.differentials) {
          text << "  d" << d.arrow.r << ": (" << d.arrow.source.p << "," << d.arrow.source.q << ") -> ("
               << d.arrow.target.p << "," << d.arrow.target.q << ") rank " << d.rank << "\n";
        }
      }
      emitter.emit(j, text.str());
      return kExitOk;
    }

    if (invariants_cmd->parsed()) {
      const auto dg = decorate(doc.graph);
      const auto report = compute_invariants(dg, max_m, zeta_order, doc.first_blowup);
      json lef = json::object();
      for (const auto& [k, v] : report.lefschetz) lef[std::to_string(k)] = v;
      json covers = json::array();
      for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
        if (dg.graph.vertices[i].genus == 0) covers.push_back(cover_json(stratum_cover(dg, i)));
      }
      json inv = {{"milnor", report.milnor},
                  {"multiplicity", report.multiplicity},
                  {"euler_fiber", report.euler_fiber},
                  {"lefschetz", lef},
                  {"zeta_coeffs", rational_array(report.zeta_coeffs)},
                  {"covers", covers}};
      std::ostringstream text;
      text << "Milnor number mu = " << report.milnor << "\n";
      text << "multiplicity nu = " << report.multiplicity << "\n";
      text << "Euler characteristic of the Milnor fiber = " << report.euler_fiber << "\n";
      text << "Lefschetz numbers:";
      for (const auto& [k, v] : report.lefschetz) text << " L(" << k << ")=" << v;
      text << "\nzeta coefficients:";
      for (const auto& c : report.zeta_coeffs) text << " " << to_string(c);
      text << "\n";
      if (report.tangent_cone) {
        const auto& tc = *report.tangent_cone;
        inv["tangent_cone"] = {{"vertex", tc.vertex},
                               {"bm_ranks", json::array({tc.ranks[0], tc.ranks[1], tc.ranks[2]})},
                               {"degree_shift", tc.degree_shift},
                               {"non_reduced", tc.non_reduced}};
        text << "tangent cone column (" << tc.vertex << "): H^BM = [" << tc.ranks[0] << ", "
             << tc.ranks[1] << ", " << tc.ranks[2] << "], shift " << tc.degree_shift << "\n";
        for (const auto& w : tc.warnings) text << "warning: " << w << "\n";
      }
      json j = {{"provenance", provenance(doc, "invariants", std::nullopt)}, {"invariants", inv}};
      emitter.emit(j, text.str());
      return kExitOk;
    }

    if (dynamics_cmd->parsed()) {
      const auto dg = decorate(doc.graph);
      const auto sep = separation_bound_check(dg, m, samples, seed);
      const auto calc = calculus_identity_suite(calculus_samples, seed);

      json strata = json::array();
      std::ostringstream text;
      text << "dynamics check, m = " << m << ", seed " << seed << "\n";
      bool pure_ok = true;
      json pure = json::array();
      for (std::size_t i = 0; i < dg.graph.vertices.size(); ++i) {
        const SimplexPoint pt({dg.graph.vertices[i].id}, {1.0});
        const bool fixed = fixed_point_test(pt, {dg.decoration.mult[i]}, m);
        const bool expected = m % dg.decoration.mult[i] == 0;
        pure_ok = pure_ok && fixed == expected;
        pure.push_back({{"vertex", dg.graph.vertices[i].id}, {"fixed", fixed}});
        text << "  pure " << dg.graph.vertices[i].id << ": " << (fixed ? "fixed" : "moved") << "\n";
      }
      for (const auto& e : sep.edges) {
        std::ostringstream lo, hi, bound;
        lo << std::setprecision(12) << e.min_observed;
        hi << std::setprecision(12) << e.max_observed;
        bound << std::setprecision(12) << e.bound;
        strata.push_back({{"a", e.a},
                          {"b", e.b},
                          {"bound", bound.str()},
                          {"min", lo.str()},
                          {"max", hi.str()},
                          {"samples", e.samples},
                          {"fixed_hits", e.fixed_hits}});
        text << "  edge " << e.a << "-" << e.b << ": m*l in [" << lo.str() << ", " << hi.str()
             << "], bound " << bound.str() << ", fixed " << e.fixed_hits << "/" << e.samples << "\n";
      }
      json checks = json::array();
      for (const auto& c : calc.checks) {
        std::ostringstream err_s;
        err_s << std::setprecision(6) << c.worst_error;
        checks.push_back({{"name", c.name}, {"worst_error", err_s.str()}, {"samples", c.samples}});
        text << "  " << c.name << ": worst error " << err_s.str() << "\n";
      }
      if (!pure_ok) throw InternalAssertion("pure-stratum fixed-point test disagrees with m_i | m");
      text << "pass\n";
      json j = {{"provenance", provenance(doc, "dynamics", seed)},
                {"m", m},
                {"pure_strata", pure},
                {"edge_strata", strata},
                {"calculus", checks},
                {"passed", true}};
      emitter.emit(j, text.str());
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SeparationViolated& e) {
    err << "separation violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const IdentityViolated& e) {
    err << "identity violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalAssertion& e) {
    err << "internal assertion failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitInternal;
}

}  // namespace monodromy
