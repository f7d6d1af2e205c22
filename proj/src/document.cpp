#include "monodromy/document.hpp"

#include "monodromy/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace monodromy {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      schema_fail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const json& require_field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_fail(path, "expected integer");
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected string");
  return v.get<std::string>();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                      ": malformed document");
  }
  if (!root.is_object()) schema_fail("$", "expected an object");
  reject_unknown(root, "", {"schema_version", "vertices", "edges", "arrows", "ample", "tags"});

  GraphDocument doc;
  doc.schema_version = as_string(require_field(root, "", "schema_version"), "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    schema_fail("schema_version", "unsupported version '" + doc.schema_version + "'");
  }

  const json& vertices = require_field(root, "", "vertices");
  if (!vertices.is_array()) schema_fail("vertices", "expected array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_object()) schema_fail(path, "expected object");
    reject_unknown(v, path, {"id", "self_intersection", "genus"});
    Vertex vert;
    vert.id = as_string(require_field(v, path, "id"), path + ".id");
    vert.self_intersection =
        as_int(require_field(v, path, "self_intersection"), path + ".self_intersection");
    if (auto g = v.find("genus"); g != v.end()) vert.genus = as_int(*g, path + ".genus");
    doc.graph.vertices.push_back(std::move(vert));
  }

  if (auto edges = root.find("edges"); edges != root.end()) {
    if (!edges->is_array()) schema_fail("edges", "expected array");
    for (std::size_t i = 0; i < edges->size(); ++i) {
      const std::string path = "edges[" + std::to_string(i) + "]";
      const json& e = (*edges)[i];
      if (!e.is_array() || e.size() != 2) schema_fail(path, "expected a pair of vertex ids");
      doc.graph.edges.push_back({as_string(e[0], path + "[0]"), as_string(e[1], path + "[1]")});
    }
  }

  if (auto arrows = root.find("arrows"); arrows != root.end()) {
    if (!arrows->is_array()) schema_fail("arrows", "expected array");
    for (std::size_t i = 0; i < arrows->size(); ++i) {
      const std::string path = "arrows[" + std::to_string(i) + "]";
      const json& a = (*arrows)[i];
      if (!a.is_object()) schema_fail(path, "expected object");
      reject_unknown(a, path, {"attached_to", "branch_multiplicity"});
      Arrow arrow;
      arrow.attached_to = as_string(require_field(a, path, "attached_to"), path + ".attached_to");
      if (auto bm = a.find("branch_multiplicity"); bm != a.end()) {
        arrow.branch_multiplicity = as_int(*bm, path + ".branch_multiplicity");
      }
      doc.graph.arrows.push_back(std::move(arrow));
    }
  }

  if (auto tags = root.find("tags"); tags != root.end()) {
    if (!tags->is_object()) schema_fail("tags", "expected object");
    reject_unknown(*tags, "tags", {"first_blowup"});
    if (auto fb = tags->find("first_blowup"); fb != tags->end()) {
      doc.first_blowup = as_string(*fb, "tags.first_blowup");
    }
  }

  require_valid(doc.graph);

  if (doc.first_blowup && !doc.graph.index_of(*doc.first_blowup)) {
    throw ValidationError({"first_blowup tag names unknown vertex '" + *doc.first_blowup + "'"});
  }

  if (auto ample = root.find("ample"); ample != root.end()) {
    if (!ample->is_object()) schema_fail("ample", "expected object of vertex id -> rational");
    std::vector<std::optional<Rational>> b(doc.graph.vertices.size());
    for (const auto& [key, value] : ample->items()) {
      const std::string path = "ample." + key;
      auto idx = doc.graph.index_of(key);
      if (!idx) schema_fail(path, "unknown vertex");
      try {
        if (value.is_number_integer()) {
          b[*idx] = Rational(value.get<long>());
        } else {
          b[*idx] = parse_rational(as_string(value, path));
        }
      } catch (const std::invalid_argument& e) {
        schema_fail(path, e.what());
      }
    }
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i]) schema_fail("ample", "missing coefficient for '" + doc.graph.vertices[i].id + "'");
      coeffs.push_back(*b[i]);
    }
    doc.ample = std::move(coeffs);
  }
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  json vertices = json::array();
  for (const auto& v : doc.graph.vertices) {
    vertices.push_back({{"id", v.id}, {"self_intersection", v.self_intersection}, {"genus", v.genus}});
  }
  root["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : doc.graph.edges) edges.push_back(json::array({e.a, e.b}));
  root["edges"] = edges;
  json arrows = json::array();
  for (const auto& a : doc.graph.arrows) {
    arrows.push_back({{"attached_to", a.attached_to}, {"branch_multiplicity", a.branch_multiplicity}});
  }
  root["arrows"] = arrows;
  if (doc.ample) {
    json ample = json::object();
    for (std::size_t i = 0; i < doc.ample->size(); ++i) {
      ample[doc.graph.vertices.at(i).id] = to_string((*doc.ample)[i]);
    }
    root["ample"] = ample;
  }
  if (doc.first_blowup) root["tags"] = {{"first_blowup", *doc.first_blowup}};
  return root.dump(2) + "\n";
}

DualGraph resolve_one_pair(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw InvalidParams("x^p - y^q needs coprime p, q >= 2");
  }
  DualGraph g;
  std::vector<std::int64_t> mult;
  // Local model at the current centre: curve u^a = v^b, with the axes {u = 0}
  // and {v = 0} possibly exceptional curves.
  std::int64_t a = p;
  std::int64_t b = q;
  std::optional<std::size_t> on_u;
  std::optional<std::size_t> on_v;

  auto attach_arrow = [&](std::size_t v) { g.arrows.push_back({g.vertices[v].id, 1}); };

  for (;;) {
    if (a == 1 && b == 1 && !(on_u && on_v)) {
      attach_arrow(on_u ? *on_u : *on_v);
      break;
    }
    if (a == 1 && b >= 2 && !on_u) {
      attach_arrow(*on_v);
      break;
    }
    if (b == 1 && a >= 2 && !on_v) {
      attach_arrow(*on_u);
      break;
    }

    const std::size_t e = g.vertices.size();
    const std::string id = "E" + std::to_string(e + 1);
    mult.push_back((on_u ? mult[*on_u] : 0) + (on_v ? mult[*on_v] : 0) + std::min(a, b));
    g.vertices.push_back({id, -1, 0});
    if (on_u) g.vertices[*on_u].self_intersection -= 1;
    if (on_v) g.vertices[*on_v].self_intersection -= 1;
    if (on_u && on_v) {
      const std::string ua = g.vertices[*on_u].id;
      const std::string va = g.vertices[*on_v].id;
      auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge& x) {
        return (x.a == ua && x.b == va) || (x.a == va && x.b == ua);
      });
      if (it == g.edges.end()) throw InternalAssertion("missing crossing edge in resolution");
      *it = Edge{ua, id};
      g.edges.push_back(Edge{id, va});
    } else if (on_u || on_v) {
      g.edges.push_back(Edge{g.vertices[on_u ? *on_u : *on_v].id, id});
    }

    if (a == b) {
      attach_arrow(e);
      break;
    }
    if (a < b) {
      on_v = e;
      b -= a;
    } else {
      on_u = e;
      a -= b;
    }
  }
  return g;
}

GraphDocument germ_generator(std::string_view name, const std::vector<std::int64_t>& params) {
  GraphDocument doc;
  auto expect_params = [&](std::size_t n) {
    if (params.size() != n) {
      throw InvalidParams("germ '" + std::string(name) + "' takes " + std::to_string(n) +
                          " parameter(s)");
    }
  };

  if (name == "cusp") {
    expect_params(0);
    doc.graph.vertices = {{"D1", -3, 0}, {"D2", -2, 0}, {"D3", -1, 0}};
    doc.graph.edges = {{"D1", "D3"}, {"D2", "D3"}};
    doc.graph.arrows = {{"D3", 1}};
    doc.first_blowup = "D1";
  } else if (name == "smooth") {
    expect_params(0);
    doc.graph.vertices = {{"E1", -1, 0}};
    doc.graph.arrows = {{"E1", 1}};
    doc.first_blowup = "E1";
  } else if (name == "xk-yk") {
    expect_params(1);
    const std::int64_t k = params[0];
    if (k < 2) throw InvalidParams("xk-yk needs k >= 2");
    doc.graph.vertices = {{"E1", -1, 0}};
    for (std::int64_t i = 0; i < k; ++i) doc.graph.arrows.push_back({"E1", 1});
    doc.first_blowup = "E1";
  } else if (name == "xp-yq") {
    expect_params(2);
    doc.graph = resolve_one_pair(std::min(params[0], params[1]), std::max(params[0], params[1]));
    doc.first_blowup = "E1";
  } else {
    throw InvalidParams("unknown germ '" + std::string(name) + "'");
  }
  require_valid(doc.graph);
  return doc;
}

GraphDocument germ_from_spec(std::string_view spec) {
  std::string s(spec);
  for (char& c : s) {
    if (c == ':' || c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::string name;
  in >> name;
  std::vector<std::int64_t> params;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InvalidParams("germ parameter '" + token + "' is not an integer");
    }
  }
  return germ_generator(name, params);
}

bool isomorphic(const DualGraph& a, const DualGraph& b) {
  const std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.arrows.size() != b.arrows.size()) {
    return false;
  }
  const RationalMatrix ma = a.intersection_matrix();
  const RationalMatrix mb = b.intersection_matrix();
  auto arrow_load = [](const DualGraph& g, std::size_t v) {
    std::vector<std::int64_t> load;
    for (std::size_t k : g.arrows_at(v)) load.push_back(g.arrows[k].branch_multiplicity);
    std::sort(load.begin(), load.end());
    return load;
  };

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || a.vertices[i].genus != b.vertices[j].genus || ma(i, i) != mb(j, j) ||
          arrow_load(a, i) != arrow_load(b, j)) {
        continue;
      }
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = ma(i, k) == mb(j, image[k]);
      if (!ok) continue;
      used[j] = true;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace monodromy
