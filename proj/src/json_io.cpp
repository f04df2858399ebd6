#include "fgraph/json_io.hpp"

#include <fstream>

#include "fgraph/pairs.hpp"

namespace fgraph {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw MalformedValue(what);
}

std::string id_field(const Json& j, const char* what) {
  expect(j.is_string(), std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<ElementId> id_list(const Json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array of strings");
  std::vector<ElementId> out;
  for (const auto& item : j) out.push_back(id_field(item, what));
  return out;
}

}  // namespace

Json functor_to_json(const FunctorSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case FunctorKind::Identity:
      j["kind"] = "identity";
      break;
    case FunctorKind::UPair:
      j["kind"] = "upair";
      break;
    case FunctorKind::DPair:
      j["kind"] = "dpair";
      break;
    case FunctorKind::Powerset:
      j["kind"] = "powerset";
      break;
    case FunctorKind::DirectedHyper:
      j["kind"] = "directed_hyper";
      break;
    case FunctorKind::KTuple:
      j["kind"] = "ktuple";
      j["k"] = spec.k();
      j["min_equal"] = spec.min_equal();
      break;
    case FunctorKind::Colored:
      j["kind"] = "colored";
      j["edge_colors"] = spec.edge_colors().elements();
      j["vertex_colors"] = spec.vertex_colors().elements();
      j["inner"] = functor_to_json(spec.inner());
      break;
    case FunctorKind::Sum: {
      j["kind"] = "sum";
      Json parts = Json::array();
      for (const auto& part : spec.parts())
        parts.push_back(functor_to_json(part));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

FunctorSpec functor_from_json(const Json& j) {
  expect(j.is_object() && j.contains("kind"),
         "functor must be an object with a \"kind\" field");
  std::string kind = id_field(j.at("kind"), "functor kind");
  if (kind == "identity") return FunctorSpec::identity();
  if (kind == "upair") return FunctorSpec::upair();
  if (kind == "dpair") return FunctorSpec::dpair();
  if (kind == "powerset") return FunctorSpec::powerset();
  if (kind == "directed_hyper") return FunctorSpec::directed_hyper();
  if (kind == "ktuple") {
    expect(j.contains("k") && j.at("k").is_number_integer(),
           "ktuple functor needs an integer \"k\"");
    int k = j.at("k").get<int>();
    int min_equal = 0;
    if (j.contains("min_equal")) {
      expect(j.at("min_equal").is_number_integer(),
             "\"min_equal\" must be an integer");
      min_equal = j.at("min_equal").get<int>();
    }
    expect(k >= 1, "ktuple functor needs k >= 1");
    expect(min_equal <= k, "ktuple functor needs min_equal <= k");
    return FunctorSpec::ktuple(k, min_equal);
  }
  if (kind == "colored") {
    expect(j.contains("edge_colors") && j.contains("vertex_colors") &&
               j.contains("inner"),
           "colored functor needs edge_colors, vertex_colors, inner");
    return FunctorSpec::colored(
        FiniteSet(id_list(j.at("edge_colors"), "edge color")),
        FiniteSet(id_list(j.at("vertex_colors"), "vertex color")),
        functor_from_json(j.at("inner")));
  }
  if (kind == "sum") {
    expect(j.contains("parts") && j.at("parts").is_array() &&
               !j.at("parts").empty(),
           "sum functor needs a nonempty \"parts\" array");
    std::vector<FunctorSpec> parts;
    for (const auto& part : j.at("parts"))
      parts.push_back(functor_from_json(part));
    return FunctorSpec::sum(std::move(parts));
  }
  throw MalformedValue("unknown functor kind: " + kind);
}

Json value_to_json(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Atom:
      return Json(v.label());
    case ValueKind::Tuple: {
      Json j = Json::array();
      for (const auto& c : v.children()) j.push_back(value_to_json(c));
      return j;
    }
    case ValueKind::SetOf: {
      Json members = Json::array();
      for (const auto& c : v.children()) members.push_back(value_to_json(c));
      return Json{{"set", std::move(members)}};
    }
    case ValueKind::Tagged:
      return Json{{"part", v.part()}, {"value", value_to_json(v.inner())}};
    case ValueKind::Colored:
      return Json{{"color", v.label()}, {"value", value_to_json(v.inner())}};
  }
  throw MalformedValue("unreachable value kind");
}

Value value_from_json(const Json& j) {
  if (j.is_string()) return Value::atom(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Value> items;
    for (const auto& item : j) items.push_back(value_from_json(item));
    return Value::tuple(std::move(items));
  }
  if (j.is_object()) {
    if (j.contains("set")) {
      expect(j.at("set").is_array(), "\"set\" must be an array");
      std::vector<Value> items;
      for (const auto& item : j.at("set"))
        items.push_back(value_from_json(item));
      return Value::set_of(std::move(items));
    }
    if (j.contains("part")) {
      expect(j.at("part").is_number_unsigned() && j.contains("value"),
             "tagged value needs an unsigned \"part\" and a \"value\"");
      return Value::tagged(j.at("part").get<std::size_t>(),
                           value_from_json(j.at("value")));
    }
    if (j.contains("color")) {
      expect(j.contains("value"), "colored value needs a \"value\"");
      return Value::colored(id_field(j.at("color"), "color"),
                            value_from_json(j.at("value")));
    }
  }
  throw MalformedValue("unrecognized value shape: " + j.dump());
}

Json graph_to_json(const FGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"id", e}, {"value", value_to_json(g.value_of(e))}});
  return Json{{"functor", functor_to_json(g.spec)},
              {"vertices", g.vertices.elements()},
              {"edges", std::move(edges)}};
}

GraphPtr graph_from_json(const Json& j) {
  expect(j.is_object() && j.contains("functor") && j.contains("vertices") &&
             j.contains("edges"),
         "graph needs functor, vertices, edges");
  FunctorSpec spec = functor_from_json(j.at("functor"));
  FiniteSet vertices(id_list(j.at("vertices"), "vertex id"));
  expect(j.at("edges").is_array(), "\"edges\" must be an array");
  std::vector<ElementId> edge_ids;
  std::map<ElementId, Value> structure;
  for (const auto& e : j.at("edges")) {
    expect(e.is_object() && e.contains("id") && e.contains("value"),
           "each edge needs an id and a value");
    ElementId id = id_field(e.at("id"), "edge id");
    expect(!structure.count(id), "duplicate edge id: " + id);
    edge_ids.push_back(id);
    structure.emplace(std::move(id), value_from_json(e.at("value")));
  }
  return make_graph(std::move(spec), FiniteSet(std::move(edge_ids)),
                    std::move(vertices), std::move(structure));
}

Json idmap_to_json(const IdMap& f) {
  Json j = Json::object();
  for (const auto& [k, v] : f) j[k] = v;
  return j;
}

IdMap idmap_from_json(const Json& j) {
  expect(j.is_object(), "map must be a JSON object of strings");
  IdMap f;
  for (const auto& [k, v] : j.items()) f[k] = id_field(v, "map image");
  return f;
}

Json hom_maps_to_json(const Hom& phi) {
  return Json{{"edge_map", idmap_to_json(phi.edge_map)},
              {"vertex_map", idmap_to_json(phi.vertex_map)}};
}

Hom hom_from_json(const Json& j, GraphPtr source, GraphPtr target) {
  expect(j.is_object() && j.contains("edge_map") && j.contains("vertex_map"),
         "hom needs edge_map and vertex_map");
  Hom phi;
  phi.source = std::move(source);
  phi.target = std::move(target);
  phi.edge_map = idmap_from_json(j.at("edge_map"));
  phi.vertex_map = idmap_from_json(j.at("vertex_map"));
  return phi;
}

namespace {

Json pair_list_to_json(const std::vector<std::pair<ElementId, ElementId>>& v) {
  Json j = Json::array();
  for (const auto& [a, b] : v) j.push_back(Json::array({a, b}));
  return j;
}

std::vector<std::pair<ElementId, ElementId>> pair_list_from_json(
    const Json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array of pairs");
  std::vector<std::pair<ElementId, ElementId>> out;
  for (const auto& item : j) {
    expect(item.is_array() && item.size() == 2,
           std::string(what) + " entries must be two-element arrays");
    out.emplace_back(id_field(item[0], what), id_field(item[1], what));
  }
  return out;
}

}  // namespace

Json relation_to_json(const RelationPair& r) {
  return Json{{"edge_pairs", pair_list_to_json(r.edge_pairs)},
              {"vertex_pairs", pair_list_to_json(r.vertex_pairs)}};
}

RelationPair relation_from_json(const Json& j, GraphPtr left, GraphPtr right) {
  expect(j.is_object() && j.contains("edge_pairs") &&
             j.contains("vertex_pairs"),
         "relation needs edge_pairs and vertex_pairs");
  RelationPair r;
  r.left = std::move(left);
  r.right = std::move(right);
  r.edge_pairs = pair_list_from_json(j.at("edge_pairs"), "edge pair");
  r.vertex_pairs = pair_list_from_json(j.at("vertex_pairs"), "vertex pair");
  r.normalize();
  return r;
}

Json graph_relation_to_json(const GraphRelation& r) {
  Json j = relation_to_json(r.pair);
  Json witness = Json::object();
  for (const auto& [pair, value] : r.witness)
    witness[pair.first + "|" + pair.second] = value_to_json(value);
  j["witness"] = std::move(witness);
  return j;
}

Json colorset_to_json(const ColorSet& x) {
  return Json{{"edge_colors", x.edge_colors.elements()},
              {"vertex_colors", x.vertex_colors.elements()}};
}

ColorSet colorset_from_json(const Json& j) {
  expect(j.is_object() && j.contains("edge_colors") &&
             j.contains("vertex_colors"),
         "color set needs edge_colors and vertex_colors");
  return ColorSet{FiniteSet(id_list(j.at("edge_colors"), "edge color")),
                  FiniteSet(id_list(j.at("vertex_colors"), "vertex color"))};
}

Json coloring_to_json(const Coloring& c) {
  return Json{{"edge_map", idmap_to_json(c.edge_map)},
              {"vertex_map", idmap_to_json(c.vertex_map)}};
}

Coloring coloring_from_json(const Json& j) {
  expect(j.is_object() && j.contains("edge_map") && j.contains("vertex_map"),
         "coloring needs edge_map and vertex_map");
  Coloring c;
  c.edge_map = idmap_from_json(j.at("edge_map"));
  c.vertex_map = idmap_from_json(j.at("vertex_map"));
  return c;
}

Json pattern_to_json(const Pattern& p) {
  return Json{{"colors", colorset_to_json(p.colors)},
              {"edge_subset", p.edge_subset.elements()},
              {"vertex_subset", p.vertex_subset.elements()}};
}

Pattern pattern_from_json(const Json& j) {
  expect(j.is_object() && j.contains("colors") && j.contains("edge_subset") &&
             j.contains("vertex_subset"),
         "pattern needs colors, edge_subset, vertex_subset");
  return Pattern{colorset_from_json(j.at("colors")),
                 FiniteSet(id_list(j.at("edge_subset"), "pattern edge")),
                 FiniteSet(id_list(j.at("vertex_subset"), "pattern vertex"))};
}

Json handle_to_json(const SubgraphHandle& h) {
  return Json{{"edges", h.edges.elements()},
              {"vertices", h.vertices.elements()}};
}

Json closure_report_to_json(const ClosureAuditReport& report) {
  Json probes = Json::array();
  for (const auto& p : report.probes) {
    Json row{{"closure_member", p.closure_member},
             {"equational_member", p.equational_member},
             {"agree", p.agree}};
    if (!p.boundedness_warnings.empty())
      row["boundedness_warnings"] = p.boundedness_warnings;
    probes.push_back(std::move(row));
  }
  return Json{{"mode", closure_mode_name(report.mode)},
              {"probes", std::move(probes)},
              {"all_agree", report.all_agree}};
}

std::string closure_mode_name(ClosureMode mode) {
  switch (mode) {
    case ClosureMode::Covariety:
      return "covariety";
    case ClosureMode::Quasi:
      return "quasi";
    case ClosureMode::Complete:
      return "complete";
  }
  return "covariety";
}

std::optional<ClosureMode> closure_mode_from_name(const std::string& name) {
  if (name == "covariety") return ClosureMode::Covariety;
  if (name == "quasi") return ClosureMode::Quasi;
  if (name == "complete") return ClosureMode::Complete;
  return std::nullopt;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedValue("cannot read file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedValue("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace fgraph
