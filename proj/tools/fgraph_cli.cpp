#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fgraph/hom_search.hpp"
#include "fgraph/json_io.hpp"

using namespace fgraph;

namespace {

struct Outcome {
  int code = 0;
  Json body = Json::object();
};

GraphPtr load_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

Hom load_hom(const std::string& path, GraphPtr src, GraphPtr tgt) {
  return hom_from_json(read_json_file(path), std::move(src), std::move(tgt));
}

/// Commands whose contract needs a homomorphism reject anything else up
/// front; only check-hom treats the hom condition as its verdict.
Hom load_checked_hom(const std::string& path, GraphPtr src, GraphPtr tgt) {
  Hom phi = load_hom(path, std::move(src), std::move(tgt));
  HomVerdict v = validate_hom(phi);
  if (!v.ok)
    throw PreconditionViolated(path + " is not a homomorphism: " + v.reason);
  return phi;
}

FiniteSet ids_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedValue(what + " must be an array of ids");
  FiniteSet out;
  for (const auto& x : j) {
    if (!x.is_string()) throw MalformedValue(what + " must contain strings");
    out.insert(x.get<std::string>());
  }
  return out;
}

/// {"edges": [...], "vertices": [...]}, either key optional.
std::pair<FiniteSet, FiniteSet> load_subset(const std::string& path) {
  Json j = read_json_file(path);
  if (!j.is_object())
    throw MalformedValue(path + ": subset file must be an object");
  FiniteSet edges, vertices;
  if (j.contains("edges")) edges = ids_from(j.at("edges"), "edges");
  if (j.contains("vertices")) vertices = ids_from(j.at("vertices"), "vertices");
  return {edges, vertices};
}

SubgraphHandle load_handle(const GraphPtr& g, const std::string& path) {
  auto [edges, vertices] = load_subset(path);
  SubgraphVerdict v = subgraph_check(g, edges, vertices);
  if (!v.handle) throw PreconditionViolated(path + ": " + v.reason);
  return *v.handle;
}

EquivPair load_equiv(const std::string& path, const GraphPtr& g) {
  RelationPair r = relation_from_json(read_json_file(path), g, g);
  for (const auto& [a, b] : r.edge_pairs)
    if (!g->edges.contains(a) || !g->edges.contains(b))
      throw DomainMismatch("edge pair (" + a + ", " + b +
                           ") names a missing edge");
  for (const auto& [a, b] : r.vertex_pairs)
    if (!g->vertices.contains(a) || !g->vertices.contains(b))
      throw DomainMismatch("vertex pair (" + a + ", " + b +
                           ") names a missing vertex");
  return {Partition::from_pairs(g->edges, r.edge_pairs),
          Partition::from_pairs(g->vertices, r.vertex_pairs)};
}

Json maps_json(const Hom& phi) { return hom_maps_to_json(phi); }

Json classes_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& cls : p.classes()) out.push_back(cls);
  return out;
}

Json pair_json(const std::pair<ElementId, ElementId>& p) {
  return Json::array({p.first, p.second});
}

Json relation_envelope(const GraphRelation& r) {
  Json j = graph_relation_to_json(r);
  j["graph"] = graph_to_json(*r.graph);
  j["to_left"] = maps_json(r.left_projection);
  j["to_right"] = maps_json(r.right_projection);
  return j;
}

Outcome run_validate(const std::string& path) {
  Json j = read_json_file(path);
  try {
    GraphPtr g = graph_from_json(j);
    return {0,
            Json{{"ok", true},
                 {"edges", g->edges.elements()},
                 {"vertices", g->vertices.elements()}}};
  } catch (const MalformedValue& e) {
    return {1, Json{{"ok", false}, {"reason", e.what()}}};
  } catch (const SpecMismatch& e) {
    return {1, Json{{"ok", false}, {"reason", e.what()}}};
  }
}

Outcome run_check_hom(const std::string& src, const std::string& tgt,
                      const std::string& hom) {
  GraphPtr a = load_graph(src), b = load_graph(tgt);
  Hom phi = load_hom(hom, a, b);
  HomVerdict v = validate_hom(phi);
  if (!v.ok) {
    Json body{{"ok", false}, {"reason", v.reason}};
    if (v.failing_edge) body["failing_edge"] = *v.failing_edge;
    return {1, body};
  }
  return {0,
          Json{{"ok", true},
               {"injective", phi.is_injective()},
               {"surjective", phi.is_surjective()}}};
}

Outcome run_factorize(const std::string& src, const std::string& tgt,
                      const std::string& hom) {
  Hom phi = load_checked_hom(hom, load_graph(src), load_graph(tgt));
  Factorization f = factorize(phi);
  return {0,
          Json{{"ok", true},
               {"mid", graph_to_json(*f.mid)},
               {"epi", maps_json(f.epi)},
               {"mono", maps_json(f.mono)}}};
}

Outcome run_kernel(const std::string& src, const std::string& tgt,
                   const std::string& hom) {
  Hom phi = load_checked_hom(hom, load_graph(src), load_graph(tgt));
  EquivPair k = kernel(phi);
  return {0,
          Json{{"ok", true},
               {"edge_classes", classes_json(k.edges)},
               {"vertex_classes", classes_json(k.vertices)}}};
}

Outcome run_quotient(const std::string& gpath, const std::string& pairs) {
  GraphPtr g = load_graph(gpath);
  EquivPair theta = load_equiv(pairs, g);
  CongruenceVerdict v = is_congruence(*g, theta);
  if (!v.ok)
    return {1, Json{{"ok", false},
                    {"reason", "not a congruence"},
                    {"counterexample", pair_json(*v.counterexample)}}};
  QuotientResult q = quotient(g, theta);
  return {0,
          Json{{"ok", true},
               {"graph", graph_to_json(*q.graph)},
               {"projection", maps_json(q.projection)}}};
}

Outcome run_mediate_epi(const std::string& apex, const std::string& left,
                        const std::string& right, const std::string& epi_path,
                        const std::string& other_path) {
  GraphPtr a = load_graph(apex), b = load_graph(left), c = load_graph(right);
  Hom epi = load_checked_hom(epi_path, a, b);
  Hom other = load_checked_hom(other_path, a, c);
  EpiMediation m = mediate_through_epi(epi, other);
  if (!m.hom) {
    Json body{{"ok", false}, {"reason", m.reason}};
    if (m.violating_pair) {
      body["violating_pair"] = pair_json(*m.violating_pair);
      body["pair_is_edge"] = m.pair_is_edge;
    }
    return {1, body};
  }
  return {0, Json{{"ok", true}, {"hom", maps_json(*m.hom)}}};
}

Outcome run_mediate_mono(const std::string& apex, const std::string& mid,
                         const std::string& tgt, const std::string& mono_path,
                         const std::string& other_path) {
  GraphPtr a = load_graph(apex), b = load_graph(mid), c = load_graph(tgt);
  Hom mono = load_checked_hom(mono_path, b, c);
  Hom other = load_checked_hom(other_path, a, c);
  MonoMediation m = mediate_through_mono(mono, other);
  if (!m.hom) {
    Json body{{"ok", false}, {"reason", m.reason}};
    if (m.missing) {
      body["missing"] = *m.missing;
      body["missing_is_edge"] = m.missing_is_edge;
    }
    return {1, body};
  }
  return {0, Json{{"ok", true}, {"hom", maps_json(*m.hom)}}};
}

Outcome run_coproduct(const std::vector<std::string>& paths) {
  std::vector<GraphPtr> parts;
  for (const auto& p : paths) parts.push_back(load_graph(p));
  CoproductResult c = coproduct(parts);
  Json inj = Json::array();
  for (const auto& phi : c.injections) inj.push_back(maps_json(phi));
  return {0, Json{{"ok", true},
                  {"graph", graph_to_json(*c.graph)},
                  {"injections", inj}}};
}

Outcome run_coequalize(const std::string& src, const std::string& tgt,
                       const std::string& f_path, const std::string& g_path) {
  GraphPtr a = load_graph(src), b = load_graph(tgt);
  Hom f = load_checked_hom(f_path, a, b);
  Hom g = load_checked_hom(g_path, a, b);
  CoequalizerResult c = coequalize(f, g);
  return {0,
          Json{{"ok", true},
               {"graph", graph_to_json(*c.graph)},
               {"projection", maps_json(c.projection)}}};
}

Outcome run_pushout(const std::string& apex, const std::string& left,
                    const std::string& right, const std::string& f_path,
                    const std::string& g_path) {
  GraphPtr a = load_graph(apex), b = load_graph(left), c = load_graph(right);
  Hom f = load_checked_hom(f_path, a, b);
  Hom g = load_checked_hom(g_path, a, c);
  PushoutResult p = pushout(f, g);
  return {0,
          Json{{"ok", true},
               {"graph", graph_to_json(*p.graph)},
               {"from_left", maps_json(p.from_left)},
               {"from_right", maps_json(p.from_right)}}};
}

Outcome run_product(const std::vector<std::string>& paths,
                    const Budgets& budgets) {
  std::vector<GraphPtr> parts;
  for (const auto& p : paths) parts.push_back(load_graph(p));
  ProductResult prod = product(parts, budgets.enumeration);
  Json proj = Json::array();
  for (const auto& phi : prod.projections) proj.push_back(maps_json(phi));
  Json witness = Json::object();
  for (const auto& [id, decode] : prod.edge_decode)
    witness[id] = value_to_json(decode.second);
  return {0, Json{{"ok", true},
                  {"graph", graph_to_json(*prod.graph)},
                  {"projections", proj},
                  {"edge_witness", witness}}};
}

Outcome run_equalize(const std::string& src, const std::string& tgt,
                     const std::string& f_path, const std::string& g_path) {
  GraphPtr a = load_graph(src), b = load_graph(tgt);
  Hom f = load_checked_hom(f_path, a, b);
  Hom g = load_checked_hom(g_path, a, b);
  EqualizerResult e = equalize({f, g});
  Json body = handle_to_json(e.subgraph);
  body["ok"] = true;
  body["graph"] = graph_to_json(*e.subgraph.to_graph());
  body["inclusion"] = maps_json(e.inclusion);
  return {0, body};
}

Outcome run_cogenerate(const std::string& gpath, const std::string& subset) {
  GraphPtr g = load_graph(gpath);
  auto [edges, vertices] = load_subset(subset);
  SubgraphHandle h = cogenerated_subgraph(g, edges, vertices);
  Json body = handle_to_json(h);
  body["ok"] = true;
  body["graph"] = graph_to_json(*h.to_graph());
  return {0, body};
}

Outcome run_generate(const std::string& gpath, const std::string& subset) {
  GraphPtr g = load_graph(gpath);
  auto [edges, vertices] = load_subset(subset);
  SubgraphHandle h = generated_subgraph(g, edges, vertices);
  Json body = handle_to_json(h);
  body["ok"] = true;
  body["graph"] = graph_to_json(*h.to_graph());
  return {0, body};
}

Outcome run_lattice(const std::string& gpath, const Budgets& budgets) {
  SubgraphLattice l = subgraph_lattice(load_graph(gpath), budgets.enumeration);
  Json elements = Json::array();
  for (const auto& h : l.elements) elements.push_back(handle_to_json(h));
  return {0, Json{{"ok", true},
                  {"count", l.elements.size()},
                  {"elements", elements},
                  {"top", l.top_index()},
                  {"bottom", l.bottom_index()}}};
}

Outcome run_terminal(const std::string& functor, const Budgets& budgets) {
  FunctorSpec spec = functor_from_json(read_json_file(functor));
  GraphPtr t = terminal_graph(spec, budgets.enumeration);
  return {0, Json{{"ok", true}, {"graph", graph_to_json(*t)}}};
}

Outcome run_relation_check(const std::string& left, const std::string& right,
                           const std::string& rel, const Budgets& budgets) {
  GraphPtr a = load_graph(left), b = load_graph(right);
  RelationPair pair = relation_from_json(read_json_file(rel), a, b);
  RelationVerdict v = is_graph_relation(pair, budgets.enumeration);
  if (!v.relation) {
    Json body{{"ok", false}};
    if (v.failing_edge_pair)
      body["failing_edge_pair"] = pair_json(*v.failing_edge_pair);
    return {1, body};
  }
  return {0, Json{{"ok", true}, {"relation", relation_envelope(*v.relation)}}};
}

Outcome run_largest_relation(const std::string& left, const std::string& right,
                             const Budgets& budgets) {
  GraphRelation r = largest_graph_relation(load_graph(left), load_graph(right),
                                           budgets.enumeration);
  return {0, Json{{"ok", true}, {"relation", relation_envelope(r)}}};
}

Outcome run_related(const std::string& left, const std::string& left_edge,
                    const std::string& right, const std::string& right_edge,
                    const Budgets& budgets) {
  GraphPtr a = load_graph(left), b = load_graph(right);
  if (!a->edges.contains(left_edge))
    throw DomainMismatch("no edge " + left_edge + " in " + left);
  if (!b->edges.contains(right_edge))
    throw DomainMismatch("no edge " + right_edge + " in " + right);
  RelatednessResult r =
      edges_related(a, left_edge, b, right_edge, budgets.enumeration);
  if (!r.related) return {1, Json{{"ok", false}, {"related", false}}};
  return {0,
          Json{{"ok", true},
               {"related", true},
               {"span", graph_to_json(**r.span)},
               {"to_left", maps_json(*r.to_left)},
               {"to_right", maps_json(*r.to_right)}}};
}

Outcome run_kernel_relation(const std::string& src, const std::string& tgt,
                            const std::string& hom, const Budgets& budgets) {
  Hom phi = load_checked_hom(hom, load_graph(src), load_graph(tgt));
  KernelRelationResult k = kernel_relation(phi, budgets.enumeration);
  return {0,
          Json{{"ok", true},
               {"relation", relation_envelope(k.relation)},
               {"diagonal_section", maps_json(k.diagonal_section)}}};
}

Outcome run_cofree(const std::string& functor, const std::string& colors,
                   const Budgets& budgets) {
  FunctorSpec spec = functor_from_json(read_json_file(functor));
  ColorSet x = colorset_from_json(read_json_file(colors));
  CofreeGraph c = cofree_graph(spec, x, budgets.enumeration);
  return {0, Json{{"ok", true},
                  {"graph", graph_to_json(*c.graph)},
                  {"colors", colorset_to_json(c.colors)}}};
}

Outcome run_color_induce(const std::string& gpath, const std::string& colors,
                         const std::string& coloring_path,
                         const Budgets& budgets) {
  GraphPtr g = load_graph(gpath);
  ColorSet x = colorset_from_json(read_json_file(colors));
  Coloring gamma = coloring_from_json(read_json_file(coloring_path));
  validate_coloring(g, x, gamma);
  CofreeGraph c = cofree_graph(g->spec, x, budgets.enumeration);
  Hom phi = induced_hom(g, gamma, c);
  return {0, Json{{"ok", true},
                  {"cofree", graph_to_json(*c.graph)},
                  {"hom", maps_json(phi)}}};
}

Outcome run_unit_embed(const std::string& gpath, const Budgets& budgets) {
  UnitResult u = unit_embedding(load_graph(gpath), budgets.enumeration);
  return {0,
          Json{{"ok", true},
               {"cofree", graph_to_json(*u.cofree.graph)},
               {"colors", colorset_to_json(u.cofree.colors)},
               {"embedding", maps_json(u.embedding)}}};
}

Outcome run_extend(const std::string& gpath, const std::string& subset,
                   const std::string& colors, const std::string& partial,
                   const Budgets& budgets) {
  GraphPtr g = load_graph(gpath);
  SubgraphHandle sub = load_handle(g, subset);
  ColorSet x = colorset_from_json(read_json_file(colors));
  CofreeGraph c = cofree_graph(g->spec, x, budgets.enumeration);
  Hom from_sub = load_checked_hom(partial, sub.to_graph(), c.graph);
  Hom full = extend_to_cofree(sub, from_sub, c);
  return {0, Json{{"ok", true}, {"hom", maps_json(full)}}};
}

Outcome run_regular_injective(const std::string& gpath,
                              const Budgets& budgets) {
  RegularInjectivity r = is_regular_injective(load_graph(gpath), budgets);
  if (!r.ok) return {1, Json{{"ok", false}}};
  return {0, Json{{"ok", true}, {"retraction", maps_json(*r.retraction)}}};
}

Outcome run_transform(const std::string& kind, const std::string& gpath,
                      const Budgets& budgets) {
  GraphPtr g = load_graph(gpath);
  if (kind == "simplify") {
    SimplifyResult s = simplify(g);
    return {0,
            Json{{"ok", true},
                 {"graph", graph_to_json(*s.graph)},
                 {"surjection", maps_json(s.surjection)}}};
  }
  if (kind == "minimize") {
    MinimizeResult m = minimize(g, budgets.enumeration);
    return {0,
            Json{{"ok", true},
                 {"graph", graph_to_json(*m.graph)},
                 {"projection", maps_json(m.projection)}}};
  }
  NaturalTransformation tau;
  if (kind == "deorient") {
    tau = deorientation();
  } else if (kind == "uncolor") {
    tau = uncoloring(g->spec);
  } else {
    tau = underlying_hypergraph();
  }
  return {0, Json{{"ok", true},
                  {"graph", graph_to_json(*apply_transformation(tau, g))}}};
}

Outcome run_lift_orientation(const std::string& src, const std::string& tgt,
                             const std::string& hom,
                             const std::string& omega_path) {
  GraphPtr a = load_graph(src), b = load_graph(tgt);
  Hom phi = load_checked_hom(hom, a, b);
  Orientation omega2 = idmap_from_json(read_json_file(omega_path));
  validate_orientation(b, omega2);
  Orientation omega1 = lift_orientation(phi, omega2);
  return {0,
          Json{{"ok", true},
               {"orientation", idmap_to_json(omega1)},
               {"source_directed",
                graph_to_json(*pair_with_orientation(a, omega1))},
               {"target_directed",
                graph_to_json(*pair_with_orientation(b, omega2))}}};
}

Outcome run_decompose(const std::string& gpath) {
  GraphPtr g = load_graph(gpath);
  ConjunctDecomposition d = conjunct_decomposition(g);
  Json parts = Json::array();
  for (const auto& h : d.parts) parts.push_back(handle_to_json(h));
  return {0, Json{{"ok", true},
                  {"parts", parts},
                  {"isolated_vertices", d.isolated_vertices.elements()},
                  {"part_one_generated", d.part_one_generated},
                  {"one_generated", is_one_generated(g)},
                  {"conjunctly_irreducible", is_conjunctly_irreducible(g)}}};
}

Outcome run_minimize(const std::string& gpath, const Budgets& budgets) {
  MinimizeResult m = minimize(load_graph(gpath), budgets.enumeration);
  return {0,
          Json{{"ok", true},
               {"graph", graph_to_json(*m.graph)},
               {"projection", maps_json(m.projection)}}};
}

Outcome run_simplify(const std::string& gpath) {
  SimplifyResult s = simplify(load_graph(gpath));
  return {0,
          Json{{"ok", true},
               {"graph", graph_to_json(*s.graph)},
               {"surjection", maps_json(s.surjection)}}};
}

Outcome run_pattern_hat(const std::string& functor, const std::string& pattern,
                        const Budgets& budgets) {
  FunctorSpec spec = functor_from_json(read_json_file(functor));
  Pattern p = pattern_from_json(read_json_file(pattern));
  CofreeGraph c = cofree_graph(spec, p.colors, budgets.enumeration);
  SubgraphHandle hat = pattern_hat(c, p);
  Json body = handle_to_json(hat);
  body["ok"] = true;
  body["graph"] = graph_to_json(*hat.to_graph());
  return {0, body};
}

Outcome run_satisfies(const std::string& gpath, const std::string& pattern,
                      const Budgets& budgets) {
  GraphPtr g = load_graph(gpath);
  Pattern p = pattern_from_json(read_json_file(pattern));
  CofreeGraph c = cofree_graph(g->spec, p.colors, budgets.enumeration);
  PatternSatisfaction s = satisfies_pattern(g, c, p, budgets);
  if (!s.ok)
    return {1, Json{{"ok", false},
                    {"failing_coloring", coloring_to_json(*s.failing_coloring)}}};
  return {0, Json{{"ok", true}}};
}

Outcome run_invariant(const std::string& functor, const std::string& pattern,
                      const Budgets& budgets) {
  FunctorSpec spec = functor_from_json(read_json_file(functor));
  Pattern p = pattern_from_json(read_json_file(pattern));
  CofreeGraph c = cofree_graph(spec, p.colors, budgets.enumeration);
  SubgraphVerdict sub = subgraph_check(c.graph, p.edge_subset, p.vertex_subset);
  if (!sub.handle)
    throw PreconditionViolated("pattern does not cut out a subgraph: " +
                               sub.reason);
  InvarianceResult r = is_invariant_subgraph(c, *sub.handle, budgets);
  if (!r.ok)
    return {1, Json{{"ok", false},
                    {"violating_endo", maps_json(*r.violating_endo)}}};
  return {0, Json{{"ok", true}}};
}

Outcome run_pat_of_class(const std::string& colors,
                         const std::vector<std::string>& paths,
                         const Budgets& budgets) {
  ColorSet x = colorset_from_json(read_json_file(colors));
  std::vector<GraphPtr> members;
  for (const auto& p : paths) members.push_back(load_graph(p));
  CofreeGraph c =
      cofree_graph(members.front()->spec, x, budgets.enumeration);
  SubgraphHandle h = pat_of_class(members, c, budgets);
  Json body = handle_to_json(h);
  body["ok"] = true;
  body["pattern"] = pattern_to_json(pattern_of_handle(c, h));
  return {0, body};
}

Outcome run_closure_audit(const std::string& colors, const std::string& mode,
                          const std::vector<std::string>& member_paths,
                          const std::vector<std::string>& probe_paths,
                          const Budgets& budgets) {
  ColorSet x = colorset_from_json(read_json_file(colors));
  std::optional<ClosureMode> m = closure_mode_from_name(mode);
  if (!m) throw PreconditionViolated("unknown mode " + mode);
  std::vector<GraphPtr> members, probes;
  for (const auto& p : member_paths) members.push_back(load_graph(p));
  for (const auto& p : probe_paths) probes.push_back(load_graph(p));
  ClosureAuditReport report = closure_audit(members, probes, x, *m, budgets);
  Json body = closure_report_to_json(report);
  body["ok"] = report.all_agree;
  return {report.all_agree ? 0 : 1, body};
}

Outcome run_hom_search(const std::string& src, const std::string& tgt,
                       bool count_only, const Budgets& budgets) {
  GraphPtr a = load_graph(src), b = load_graph(tgt);
  HomSearchOptions opts;
  opts.budget = budgets.homs;
  if (count_only)
    return {0, Json{{"ok", true}, {"count", count_homs(a, b, opts)}}};
  std::vector<Hom> homs = enumerate_homs(a, b, opts);
  Json out = Json::array();
  for (const auto& phi : homs) out.push_back(maps_json(phi));
  return {0, Json{{"ok", true}, {"count", homs.size()}, {"homs", out}}};
}

bool parse_caps_env(const char* env, Budgets& budgets) {
  std::stringstream ss(env);
  std::string part;
  std::vector<std::uint64_t> caps;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(part, &used);
      if (used != part.size()) return false;
      caps.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  if (caps.size() != 3) return false;
  budgets.enumeration = caps[0];
  budgets.colorings = caps[1];
  budgets.homs = caps[2];
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Budgets budgets;
  bool pretty = false;

  if (const char* env = std::getenv("FGRAPH_CAPS")) {
    if (!parse_caps_env(env, budgets)) {
      std::cout << Json{{"ok", false},
                        {"error",
                         "FGRAPH_CAPS must be \"enum,colorings,homs\""}}
                       .dump()
                << "\n";
      return 2;
    }
  }

  CLI::App app{
      "graphs over pluggable finite-set functors: construction, "
      "homomorphisms, (co)limits, relations, cofree graphs, and closure "
      "audits; all input and output is JSON"};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--cap-enumeration", budgets.enumeration,
                 "value enumeration cap");
  app.add_option("--cap-colorings", budgets.colorings,
                 "coloring enumeration cap");
  app.add_option("--cap-homs", budgets.homs, "hom search cap");

  Outcome out;
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string a1, a2, a3, a4, a5;
  std::vector<std::string> list1, list2;
  std::string kind, mode = "covariety";
  bool count_only = false;

  CLI::App* c = sub("validate", "check that a file holds a well-formed graph");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_validate(a1); });

  c = sub("check-hom", "test the homomorphism condition for a carrier map");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("hom", a3)->required();
  c->callback([&] { out = run_check_hom(a1, a2, a3); });

  c = sub("factorize", "epi-mono factorization through the image");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("hom", a3)->required();
  c->callback([&] { out = run_factorize(a1, a2, a3); });

  c = sub("kernel", "kernel equivalence classes of a homomorphism");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("hom", a3)->required();
  c->callback([&] { out = run_kernel(a1, a2, a3); });

  c = sub("quotient", "quotient by the congruence generated by given pairs");
  c->add_option("graph", a1)->required();
  c->add_option("pairs", a2)->required();
  c->callback([&] { out = run_quotient(a1, a2); });

  c = sub("mediate-epi", "factor a hom through an epi with the same source");
  c->add_option("apex", a1)->required();
  c->add_option("left", a2)->required();
  c->add_option("right", a3)->required();
  c->add_option("epi", a4)->required();
  c->add_option("other", a5)->required();
  c->callback([&] { out = run_mediate_epi(a1, a2, a3, a4, a5); });

  c = sub("mediate-mono", "factor a hom through a mono with the same target");
  c->add_option("apex", a1)->required();
  c->add_option("mid", a2)->required();
  c->add_option("target", a3)->required();
  c->add_option("mono", a4)->required();
  c->add_option("other", a5)->required();
  c->callback([&] { out = run_mediate_mono(a1, a2, a3, a4, a5); });

  c = sub("coproduct", "disjoint union with tagged carriers");
  c->add_option("graphs", list1)->required()->expected(-1);
  c->callback([&] { out = run_coproduct(list1); });

  c = sub("coequalize", "coequalizer of a parallel pair of homs");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("f", a3)->required();
  c->add_option("g", a4)->required();
  c->callback([&] { out = run_coequalize(a1, a2, a3, a4); });

  c = sub("pushout", "pushout of two homs out of a shared apex");
  c->add_option("apex", a1)->required();
  c->add_option("left", a2)->required();
  c->add_option("right", a3)->required();
  c->add_option("f", a4)->required();
  c->add_option("g", a5)->required();
  c->callback([&] { out = run_pushout(a1, a2, a3, a4, a5); });

  c = sub("product", "product graph with witnessed edges");
  c->add_option("graphs", list1)->required()->expected(-1);
  c->callback([&] { out = run_product(list1, budgets); });

  c = sub("equalize", "equalizer subgraph of a parallel pair of homs");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("f", a3)->required();
  c->add_option("g", a4)->required();
  c->callback([&] { out = run_equalize(a1, a2, a3, a4); });

  c = sub("cogenerate", "largest subgraph inside the given carrier bounds");
  c->add_option("graph", a1)->required();
  c->add_option("subset", a2)->required();
  c->callback([&] { out = run_cogenerate(a1, a2); });

  c = sub("generate", "smallest subgraph containing the given seed");
  c->add_option("graph", a1)->required();
  c->add_option("subset", a2)->required();
  c->callback([&] { out = run_generate(a1, a2); });

  c = sub("lattice", "all subgraphs with lattice extremes");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_lattice(a1, budgets); });

  c = sub("terminal", "terminal graph of a functor");
  c->add_option("functor", a1)->required();
  c->callback([&] { out = run_terminal(a1, budgets); });

  c = sub("relation-check", "test that carrier pairs form a graph relation");
  c->add_option("left", a1)->required();
  c->add_option("right", a2)->required();
  c->add_option("relation", a3)->required();
  c->callback([&] { out = run_relation_check(a1, a2, a3, budgets); });

  c = sub("largest-relation", "largest graph relation between two graphs");
  c->add_option("left", a1)->required();
  c->add_option("right", a2)->required();
  c->callback([&] { out = run_largest_relation(a1, a2, budgets); });

  c = sub("related", "whether two edges are related by some graph relation");
  c->add_option("left", a1)->required();
  c->add_option("left_edge", a2)->required();
  c->add_option("right", a3)->required();
  c->add_option("right_edge", a4)->required();
  c->callback([&] { out = run_related(a1, a2, a3, a4, budgets); });

  c = sub("kernel-relation", "kernel of a hom as a graph relation");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("hom", a3)->required();
  c->callback([&] { out = run_kernel_relation(a1, a2, a3, budgets); });

  c = sub("cofree", "cofree graph over a color set");
  c->add_option("functor", a1)->required();
  c->add_option("colors", a2)->required();
  c->callback([&] { out = run_cofree(a1, a2, budgets); });

  c = sub("color-induce", "hom into the cofree graph induced by a coloring");
  c->add_option("graph", a1)->required();
  c->add_option("colors", a2)->required();
  c->add_option("coloring", a3)->required();
  c->callback([&] { out = run_color_induce(a1, a2, a3, budgets); });

  c = sub("unit-embed", "embedding into the cofree graph over own carriers");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_unit_embed(a1, budgets); });

  c = sub("extend", "extend a subgraph's hom into a cofree graph");
  c->add_option("graph", a1)->required();
  c->add_option("subset", a2)->required();
  c->add_option("colors", a3)->required();
  c->add_option("partial", a4)->required();
  c->callback([&] { out = run_extend(a1, a2, a3, a4, budgets); });

  c = sub("regular-injective", "retract-of-cofree test with witness");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_regular_injective(a1, budgets); });

  c = sub("transform", "retype a graph along a built-in transformation");
  c->add_option("--kind", kind, "deorient|uncolor|underlying-hyper|simplify|minimize")
      ->required()
      ->check(CLI::IsMember({"deorient", "uncolor", "underlying-hyper",
                             "simplify", "minimize"}));
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_transform(kind, a1, budgets); });

  c = sub("lift-orientation", "pull a target orientation back along a hom");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_option("hom", a3)->required();
  c->add_option("orientation", a4)->required();
  c->callback([&] { out = run_lift_orientation(a1, a2, a3, a4); });

  c = sub("decompose", "edge-generated conjuncts and isolated vertices");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_decompose(a1); });

  c = sub("minimize", "smallest quotient, the image in the terminal graph");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_minimize(a1, budgets); });

  c = sub("simplify", "merge edges that share a structure value");
  c->add_option("graph", a1)->required();
  c->callback([&] { out = run_simplify(a1); });

  c = sub("pattern-hat", "largest cofree subgraph inside a pattern");
  c->add_option("functor", a1)->required();
  c->add_option("pattern", a2)->required();
  c->callback([&] { out = run_pattern_hat(a1, a2, budgets); });

  c = sub("satisfies", "test a graph against a pattern over its functor");
  c->add_option("graph", a1)->required();
  c->add_option("pattern", a2)->required();
  c->callback([&] { out = run_satisfies(a1, a2, budgets); });

  c = sub("invariant", "endomorphism invariance of a cofree subgraph");
  c->add_option("functor", a1)->required();
  c->add_option("pattern", a2)->required();
  c->callback([&] { out = run_invariant(a1, a2, budgets); });

  c = sub("pat-of-class", "strongest pattern a class of graphs satisfies");
  c->add_option("colors", a1)->required();
  c->add_option("graphs", list1)->required()->expected(-1);
  c->callback([&] { out = run_pat_of_class(a1, list1, budgets); });

  c = sub("closure-audit", "closure membership vs pattern membership");
  c->add_option("colors", a1)->required();
  c->add_option("--mode", mode, "covariety|quasi|complete")
      ->check(CLI::IsMember({"covariety", "quasi", "complete"}));
  c->add_option("--member", list1, "generator class graph (repeatable)");
  c->add_option("--probe", list2, "universe graph (repeatable)")->required();
  c->callback([&] { out = run_closure_audit(a1, mode, list1, list2, budgets); });

  c = sub("hom-search", "enumerate or count homs between two graphs");
  c->add_option("source", a1)->required();
  c->add_option("target", a2)->required();
  c->add_flag("--count", count_only, "emit the count only");
  c->callback([&] { out = run_hom_search(a1, a2, count_only, budgets); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (dynamic_cast<const CLI::CallForHelp*>(&e) ||
        dynamic_cast<const CLI::CallForAllHelp*>(&e))
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const EnumerationCapExceeded& e) {
    std::cout << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cout << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
    return 2;
  }

  std::cout << (pretty ? out.body.dump(2) : out.body.dump()) << "\n";
  return out.code;
}
