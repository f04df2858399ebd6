#include "fgraph/relations.hpp"

#include <algorithm>

#include "fgraph/errors.hpp"
#include "fgraph/pairs.hpp"

namespace fgraph {

void RelationPair::normalize() {
  std::sort(edge_pairs.begin(), edge_pairs.end());
  edge_pairs.erase(std::unique(edge_pairs.begin(), edge_pairs.end()),
                   edge_pairs.end());
  std::sort(vertex_pairs.begin(), vertex_pairs.end());
  vertex_pairs.erase(std::unique(vertex_pairs.begin(), vertex_pairs.end()),
                     vertex_pairs.end());
}

RelationPair RelationPair::diagonal(GraphPtr g) {
  RelationPair r{g, g, {}, {}};
  for (const auto& e : g->edges) r.edge_pairs.emplace_back(e, e);
  for (const auto& v : g->vertices) r.vertex_pairs.emplace_back(v, v);
  return r;
}

RelationPair RelationPair::full(GraphPtr a, GraphPtr b) {
  RelationPair r{a, b, {}, {}};
  for (const auto& e : a->edges)
    for (const auto& f : b->edges) r.edge_pairs.emplace_back(e, f);
  for (const auto& v : a->vertices)
    for (const auto& w : b->vertices) r.vertex_pairs.emplace_back(v, w);
  return r;
}

RelationPair RelationPair::from_kernel(const Hom& phi) {
  RelationPair r{phi.source, phi.source, {}, {}};
  for (const auto& a : phi.source->edges)
    for (const auto& b : phi.source->edges)
      if (phi.edge_map.at(a) == phi.edge_map.at(b))
        r.edge_pairs.emplace_back(a, b);
  for (const auto& a : phi.source->vertices)
    for (const auto& b : phi.source->vertices)
      if (phi.vertex_map.at(a) == phi.vertex_map.at(b))
        r.vertex_pairs.emplace_back(a, b);
  return r;
}

namespace {

void check_bounds(const RelationPair& r) {
  if (!(r.left->spec == r.right->spec))
    throw SpecMismatch("relation between graphs over different functors");
  for (const auto& [a, b] : r.edge_pairs)
    if (!r.left->edges.contains(a) || !r.right->edges.contains(b))
      throw DomainMismatch("relation edge pair (" + a + "," + b +
                           ") escapes the carriers");
  for (const auto& [a, b] : r.vertex_pairs)
    if (!r.left->vertices.contains(a) || !r.right->vertices.contains(b))
      throw DomainMismatch("relation vertex pair (" + a + "," + b +
                           ") escapes the carriers");
}

/// Assemble the relation graph and its projections from chosen witnesses.
GraphRelation finish(RelationPair pair,
                     std::map<std::pair<ElementId, ElementId>, Value> witness,
                     const PairContext& ctx) {
  std::vector<ElementId> edge_ids;
  std::map<ElementId, Value> structure;
  IdMap pe1, pe2;
  for (const auto& [ab, w] : witness) {
    ElementId id = pair_id(ab.first, ab.second);
    edge_ids.push_back(id);
    structure.emplace(id, w);
    pe1[id] = ab.first;
    pe2[id] = ab.second;
  }
  auto graph = make_graph(pair.left->spec, FiniteSet(std::move(edge_ids)),
                          ctx.ids, std::move(structure));
  Hom left{graph, pair.left, pe1, ctx.first};
  Hom right{graph, pair.right, pe2, ctx.second};
  return {std::move(pair), std::move(witness), graph, std::move(left),
          std::move(right)};
}

/// Least witness per realizable projection pair of F(vertex pairs).
std::map<std::pair<Value, Value>, Value> witness_table(const FunctorSpec& spec,
                                                       const PairContext& ctx,
                                                       std::uint64_t cap) {
  std::map<std::pair<Value, Value>, Value> table;
  for (const auto& w : enumerate_values(spec, ctx.ids, cap))
    table.emplace(std::make_pair(map_value(spec, ctx.first, w),
                                 map_value(spec, ctx.second, w)),
                  w);
  return table;
}

}  // namespace

RelationVerdict is_graph_relation(const RelationPair& pair, std::uint64_t cap) {
  RelationPair r = pair;
  r.normalize();
  check_bounds(r);
  PairContext ctx = make_pair_context(r.vertex_pairs);
  auto table = witness_table(r.left->spec, ctx, cap);
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  for (const auto& [a, b] : r.edge_pairs) {
    auto it = table.find({r.left->value_of(a), r.right->value_of(b)});
    if (it == table.end()) return {{}, {{a, b}}};
    witness.emplace(std::make_pair(a, b), it->second);
  }
  return {finish(std::move(r), std::move(witness), ctx), {}};
}

GraphRelation graph_of_hom(const Hom& phi) {
  RelationPair r{phi.source, phi.target, {}, {}};
  IdMap to_pair;
  for (const auto& v : phi.source->vertices) {
    r.vertex_pairs.emplace_back(v, phi.vertex_map.at(v));
    to_pair[v] = pair_id(v, phi.vertex_map.at(v));
  }
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  for (const auto& e : phi.source->edges) {
    r.edge_pairs.emplace_back(e, phi.edge_map.at(e));
    witness.emplace(std::make_pair(e, phi.edge_map.at(e)),
                    map_value(phi.source->spec, to_pair,
                              phi.source->value_of(e)));
  }
  r.normalize();
  PairContext ctx = make_pair_context(r.vertex_pairs);
  return finish(std::move(r), std::move(witness), ctx);
}

GraphRelation relation_from_hom_pair(const Hom& f, const Hom& g) {
  if (!(*f.source == *g.source))
    throw DomainMismatch("relation_from_hom_pair: sources differ");
  RelationPair r{f.target, g.target, {}, {}};
  IdMap to_pair;
  for (const auto& v : f.source->vertices) {
    r.vertex_pairs.emplace_back(f.vertex_map.at(v), g.vertex_map.at(v));
    to_pair[v] = pair_id(f.vertex_map.at(v), g.vertex_map.at(v));
  }
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  for (const auto& e : f.source->edges) {
    auto key = std::make_pair(f.edge_map.at(e), g.edge_map.at(e));
    r.edge_pairs.push_back(key);
    // first edge in id order supplies the witness for its image pair
    witness.emplace(key, map_value(f.source->spec, to_pair,
                                   f.source->value_of(e)));
  }
  r.normalize();
  PairContext ctx = make_pair_context(r.vertex_pairs);
  return finish(std::move(r), std::move(witness), ctx);
}

GraphRelation largest_graph_relation_within(const RelationPair& bounds,
                                            std::uint64_t cap) {
  RelationPair r = bounds;
  r.normalize();
  check_bounds(r);
  // One pass suffices: vertex pairs carry no obligations, so every bound
  // vertex pair stays, and an edge pair stays iff it has a witness over
  // the full bound vertex-pair set.
  PairContext ctx = make_pair_context(r.vertex_pairs);
  auto table = witness_table(r.left->spec, ctx, cap);
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  std::vector<std::pair<ElementId, ElementId>> kept;
  for (const auto& [a, b] : r.edge_pairs) {
    auto it = table.find({r.left->value_of(a), r.right->value_of(b)});
    if (it == table.end()) continue;
    kept.emplace_back(a, b);
    witness.emplace(std::make_pair(a, b), it->second);
  }
  r.edge_pairs = std::move(kept);
  return finish(std::move(r), std::move(witness), ctx);
}

GraphRelation largest_graph_relation(GraphPtr a, GraphPtr b,
                                     std::uint64_t cap) {
  return largest_graph_relation_within(RelationPair::full(std::move(a),
                                                          std::move(b)),
                                       cap);
}

RelatednessResult edges_related(GraphPtr a, const ElementId& left_edge,
                                GraphPtr b, const ElementId& right_edge,
                                std::uint64_t cap) {
  if (!a->edges.contains(left_edge) || !b->edges.contains(right_edge))
    throw DomainMismatch("edges_related: unknown edge");
  RelationPair bounds = RelationPair::full(a, b);
  bounds.edge_pairs = {{left_edge, right_edge}};
  auto verdict = is_graph_relation(bounds, cap);
  if (!verdict.relation) return {false, {}, {}, {}};
  // Cut the witness down to a single-edge span.
  const Value& w = verdict.relation->witness.begin()->second;
  ElementId id = pair_id(left_edge, right_edge);
  FiniteSet vertices = support(a->spec, w);
  auto span = make_graph(a->spec, FiniteSet{id}, vertices, {{id, w}});
  PairContext ctx = make_pair_context(bounds.vertex_pairs);
  IdMap to_a, to_b;
  for (const auto& p : vertices) {
    to_a[p] = ctx.first.at(p);
    to_b[p] = ctx.second.at(p);
  }
  Hom to_left{span, a, {{id, left_edge}}, std::move(to_a)};
  Hom to_right{span, b, {{id, right_edge}}, std::move(to_b)};
  return {true, span, std::move(to_left), std::move(to_right)};
}

KernelRelationResult kernel_relation(const Hom& phi, std::uint64_t cap) {
  if (!phi.source->spec.weakly_preserves_kernel_pullbacks())
    throw UnsupportedFunctor(
        "kernel_relation requires a functor that weakly preserves kernel "
        "pullbacks; " +
        phi.source->spec.describe() + " does not");
  RelationPair r = RelationPair::from_kernel(phi);
  r.normalize();
  PairContext ctx = make_pair_context(r.vertex_pairs);
  auto table = witness_table(phi.source->spec, ctx, cap);
  IdMap diag;
  for (const auto& v : phi.source->vertices) diag[v] = pair_id(v, v);
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  for (const auto& [a, b] : r.edge_pairs) {
    if (a == b) {
      // the structure pushed along the diagonal keeps the section a hom
      witness.emplace(std::make_pair(a, b),
                      map_value(phi.source->spec, diag,
                                phi.source->value_of(a)));
      continue;
    }
    auto it = table.find(
        {phi.source->value_of(a), phi.source->value_of(b)});
    if (it == table.end())
      throw PreconditionViolated(
          "kernel pair (" + a + ", " + b +
          ") has no witness although the functor was flagged as weakly "
          "preserving kernel pullbacks");
    witness.emplace(std::make_pair(a, b), it->second);
  }
  GraphRelation rel = finish(std::move(r), std::move(witness), ctx);
  IdMap sec_e, sec_v;
  for (const auto& e : phi.source->edges) sec_e[e] = pair_id(e, e);
  for (const auto& v : phi.source->vertices) sec_v[v] = pair_id(v, v);
  Hom section{phi.source, rel.graph, std::move(sec_e), std::move(sec_v)};
  auto verdict = validate_hom(section);
  if (!verdict.ok)
    throw PreconditionViolated("kernel relation diagonal section failed: " +
                               verdict.reason);
  return {std::move(rel), std::move(section)};
}

// Defined here because the decision runs through the relation machinery.
bool is_mono(const Hom& phi, const Budgets& budgets) {
  auto rel = largest_graph_relation_within(RelationPair::from_kernel(phi),
                                           budgets.enumeration);
  for (const auto& [a, b] : rel.pair.edge_pairs)
    if (a != b) return false;
  for (const auto& [a, b] : rel.pair.vertex_pairs)
    if (a != b) return false;
  return true;
}

bool is_regular_epi(const Hom& phi, const Budgets& budgets) {
  if (!phi.is_surjective()) return false;
  auto rel = largest_graph_relation_within(RelationPair::from_kernel(phi),
                                           budgets.enumeration);
  EquivPair generated{
      Partition::from_pairs(phi.source->edges, rel.pair.edge_pairs),
      Partition::from_pairs(phi.source->vertices, rel.pair.vertex_pairs)};
  return generated == kernel(phi);
}

}  // namespace fgraph
