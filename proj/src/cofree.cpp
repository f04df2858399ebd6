#include "fgraph/cofree.hpp"

#include <cassert>

#include "fgraph/hom_search.hpp"
#include "fgraph/pairs.hpp"

namespace fgraph {

ElementId CofreeGraph::edge_id(const ElementId& edge_color,
                               const Value& value) const {
  return barred_id(edge_color, value.to_string());
}

CofreeGraph cofree_graph(const FunctorSpec& spec, const ColorSet& colors,
                         std::uint64_t cap) {
  std::vector<Value> values = enumerate_values(spec, colors.vertex_colors, cap);
  if (values.size() > cap / std::max<std::size_t>(colors.edge_colors.size(), 1))
    throw EnumerationCapExceeded(
        static_cast<std::uint64_t>(values.size()) * colors.edge_colors.size(),
        true, cap);

  CofreeGraph out;
  out.colors = colors;
  std::vector<ElementId> edge_ids;
  std::map<ElementId, Value> structure;
  for (const auto& c : colors.edge_colors) {
    for (const auto& w : values) {
      ElementId id = barred_id(c, w.to_string());
      edge_ids.push_back(id);
      structure.emplace(id, w);
      out.edge_decode.emplace(std::move(id), std::make_pair(c, w));
    }
  }
  out.graph = make_graph(spec, FiniteSet(std::move(edge_ids)),
                         colors.vertex_colors, std::move(structure));
  return out;
}

Coloring counit_coloring(const CofreeGraph& cofree) {
  Coloring out;
  for (const auto& [id, cw] : cofree.edge_decode) out.edge_map[id] = cw.first;
  out.vertex_map = identity_map(cofree.graph->vertices);
  return out;
}

void validate_coloring(const GraphPtr& g, const ColorSet& colors,
                       const Coloring& coloring) {
  if (!is_total_map(coloring.edge_map, g->edges) ||
      !is_total_map(coloring.vertex_map, g->vertices))
    throw DomainMismatch("coloring is not total on the graph's carriers");
  if (!maps_into(coloring.edge_map, colors.edge_colors) ||
      !maps_into(coloring.vertex_map, colors.vertex_colors))
    throw DomainMismatch("coloring uses a color outside the alphabet");
}

Hom induced_hom(const GraphPtr& g, const Coloring& coloring,
                const CofreeGraph& cofree) {
  if (g->spec != cofree.graph->spec)
    throw SpecMismatch("graph and cofree graph use different functors");
  validate_coloring(g, cofree.colors, coloring);

  Hom phi;
  phi.source = g;
  phi.target = cofree.graph;
  phi.vertex_map = coloring.vertex_map;
  for (const auto& e : g->edges) {
    Value w = map_value(g->spec, coloring.vertex_map, g->value_of(e));
    phi.edge_map[e] = cofree.edge_id(coloring.edge_map.at(e), w);
  }
  assert(validate_hom(phi).ok);
  return phi;
}

Coloring extract_coloring(const Hom& into_cofree, const CofreeGraph& cofree) {
  if (!(into_cofree.target == cofree.graph ||
        *into_cofree.target == *cofree.graph))
    throw DomainMismatch("hom does not land in the given cofree graph");
  Coloring out;
  out.vertex_map = into_cofree.vertex_map;
  for (const auto& [e, image] : into_cofree.edge_map)
    out.edge_map[e] = cofree.edge_decode.at(image).first;
  return out;
}

Hom cofree_on_colors(const CofreeGraph& from, const CofreeGraph& to,
                     const IdMap& edge_color_map,
                     const IdMap& vertex_color_map) {
  if (from.graph->spec != to.graph->spec)
    throw SpecMismatch("cofree graphs use different functors");
  if (!is_total_map(edge_color_map, from.colors.edge_colors) ||
      !maps_into(edge_color_map, to.colors.edge_colors) ||
      !is_total_map(vertex_color_map, from.colors.vertex_colors) ||
      !maps_into(vertex_color_map, to.colors.vertex_colors))
    throw DomainMismatch("color maps do not connect the two alphabets");

  Hom phi;
  phi.source = from.graph;
  phi.target = to.graph;
  phi.vertex_map = vertex_color_map;
  for (const auto& [id, cw] : from.edge_decode) {
    Value w = map_value(from.graph->spec, vertex_color_map, cw.second);
    phi.edge_map[id] = to.edge_id(edge_color_map.at(cw.first), w);
  }
  assert(validate_hom(phi).ok);
  return phi;
}

UnitResult unit_embedding(const GraphPtr& g, std::uint64_t cap) {
  UnitResult out;
  out.cofree = cofree_graph(g->spec, ColorSet{g->edges, g->vertices}, cap);
  Coloring identity;
  identity.edge_map = identity_map(g->edges);
  identity.vertex_map = identity_map(g->vertices);
  out.embedding = induced_hom(g, identity, out.cofree);
  return out;
}

Hom extend_to_cofree(const SubgraphHandle& sub, const Hom& from_sub,
                     const CofreeGraph& cofree) {
  GraphPtr part = sub.to_graph();
  if (!(*from_sub.source == *part))
    throw DomainMismatch("hom source is not the designated subgraph");

  Coloring gamma = extract_coloring(from_sub, cofree);
  for (const auto& e : sub.parent->edges) {
    if (sub.edges.contains(e)) continue;
    if (cofree.colors.edge_colors.empty())
      throw EmptyColorSet("no edge color available to extend with");
    gamma.edge_map[e] = *cofree.colors.edge_colors.begin();
  }
  for (const auto& v : sub.parent->vertices) {
    if (sub.vertices.contains(v)) continue;
    if (cofree.colors.vertex_colors.empty())
      throw EmptyColorSet("no vertex color available to extend with");
    gamma.vertex_map[v] = *cofree.colors.vertex_colors.begin();
  }

  Hom psi = induced_hom(sub.parent, gamma, cofree);
#ifndef NDEBUG
  for (const auto& e : sub.edges)
    assert(psi.edge_map.at(e) == from_sub.edge_map.at(e));
#endif
  return psi;
}

RegularInjectivity is_regular_injective(const GraphPtr& g,
                                        const Budgets& budgets) {
  UnitResult unit = unit_embedding(g, budgets.enumeration);
  HomSearchOptions opts;
  opts.budget = budgets.homs;
  for (const auto& v : g->vertices) opts.vertex_pins[v] = v;
  for (const auto& [e, image] : unit.embedding.edge_map)
    opts.edge_pins[image] = e;

  RegularInjectivity out;
  if (auto r = find_hom(unit.cofree.graph, g, opts)) {
    out.ok = true;
    out.retraction = std::move(*r);
  }
  return out;
}

CofreeDecomposition cofree_decomposition(const FunctorSpec& spec,
                                         const ColorSet& colors,
                                         std::uint64_t cap) {
  const FiniteSet point({"*"});
  CofreeDecomposition out;
  out.whole = cofree_graph(spec, colors, cap);
  out.edge_part = cofree_graph(spec, ColorSet{colors.edge_colors, point}, cap);
  out.vertex_part =
      cofree_graph(spec, ColorSet{point, colors.vertex_colors}, cap);

  IdMap collapse_vertices, collapse_edges;
  for (const auto& c : colors.vertex_colors) collapse_vertices[c] = "*";
  for (const auto& c : colors.edge_colors) collapse_edges[c] = "*";
  Hom to_edge_part =
      cofree_on_colors(out.whole, out.edge_part,
                       identity_map(colors.edge_colors), collapse_vertices);
  Hom to_vertex_part =
      cofree_on_colors(out.whole, out.vertex_part, collapse_edges,
                       identity_map(colors.vertex_colors));

  out.product = product({out.edge_part.graph, out.vertex_part.graph}, cap);
  out.comparison =
      mediate_product_cone(out.product, {to_edge_part, to_vertex_part});
  out.is_isomorphism = is_iso(out.comparison).ok;
  return out;
}

}  // namespace fgraph
