#include "fgraph/limits.hpp"

#include <algorithm>
#include <set>

#include "fgraph/errors.hpp"
#include "fgraph/pairs.hpp"

namespace fgraph {

namespace {

ElementId tag(std::size_t i, const ElementId& x) {
  return std::to_string(i) + ":" + x;
}

void require_same_spec(const std::vector<GraphPtr>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (!(parts[i]->spec == parts[0]->spec))
      throw SpecMismatch("diagram mixes graphs over different functors");
}

}  // namespace

CoproductResult coproduct(const std::vector<GraphPtr>& parts) {
  require_same_spec(parts);
  std::vector<ElementId> edges, vertices;
  std::map<ElementId, Value> structure;
  std::vector<Hom> injections;
  FunctorSpec spec = parts.empty() ? FunctorSpec::upair() : parts[0]->spec;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    IdMap rename_v;
    for (const auto& v : parts[i]->vertices) {
      vertices.push_back(tag(i, v));
      rename_v[v] = tag(i, v);
    }
    for (const auto& e : parts[i]->edges) {
      edges.push_back(tag(i, e));
      structure.emplace(tag(i, e),
                        map_value(spec, rename_v, parts[i]->value_of(e)));
    }
  }
  auto sum = make_graph(spec, FiniteSet(std::move(edges)),
                        FiniteSet(std::move(vertices)), std::move(structure));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    IdMap em, vm;
    for (const auto& e : parts[i]->edges) em[e] = tag(i, e);
    for (const auto& v : parts[i]->vertices) vm[v] = tag(i, v);
    injections.push_back({parts[i], sum, std::move(em), std::move(vm)});
  }
  return {sum, std::move(injections)};
}

CoequalizerResult coequalize(const Hom& f, const Hom& g) {
  if (!(*f.source == *g.source) || !(*f.target == *g.target))
    throw DomainMismatch("coequalize: homs are not parallel");
  std::vector<std::pair<ElementId, ElementId>> edge_pairs, vertex_pairs;
  for (const auto& e : f.source->edges)
    edge_pairs.emplace_back(f.edge_map.at(e), g.edge_map.at(e));
  for (const auto& v : f.source->vertices)
    vertex_pairs.emplace_back(f.vertex_map.at(v), g.vertex_map.at(v));
  EquivPair theta{Partition::from_pairs(f.target->edges, edge_pairs),
                  Partition::from_pairs(f.target->vertices, vertex_pairs)};
  auto q = quotient(f.target, theta);
  return {q.graph, q.projection};
}

PushoutResult pushout(const Hom& f, const Hom& g) {
  if (!(*f.source == *g.source))
    throw DomainMismatch("pushout: span feet have different apex");
  auto cop = coproduct({f.target, g.target});
  std::vector<std::pair<ElementId, ElementId>> edge_pairs, vertex_pairs;
  for (const auto& e : f.source->edges)
    edge_pairs.emplace_back(tag(0, f.edge_map.at(e)),
                            tag(1, g.edge_map.at(e)));
  for (const auto& v : f.source->vertices)
    vertex_pairs.emplace_back(tag(0, f.vertex_map.at(v)),
                              tag(1, g.vertex_map.at(v)));
  EquivPair theta{
      Partition::from_pairs(cop.graph->edges, edge_pairs),
      Partition::from_pairs(cop.graph->vertices, vertex_pairs)};
  auto q = quotient(cop.graph, theta);
  return {q.graph, compose(q.projection, cop.injections[0]),
          compose(q.projection, cop.injections[1])};
}

namespace {

void require_same_parent(const std::vector<SubgraphHandle>& handles) {
  if (handles.empty())
    throw PreconditionViolated("need at least one subgraph handle");
  for (std::size_t i = 1; i < handles.size(); ++i)
    if (!(*handles[i].parent == *handles[0].parent))
      throw DomainMismatch("subgraph handles live in different parents");
}

}  // namespace

SubgraphHandle union_of_subgraphs(const std::vector<SubgraphHandle>& handles) {
  require_same_parent(handles);
  FiniteSet edges = handles[0].edges, vertices = handles[0].vertices;
  for (std::size_t i = 1; i < handles.size(); ++i) {
    edges = FiniteSet::union_of(edges, handles[i].edges);
    vertices = FiniteSet::union_of(vertices, handles[i].vertices);
  }
  auto check = subgraph_check(handles[0].parent, edges, vertices);
  if (!check.handle)
    throw PreconditionViolated("union of subgraphs failed the support check");
  return *check.handle;
}

SubgraphHandle intersection_of_subgraphs(
    const std::vector<SubgraphHandle>& handles) {
  require_same_parent(handles);
  FiniteSet edges = handles[0].edges, vertices = handles[0].vertices;
  for (std::size_t i = 1; i < handles.size(); ++i) {
    edges = FiniteSet::intersection_of(edges, handles[i].edges);
    vertices = FiniteSet::intersection_of(vertices, handles[i].vertices);
  }
  auto check = subgraph_check(handles[0].parent, edges, vertices);
  if (!check.handle)
    throw PreconditionViolated(
        "intersection of subgraphs failed the support check");
  return *check.handle;
}

SubgraphHandle cogenerated_subgraph(GraphPtr g, const FiniteSet& edge_bound,
                                    const FiniteSet& vertex_bound) {
  if (!edge_bound.subset_of(g->edges) || !vertex_bound.subset_of(g->vertices))
    throw DomainMismatch("cogeneration bounds escape the graph carriers");
  std::vector<ElementId> edges;
  for (const auto& e : edge_bound)
    if (value_in_subset(g->spec, g->value_of(e), vertex_bound))
      edges.push_back(e);
  return {g, FiniteSet(std::move(edges)), vertex_bound};
}

SubgraphHandle generated_subgraph(GraphPtr g, const FiniteSet& edge_seed,
                                  const FiniteSet& vertex_seed) {
  if (!edge_seed.subset_of(g->edges) || !vertex_seed.subset_of(g->vertices))
    throw DomainMismatch("generation seeds escape the graph carriers");
  FiniteSet vertices = vertex_seed;
  for (const auto& e : edge_seed)
    vertices = FiniteSet::union_of(vertices,
                                   support(g->spec, g->value_of(e)));
  return {g, edge_seed, vertices};
}

SubgraphHandle edge_induced(GraphPtr g, const ElementId& edge) {
  return generated_subgraph(g, FiniteSet{edge}, {});
}

std::size_t SubgraphLattice::index_of(const SubgraphHandle& h) const {
  auto it = std::lower_bound(
      elements.begin(), elements.end(), h,
      [](const SubgraphHandle& a, const SubgraphHandle& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
      });
  if (it == elements.end() || !(*it == h))
    throw DomainMismatch("handle is not an element of the lattice");
  return static_cast<std::size_t>(it - elements.begin());
}

std::size_t SubgraphLattice::join_index(std::size_t a, std::size_t b) const {
  return index_of(union_of_subgraphs({elements[a], elements[b]}));
}

std::size_t SubgraphLattice::meet_index(std::size_t a, std::size_t b) const {
  return index_of(intersection_of_subgraphs({elements[a], elements[b]}));
}

std::size_t SubgraphLattice::top_index() const {
  return index_of({parent, parent->edges, parent->vertices});
}

std::size_t SubgraphLattice::bottom_index() const {
  return index_of({parent, {}, {}});
}

SubgraphLattice subgraph_lattice(GraphPtr g, std::uint64_t cap) {
  const auto& vs = g->vertices.elements();
  if (vs.size() >= 32 || g->edges.size() >= 32)
    throw BudgetExceeded("subgraph lattice carrier too large to enumerate");
  std::vector<FiniteSet> supports;
  for (const auto& e : g->edges)
    supports.push_back(support(g->spec, g->value_of(e)));
  SubgraphLattice lattice{g, {}};
  std::uint64_t produced = 0;
  for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << vs.size());
       ++vmask) {
    std::vector<ElementId> vsub;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vmask & (std::uint64_t{1} << i)) vsub.push_back(vs[i]);
    FiniteSet vset(std::move(vsub));
    std::vector<ElementId> admissible;
    for (std::size_t i = 0; i < supports.size(); ++i)
      if (supports[i].subset_of(vset))
        admissible.push_back(g->edges.elements()[i]);
    for (std::uint64_t emask = 0;
         emask < (std::uint64_t{1} << admissible.size()); ++emask) {
      if (++produced > cap)
        throw BudgetExceeded("subgraph lattice larger than the cap");
      std::vector<ElementId> esub;
      for (std::size_t i = 0; i < admissible.size(); ++i)
        if (emask & (std::uint64_t{1} << i)) esub.push_back(admissible[i]);
      lattice.elements.push_back({g, FiniteSet(std::move(esub)), vset});
    }
  }
  std::sort(lattice.elements.begin(), lattice.elements.end(),
            [](const SubgraphHandle& a, const SubgraphHandle& b) {
              return std::tie(a.vertices, a.edges) <
                     std::tie(b.vertices, b.edges);
            });
  return lattice;
}

GraphPtr terminal_graph(const FunctorSpec& spec, std::uint64_t cap) {
  FiniteSet star{"*"};
  std::vector<ElementId> edges;
  std::map<ElementId, Value> structure;
  for (const auto& w : enumerate_values(spec, star, cap)) {
    ElementId id = barred_id("*", w.to_string());
    edges.push_back(id);
    structure.emplace(id, w);
  }
  return make_graph(spec, FiniteSet(std::move(edges)), star,
                    std::move(structure));
}

Hom terminal_hom(GraphPtr g, std::uint64_t cap) {
  auto term = terminal_graph(g->spec, cap);
  IdMap bang, edge_map;
  for (const auto& v : g->vertices) bang[v] = "*";
  for (const auto& e : g->edges)
    edge_map[e] =
        barred_id("*", map_value(g->spec, bang, g->value_of(e)).to_string());
  return {g, term, std::move(edge_map), std::move(bang)};
}

ProductResult product(const std::vector<GraphPtr>& parts, std::uint64_t cap) {
  require_same_spec(parts);
  FunctorSpec spec = parts.empty() ? FunctorSpec::upair() : parts[0]->spec;

  // vertex tuples plus the projections on them
  std::vector<std::vector<ElementId>> tuples{{}};
  for (const auto& part : parts) {
    std::vector<std::vector<ElementId>> next;
    for (const auto& prefix : tuples)
      for (const auto& v : part->vertices) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    tuples = std::move(next);
  }
  ProductResult out;
  std::vector<ElementId> vertex_ids;
  std::vector<IdMap> vertex_projections(parts.size());
  for (const auto& t : tuples) {
    ElementId id = tuple_id(t);
    vertex_ids.push_back(id);
    out.vertex_decode[id] = t;
    for (std::size_t i = 0; i < parts.size(); ++i)
      vertex_projections[i][id] = t[i];
  }
  FiniteSet prod_vertices(vertex_ids);

  std::vector<std::map<Value, std::vector<ElementId>>> edges_by_value(
      parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& e : parts[i]->edges)
      edges_by_value[i][parts[i]->value_of(e)].push_back(e);

  std::vector<ElementId> edge_ids;
  std::map<ElementId, Value> structure;
  std::vector<IdMap> edge_projections(parts.size());
  for (const auto& w : enumerate_values(spec, prod_vertices, cap)) {
    // factor edges compatible with w
    std::vector<const std::vector<ElementId>*> candidate_lists;
    bool viable = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Value projected = map_value(spec, vertex_projections[i], w);
      auto it = edges_by_value[i].find(projected);
      if (it == edges_by_value[i].end()) {
        viable = false;
        break;
      }
      candidate_lists.push_back(&it->second);
    }
    if (!viable) continue;
    std::vector<std::size_t> pick(parts.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<ElementId> combo;
      combo.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i)
        combo.push_back((*candidate_lists[i])[pick[i]]);
      ElementId id = barred_id(tuple_id(combo), w.to_string());
      edge_ids.push_back(id);
      structure.emplace(id, w);
      out.edge_decode[id] = {combo, w};
      for (std::size_t i = 0; i < parts.size(); ++i)
        edge_projections[i][id] = combo[i];
      done = true;
      for (std::size_t pos = pick.size(); pos-- > 0;) {
        if (++pick[pos] < candidate_lists[pos]->size()) {
          done = false;
          break;
        }
        pick[pos] = 0;
      }
      if (parts.empty()) break;
    }
  }
  out.graph = make_graph(spec, FiniteSet(std::move(edge_ids)), prod_vertices,
                         std::move(structure));
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.projections.push_back({out.graph, parts[i],
                               std::move(edge_projections[i]),
                               std::move(vertex_projections[i])});
  return out;
}

Hom mediate_product_cone(const ProductResult& prod,
                         const std::vector<Hom>& legs) {
  if (legs.size() != prod.projections.size())
    throw DomainMismatch("cone has the wrong number of legs");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!(*legs[i].target == *prod.projections[i].target))
      throw DomainMismatch("cone leg " + std::to_string(i) +
                           " targets the wrong factor");
    if (i && !(*legs[i].source == *legs[0].source))
      throw DomainMismatch("cone legs have different apexes");
  }
  GraphPtr apex = legs.empty() ? nullptr : legs[0].source;
  if (!apex) throw PreconditionViolated("empty cones need an explicit apex");
  IdMap vm, em;
  for (const auto& v : apex->vertices) {
    std::vector<ElementId> comps;
    for (const auto& leg : legs) comps.push_back(leg.vertex_map.at(v));
    ElementId id = tuple_id(comps);
    if (!prod.graph->vertices.contains(id))
      throw PreconditionViolated("cone legs do not define a product vertex");
    vm[v] = id;
  }
  for (const auto& e : apex->edges) {
    std::vector<ElementId> comps;
    for (const auto& leg : legs) comps.push_back(leg.edge_map.at(e));
    Value w = map_value(apex->spec, vm, apex->value_of(e));
    ElementId id = barred_id(tuple_id(comps), w.to_string());
    if (!prod.graph->edges.contains(id))
      throw PreconditionViolated(
          "cone legs do not define a product edge at " + e);
    em[e] = id;
  }
  Hom mediating{apex, prod.graph, std::move(em), std::move(vm)};
  auto verdict = validate_hom(mediating);
  if (!verdict.ok)
    throw PreconditionViolated("mediating map is not a hom (" +
                               verdict.reason + "); legs were not a cone");
  return mediating;
}

EqualizerResult equalize(const std::vector<Hom>& parallel) {
  if (parallel.empty())
    throw PreconditionViolated("equalize needs at least one hom");
  for (std::size_t i = 1; i < parallel.size(); ++i)
    if (!(*parallel[i].source == *parallel[0].source) ||
        !(*parallel[i].target == *parallel[0].target))
      throw DomainMismatch("equalize: homs are not parallel");
  const Hom& f = parallel[0];
  std::vector<ElementId> e_agree, v_agree;
  for (const auto& e : f.source->edges) {
    bool all = true;
    for (const auto& h : parallel)
      all = all && h.edge_map.at(e) == f.edge_map.at(e);
    if (all) e_agree.push_back(e);
  }
  for (const auto& v : f.source->vertices) {
    bool all = true;
    for (const auto& h : parallel)
      all = all && h.vertex_map.at(v) == f.vertex_map.at(v);
    if (all) v_agree.push_back(v);
  }
  auto handle = cogenerated_subgraph(f.source, FiniteSet(std::move(e_agree)),
                                     FiniteSet(std::move(v_agree)));
  return {handle, handle.inclusion()};
}

SubgraphHandle preimage(const Hom& phi, const SubgraphHandle& target_sub,
                        std::uint64_t cap) {
  if (!(*target_sub.parent == *phi.target))
    throw DomainMismatch("preimage: handle is not on the hom target");
  std::vector<std::pair<ElementId, ElementId>> pairs;
  std::vector<ElementId> vertices;
  for (const auto& v : phi.source->vertices)
    if (target_sub.vertices.contains(phi.vertex_map.at(v))) {
      pairs.emplace_back(v, phi.vertex_map.at(v));
      vertices.push_back(v);
    }
  PairContext ctx = make_pair_context(pairs);
  std::set<std::pair<Value, Value>> realizable;
  for (const auto& w : enumerate_values(phi.source->spec, ctx.ids, cap))
    realizable.emplace(map_value(phi.source->spec, ctx.first, w),
                       map_value(phi.source->spec, ctx.second, w));
  std::vector<ElementId> edges;
  for (const auto& e : phi.source->edges) {
    const ElementId& te = phi.edge_map.at(e);
    if (!target_sub.edges.contains(te)) continue;
    if (realizable.count(
            {phi.source->value_of(e), phi.target->value_of(te)}))
      edges.push_back(e);
  }
  return {phi.source, FiniteSet(std::move(edges)),
          FiniteSet(std::move(vertices))};
}

}  // namespace fgraph
