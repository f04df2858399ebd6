#include "fgraph/covariety.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>

#include "fgraph/hom_search.hpp"

namespace fgraph {

namespace {

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  while (exp--) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

/// Visits all colorings of g by X in lexicographic order: vertex slots are
/// more significant than edge slots, later slots cycle fastest. Returns
/// false when the visitor stopped the walk.
bool for_each_coloring(const GraphPtr& g, const ColorSet& X,
                       const Budgets& budgets,
                       const std::function<bool(const Coloring&)>& visit) {
  const auto& vs = g->vertices.elements();
  const auto& es = g->edges.elements();
  std::uint64_t vertex_part = sat_pow(X.vertex_colors.size(), vs.size());
  std::uint64_t edge_part = sat_pow(X.edge_colors.size(), es.size());
  if (vertex_part == 0 || edge_part == 0) return true;
  std::uint64_t total = vertex_part > UINT64_MAX / edge_part
                            ? UINT64_MAX
                            : vertex_part * edge_part;
  if (total > budgets.colorings)
    throw BudgetExceeded("coloring enumeration budget exhausted");

  std::vector<std::size_t> digits(vs.size() + es.size(), 0);
  const auto& vcolors = X.vertex_colors.elements();
  const auto& ecolors = X.edge_colors.elements();
  while (true) {
    Coloring c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      c.vertex_map[vs[i]] = vcolors[digits[i]];
    for (std::size_t i = 0; i < es.size(); ++i)
      c.edge_map[es[i]] = ecolors[digits[vs.size() + i]];
    if (!visit(c)) return false;

    std::size_t pos = digits.size();
    while (pos > 0) {
      std::size_t radix = pos > vs.size() ? ecolors.size() : vcolors.size();
      if (digits[pos - 1] + 1 < radix) break;
      digits[--pos] = 0;
    }
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return true;
}

bool handle_within(const FiniteSet& edges, const FiniteSet& vertices,
                   const SubgraphHandle& outer) {
  return edges.subset_of(outer.edges) && vertices.subset_of(outer.vertices);
}

/// The induced image of one coloring as id sets on the cofree graph.
void coloring_image(const GraphPtr& g, const CofreeGraph& cofree,
                    const Coloring& c, std::vector<ElementId>& edge_ids,
                    std::vector<ElementId>& vertex_ids) {
  for (const auto& v : g->vertices) vertex_ids.push_back(c.vertex_map.at(v));
  for (const auto& e : g->edges) {
    Value w = map_value(g->spec, c.vertex_map, g->value_of(e));
    edge_ids.push_back(cofree.edge_id(c.edge_map.at(e), w));
  }
}

}  // namespace

SubgraphHandle pattern_hat(const CofreeGraph& cofree, const Pattern& p) {
  if (!(p.colors == cofree.colors))
    throw DomainMismatch("pattern and cofree graph use different color sets");
  for (const auto& id : p.edge_subset)
    if (!cofree.graph->edges.contains(id))
      throw DomainMismatch("pattern names a missing cofree edge: " + id);
  for (const auto& c : p.vertex_subset)
    if (!cofree.graph->vertices.contains(c))
      throw DomainMismatch("pattern names a missing vertex color: " + c);
  return cogenerated_subgraph(cofree.graph, p.edge_subset, p.vertex_subset);
}

PatternSatisfaction satisfies_pattern(const GraphPtr& g,
                                      const CofreeGraph& cofree,
                                      const Pattern& p,
                                      const Budgets& budgets) {
  if (g->spec != cofree.graph->spec)
    throw SpecMismatch("graph and cofree graph use different functors");
  SubgraphHandle hat = pattern_hat(cofree, p);

  PatternSatisfaction out;
  out.ok = true;
  for_each_coloring(g, cofree.colors, budgets, [&](const Coloring& c) {
    std::vector<ElementId> edge_ids, vertex_ids;
    coloring_image(g, cofree, c, edge_ids, vertex_ids);
    for (const auto& v : vertex_ids)
      if (!hat.vertices.contains(v)) {
        out = {false, c};
        return false;
      }
    for (const auto& e : edge_ids)
      if (!hat.edges.contains(e)) {
        out = {false, c};
        return false;
      }
    return true;
  });
  return out;
}

InvarianceResult is_invariant_subgraph(const CofreeGraph& cofree,
                                       const SubgraphHandle& handle,
                                       const Budgets& budgets) {
  if (!(*handle.parent == *cofree.graph))
    throw DomainMismatch("handle does not live on the cofree graph");

  InvarianceResult out;
  out.ok = true;
  HomSearchOptions opts;
  opts.budget = budgets.homs;
  for_each_hom(cofree.graph, cofree.graph, opts, [&](const Hom& endo) {
    for (const auto& v : handle.vertices)
      if (!handle.vertices.contains(endo.vertex_map.at(v))) {
        out = {false, endo};
        return false;
      }
    for (const auto& e : handle.edges)
      if (!handle.edges.contains(endo.edge_map.at(e))) {
        out = {false, endo};
        return false;
      }
    return true;
  });
  return out;
}

SubgraphHandle pat_of_class(const std::vector<GraphPtr>& members,
                            const CofreeGraph& cofree, const Budgets& budgets) {
  std::vector<ElementId> edge_ids, vertex_ids;
  for (const auto& m : members) {
    if (m->spec != cofree.graph->spec)
      throw SpecMismatch("class member and cofree graph differ in functor");
    for_each_coloring(m, cofree.colors, budgets, [&](const Coloring& c) {
      coloring_image(m, cofree, c, edge_ids, vertex_ids);
      return true;
    });
  }
  SubgraphVerdict v = subgraph_check(cofree.graph, FiniteSet(edge_ids),
                                     FiniteSet(vertex_ids));
  assert(v.handle.has_value());
  return *v.handle;
}

Pattern pattern_of_handle(const CofreeGraph& cofree,
                          const SubgraphHandle& handle) {
  if (!(*handle.parent == *cofree.graph))
    throw DomainMismatch("handle does not live on the cofree graph");
  return Pattern{cofree.colors, handle.edges, handle.vertices};
}

ConditionalSatisfaction satisfies_conditional(const GraphPtr& g,
                                              const ConditionalPattern& r,
                                              const Budgets& budgets) {
  if (!r.edge_subset.subset_of(r.host->edges) ||
      !r.vertex_subset.subset_of(r.host->vertices))
    throw DomainMismatch("conditional pattern names missing host elements");
  SubgraphHandle hat =
      cogenerated_subgraph(r.host, r.edge_subset, r.vertex_subset);

  ConditionalSatisfaction out;
  out.ok = true;
  HomSearchOptions opts;
  opts.budget = budgets.homs;
  for_each_hom(g, r.host, opts, [&](const Hom& phi) {
    for (const auto& [v, image] : phi.vertex_map)
      if (!hat.vertices.contains(image)) {
        out = {false, phi};
        return false;
      }
    for (const auto& [e, image] : phi.edge_map)
      if (!hat.edges.contains(image)) {
        out = {false, phi};
        return false;
      }
    return true;
  });
  return out;
}

ImplicationSatisfaction satisfies_implication(const GraphPtr& g,
                                              const CofreeGraph& cofree,
                                              const Implication& imp,
                                              const Budgets& budgets) {
  ImplicationSatisfaction out;
  out.premise = satisfies_pattern(g, cofree, imp.premise, budgets);
  out.conclusion = satisfies_pattern(g, cofree, imp.conclusion, budgets);
  out.ok = !out.premise.ok || out.conclusion.ok;
  return out;
}

PatternSatisfaction satisfies_implication_pointwise(const GraphPtr& g,
                                                    const CofreeGraph& cofree,
                                                    const Implication& imp,
                                                    const Budgets& budgets) {
  SubgraphHandle hat_p = pattern_hat(cofree, imp.premise);
  SubgraphHandle hat_q = pattern_hat(cofree, imp.conclusion);

  PatternSatisfaction out;
  out.ok = true;
  for_each_coloring(g, cofree.colors, budgets, [&](const Coloring& c) {
    std::vector<ElementId> edge_ids, vertex_ids;
    coloring_image(g, cofree, c, edge_ids, vertex_ids);
    FiniteSet es(edge_ids), vs(vertex_ids);
    if (handle_within(es, vs, hat_p) && !handle_within(es, vs, hat_q)) {
      out = {false, c};
      return false;
    }
    return true;
  });
  return out;
}

ConditionalPattern conditional_from_implication(const CofreeGraph& cofree,
                                                const Implication& imp) {
  if (!(imp.premise.colors == imp.conclusion.colors))
    throw DomainMismatch("implication mixes color sets");
  SubgraphHandle hat = pattern_hat(cofree, imp.premise);
  ConditionalPattern out;
  out.host = hat.to_graph();
  out.edge_subset =
      FiniteSet::intersection_of(hat.edges, imp.conclusion.edge_subset);
  out.vertex_subset =
      FiniteSet::intersection_of(hat.vertices, imp.conclusion.vertex_subset);
  return out;
}

HostImplication implication_from_conditional(const ConditionalPattern& r,
                                             std::uint64_t cap) {
  HostImplication out;
  ColorSet colors{r.host->edges, r.host->vertices};
  out.cofree = cofree_graph(r.host->spec, colors, cap);

  std::vector<ElementId> premise_edges, conclusion_edges;
  for (const auto& e : r.host->edges)
    premise_edges.push_back(out.cofree.edge_id(e, r.host->value_of(e)));
  for (const auto& e : r.edge_subset)
    conclusion_edges.push_back(out.cofree.edge_id(e, r.host->value_of(e)));

  out.implication.premise =
      Pattern{colors, FiniteSet(premise_edges), r.host->vertices};
  out.implication.conclusion =
      Pattern{colors, FiniteSet(conclusion_edges), r.vertex_subset};
  return out;
}

std::vector<ElementId> boundedness_violations(const GraphPtr& g,
                                              std::size_t vertex_bound) {
  std::vector<ElementId> out;
  for (const auto& e : g->edges)
    if (support(g->spec, g->value_of(e)).size() > vertex_bound)
      out.push_back(e);
  return out;
}

namespace {

/// Whether the union of the images of all homs from the members covers h
/// entirely (then a jointly surjective family exists).
bool jointly_covered(const GraphPtr& h, const std::vector<GraphPtr>& members,
                     const Budgets& budgets) {
  std::set<ElementId> edges, vertices;
  auto full = [&] {
    return edges.size() == h->edges.size() &&
           vertices.size() == h->vertices.size();
  };
  for (const auto& m : members) {
    if (full()) break;
    HomSearchOptions opts;
    opts.budget = budgets.homs;
    for_each_hom(m, h, opts, [&](const Hom& phi) {
      for (const auto& [v, image] : phi.vertex_map) vertices.insert(image);
      for (const auto& [e, image] : phi.edge_map) edges.insert(image);
      return !full();
    });
  }
  return full();
}

ElementId fresh_id(const FiniteSet& used, std::string base) {
  while (used.contains(base)) base += "_";
  return base;
}

/// Bounded search for an extension h of g (g a subgraph of h) that is a
/// jointly surjective image of members: the closure chain coproduct ->
/// image -> subgraph. The extension is bounded by the largest member's
/// carrier sizes, which the one-layer normal form of the closure needs at
/// desk scale.
bool in_sim_hom_sigma(const GraphPtr& g, const std::vector<GraphPtr>& members,
                      const Budgets& budgets) {
  std::size_t extra_vertices = 0, extra_edges = 0;
  for (const auto& m : members) {
    extra_vertices = std::max(extra_vertices, m->vertices.size());
    extra_edges = std::max(extra_edges, m->edges.size());
  }

  std::set<Value> existing;
  for (const auto& e : g->edges) existing.insert(g->value_of(e));

  std::uint64_t attempts = 0;
  FiniteSet grown_vertices = g->vertices;
  for (std::size_t dv = 0; dv <= extra_vertices; ++dv) {
    if (dv > 0)
      grown_vertices.insert(
          fresh_id(grown_vertices, "aug_v" + std::to_string(dv)));

    std::vector<Value> candidates;
    for (auto& w :
         enumerate_values(g->spec, grown_vertices, budgets.enumeration))
      if (!existing.count(w)) candidates.push_back(std::move(w));

    for (std::size_t de = 0; de <= std::min(extra_edges, candidates.size());
         ++de) {
      std::vector<std::size_t> pick(de);
      for (std::size_t i = 0; i < de; ++i) pick[i] = i;
      while (true) {
        if (++attempts > budgets.enumeration)
          throw BudgetExceeded("extension search budget exhausted");

        FiniteSet edges = g->edges;
        std::map<ElementId, Value> structure = g->structure;
        for (std::size_t i = 0; i < de; ++i) {
          ElementId id = fresh_id(edges, "aug_e" + std::to_string(i + 1));
          edges.insert(id);
          structure.emplace(std::move(id), candidates[pick[i]]);
        }
        GraphPtr h =
            make_graph(g->spec, std::move(edges), grown_vertices,
                       std::move(structure));
        if (jointly_covered(h, members, budgets)) return true;

        // next combination of de candidate indices
        std::size_t i = de;
        while (i > 0 && pick[i - 1] == candidates.size() - (de - i) - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < de; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (de == 0 && candidates.empty()) break;
    }
  }
  return false;
}

/// The image of the coproduct of the members under the unique hom into the
/// terminal graph: an explicit coproduct-then-image closure witness.
SubgraphHandle terminal_class_image(const std::vector<GraphPtr>& members,
                                    const FunctorSpec& spec,
                                    std::uint64_t cap) {
  GraphPtr sum;
  if (members.empty()) {
    sum = make_graph(spec, {}, {}, {});
  } else {
    sum = coproduct(members).graph;
  }
  return image(terminal_hom(sum, cap)).image;
}

}  // namespace

ClosureAuditReport closure_audit(const std::vector<GraphPtr>& members,
                                 const std::vector<GraphPtr>& universe,
                                 const ColorSet& colors, ClosureMode mode,
                                 const Budgets& budgets) {
  ClosureAuditReport report;
  report.mode = mode;
  if (universe.empty()) return report;

  const FunctorSpec spec =
      members.empty() ? universe.front()->spec : members.front()->spec;
  for (const auto& m : members)
    if (m->spec != spec) throw SpecMismatch("class members mix functors");
  for (const auto& p : universe)
    if (p->spec != spec) throw SpecMismatch("probes mix functors");

  if (mode == ClosureMode::Complete) {
    SubgraphHandle target = terminal_class_image(members, spec,
                                                 budgets.enumeration);
    GraphPtr target_graph = target.to_graph();
    CofreeGraph point = cofree_graph(spec, ColorSet{{"*"}, {"*"}},
                                     budgets.enumeration);
    Pattern pat = pattern_of_handle(point, pat_of_class(members, point,
                                                        budgets));
    for (const auto& probe : universe) {
      ProbeReport r;
      HomSearchOptions opts;
      opts.budget = budgets.homs;
      r.closure_member = find_hom(probe, target_graph, opts).has_value();
      r.equational_member = satisfies_pattern(probe, point, pat, budgets).ok;
      r.agree = r.closure_member == r.equational_member;
      report.all_agree = report.all_agree && r.agree;
      report.probes.push_back(std::move(r));
    }
    return report;
  }

  CofreeGraph cofree = cofree_graph(spec, colors, budgets.enumeration);

  if (mode == ClosureMode::Covariety) {
    Pattern pat = pattern_of_handle(cofree, pat_of_class(members, cofree,
                                                         budgets));
    for (const auto& probe : universe) {
      ProbeReport r;
      r.closure_member = in_sim_hom_sigma(probe, members, budgets);
      r.equational_member = satisfies_pattern(probe, cofree, pat, budgets).ok;
      r.agree = r.closure_member == r.equational_member;
      r.boundedness_warnings =
          boundedness_violations(probe, colors.vertex_colors.size());
      report.all_agree = report.all_agree && r.agree;
      report.probes.push_back(std::move(r));
    }
    return report;
  }

  // Quasi mode. A graph satisfies every implication valid in the class iff
  // for each pattern P it satisfies, it also satisfies the union of the
  // images of the members that satisfy P (the strongest valid conclusion).
  std::vector<SubgraphHandle> member_pats;
  for (const auto& m : members)
    member_pats.push_back(pat_of_class({m}, cofree, budgets));

  const auto& all_edges = cofree.graph->edges.elements();
  const auto& all_colors = cofree.colors.vertex_colors.elements();
  std::size_t bits = all_edges.size() + all_colors.size();
  if (bits >= 64 || (std::uint64_t{1} << bits) > budgets.enumeration)
    throw BudgetExceeded("pattern enumeration budget exhausted");

  for (const auto& probe : universe) {
    ProbeReport r;
    r.closure_member = jointly_covered(probe, members, budgets);
    SubgraphHandle probe_pat = pat_of_class({probe}, cofree, budgets);

    r.equational_member = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::vector<ElementId> pe, pv;
      for (std::size_t i = 0; i < all_edges.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) pe.push_back(all_edges[i]);
      for (std::size_t i = 0; i < all_colors.size(); ++i)
        if (mask & (std::uint64_t{1} << (all_edges.size() + i)))
          pv.push_back(all_colors[i]);
      SubgraphHandle hat =
          cogenerated_subgraph(cofree.graph, FiniteSet(pe), FiniteSet(pv));
      if (!handle_within(probe_pat.edges, probe_pat.vertices, hat)) continue;

      FiniteSet strongest_edges, strongest_vertices;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (!handle_within(member_pats[i].edges, member_pats[i].vertices,
                           hat))
          continue;
        strongest_edges =
            FiniteSet::union_of(strongest_edges, member_pats[i].edges);
        strongest_vertices =
            FiniteSet::union_of(strongest_vertices, member_pats[i].vertices);
      }
      if (!probe_pat.edges.subset_of(strongest_edges) ||
          !probe_pat.vertices.subset_of(strongest_vertices)) {
        r.equational_member = false;
        break;
      }
    }

    r.agree = r.closure_member == r.equational_member;
    report.all_agree = report.all_agree && r.agree;
    report.probes.push_back(std::move(r));
  }
  return report;
}

}  // namespace fgraph
