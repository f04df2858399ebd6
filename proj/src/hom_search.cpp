#include "fgraph/hom_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fgraph/errors.hpp"

namespace fgraph {

namespace {

struct Searcher {
  GraphPtr source, target;
  const HomSearchOptions& opts;
  const std::function<bool(const Hom&)>& visit;

  std::vector<ElementId> src_vertices, src_edges;
  // edges become checkable once this many vertices are assigned
  std::vector<std::vector<std::size_t>> edges_ready_at;
  std::map<Value, std::vector<ElementId>> target_edges_by_value;

  IdMap vertex_assignment;
  std::vector<std::vector<ElementId>> edge_candidates;
  std::set<ElementId> used_vertices, used_edges;

  std::uint64_t steps = 0;
  bool stopped = false;

  explicit Searcher(GraphPtr src, GraphPtr tgt, const HomSearchOptions& o,
                    const std::function<bool(const Hom&)>& v)
      : source(std::move(src)), target(std::move(tgt)), opts(o), visit(v) {
    src_vertices.assign(source->vertices.begin(), source->vertices.end());
    src_edges.assign(source->edges.begin(), source->edges.end());
    edges_ready_at.resize(src_vertices.size() + 1);
    for (std::size_t i = 0; i < src_edges.size(); ++i) {
      FiniteSet supp = support(source->spec, source->value_of(src_edges[i]));
      std::size_t ready = 0;
      for (const auto& v : supp)
        ready = std::max(ready, source->vertices.index_of(v) + 1);
      edges_ready_at[ready].push_back(i);
    }
    for (const auto& e : target->edges)
      target_edges_by_value[target->value_of(e)].push_back(e);
    edge_candidates.resize(src_edges.size());
  }

  void spend() {
    if (++steps > opts.budget)
      throw BudgetExceeded("hom search budget of " +
                           std::to_string(opts.budget) + " exhausted");
  }

  bool edge_allowed(const ElementId& src_edge, const ElementId& tgt_edge) {
    auto pin = opts.edge_pins.find(src_edge);
    return pin == opts.edge_pins.end() || pin->second == tgt_edge;
  }

  // Fill candidate lists for edges whose support just became fully mapped.
  bool compute_ready(std::size_t level) {
    for (std::size_t idx : edges_ready_at[level]) {
      Value mapped = map_value(source->spec, vertex_assignment,
                               source->value_of(src_edges[idx]));
      auto it = target_edges_by_value.find(mapped);
      std::vector<ElementId> cands;
      if (it != target_edges_by_value.end())
        for (const auto& e : it->second)
          if (edge_allowed(src_edges[idx], e)) cands.push_back(e);
      if (cands.empty()) return false;
      edge_candidates[idx] = std::move(cands);
    }
    return true;
  }

  void assign_edges(std::size_t edge_idx, IdMap& edge_map) {
    if (stopped) return;
    if (edge_idx == src_edges.size()) {
      Hom hom{source, target, edge_map, vertex_assignment};
      if (!visit(hom)) stopped = true;
      return;
    }
    for (const auto& cand : edge_candidates[edge_idx]) {
      if (stopped) return;
      spend();
      if (opts.edge_injective && used_edges.count(cand)) continue;
      edge_map[src_edges[edge_idx]] = cand;
      if (opts.edge_injective) used_edges.insert(cand);
      assign_edges(edge_idx + 1, edge_map);
      if (opts.edge_injective) used_edges.erase(cand);
      edge_map.erase(src_edges[edge_idx]);
    }
  }

  void assign_vertices(std::size_t level) {
    if (stopped) return;
    if (!compute_ready(level)) return;
    if (level == src_vertices.size()) {
      IdMap edge_map;
      assign_edges(0, edge_map);
      return;
    }
    const ElementId& v = src_vertices[level];
    auto pin = opts.vertex_pins.find(v);
    for (const auto& w : target->vertices) {
      if (stopped) return;
      if (pin != opts.vertex_pins.end() && pin->second != w) continue;
      spend();
      if (opts.vertex_injective && used_vertices.count(w)) continue;
      vertex_assignment[v] = w;
      if (opts.vertex_injective) used_vertices.insert(w);
      assign_vertices(level + 1);
      if (opts.vertex_injective) used_vertices.erase(w);
      vertex_assignment.erase(v);
    }
  }
};

}  // namespace

void for_each_hom(GraphPtr source, GraphPtr target,
                  const HomSearchOptions& opts,
                  const std::function<bool(const Hom&)>& visit) {
  if (!(source->spec == target->spec))
    throw SpecMismatch("hom search between graphs over different functors");
  Searcher s(std::move(source), std::move(target), opts, visit);
  s.assign_vertices(0);
}

std::vector<Hom> enumerate_homs(GraphPtr source, GraphPtr target,
                                const HomSearchOptions& opts) {
  std::vector<Hom> out;
  for_each_hom(source, target, opts, [&](const Hom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::uint64_t count_homs(GraphPtr source, GraphPtr target,
                         const HomSearchOptions& opts) {
  std::uint64_t n = 0;
  for_each_hom(source, target, opts, [&](const Hom&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<Hom> find_hom(GraphPtr source, GraphPtr target,
                            const HomSearchOptions& opts) {
  std::optional<Hom> out;
  for_each_hom(source, target, opts, [&](const Hom& h) {
    out = h;
    return false;
  });
  return out;
}

std::optional<Hom> find_iso(GraphPtr a, GraphPtr b, std::uint64_t budget) {
  if (a->edges.size() != b->edges.size() ||
      a->vertices.size() != b->vertices.size())
    return {};
  HomSearchOptions opts;
  opts.budget = budget;
  opts.vertex_injective = true;
  opts.edge_injective = true;
  return find_hom(std::move(a), std::move(b), opts);
}

bool isomorphic(GraphPtr a, GraphPtr b, std::uint64_t budget) {
  return find_iso(std::move(a), std::move(b), budget).has_value();
}

}  // namespace fgraph
