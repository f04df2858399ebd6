#include "fgraph/graph.hpp"

#include <algorithm>

#include "fgraph/errors.hpp"

namespace fgraph {

std::vector<GraphViolation> validate_graph(const FGraph& g) {
  std::vector<GraphViolation> out;
  for (const auto& [e, w] : g.structure)
    if (!g.edges.contains(e))
      out.push_back({e, "structure map defined on a non-edge"});
  for (const auto& e : g.edges) {
    auto it = g.structure.find(e);
    if (it == g.structure.end()) {
      out.push_back({e, "edge has no structure value"});
      continue;
    }
    try {
      validate_value(g.spec, it->second);
    } catch (const MalformedValue& err) {
      out.push_back({e, err.what()});
      continue;
    }
    if (!value_in_subset(g.spec, it->second, g.vertices))
      out.push_back({e, "support of " + it->second.to_string() +
                            " escapes the vertex set"});
  }
  return out;
}

GraphPtr make_graph(FunctorSpec spec, FiniteSet edges, FiniteSet vertices,
                    std::map<ElementId, Value> structure) {
  FGraph g{std::move(spec), std::move(edges), std::move(vertices),
           std::move(structure)};
  auto violations = validate_graph(g);
  if (!violations.empty())
    throw MalformedValue("invalid graph: " + violations.front().where + ": " +
                         violations.front().reason);
  return std::make_shared<const FGraph>(std::move(g));
}

bool Hom::is_injective() const {
  return is_injective_on(edge_map, source->edges) &&
         is_injective_on(vertex_map, source->vertices);
}

bool Hom::is_surjective() const {
  return is_surjective_onto(edge_map, source->edges, target->edges) &&
         is_surjective_onto(vertex_map, source->vertices, target->vertices);
}

HomVerdict validate_hom(const Hom& phi) {
  if (!(phi.source->spec == phi.target->spec))
    throw SpecMismatch("hom between graphs over different functors: " +
                       phi.source->spec.describe() + " vs " +
                       phi.target->spec.describe());
  for (const auto& [k, v] : phi.edge_map)
    if (!phi.source->edges.contains(k))
      return {false, "edge map mentions unknown edge " + k, {}};
  for (const auto& [k, v] : phi.vertex_map)
    if (!phi.source->vertices.contains(k))
      return {false, "vertex map mentions unknown vertex " + k, {}};
  for (const auto& e : phi.source->edges) {
    auto it = phi.edge_map.find(e);
    if (it == phi.edge_map.end())
      return {false, "edge map not total: missing " + e, {}};
    if (!phi.target->edges.contains(it->second))
      return {false, "edge " + e + " maps to unknown edge " + it->second, {}};
  }
  for (const auto& v : phi.source->vertices) {
    auto it = phi.vertex_map.find(v);
    if (it == phi.vertex_map.end())
      return {false, "vertex map not total: missing " + v, {}};
    if (!phi.target->vertices.contains(it->second))
      return {false, "vertex " + v + " maps to unknown vertex " + it->second,
              {}};
  }
  for (const auto& e : phi.source->edges) {
    Value mapped = map_value(phi.source->spec, phi.vertex_map,
                             phi.source->value_of(e));
    if (!(mapped == phi.target->value_of(phi.edge_map.at(e))))
      return {false,
              "structure square fails at " + e + ": mapped value " +
                  mapped.to_string() + " vs " +
                  phi.target->value_of(phi.edge_map.at(e)).to_string(),
              e};
  }
  return {true, "", {}};
}

Hom identity_hom(GraphPtr g) {
  return {g, g, identity_map(g->edges), identity_map(g->vertices)};
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (!(*inner.target == *outer.source))
    throw DomainMismatch("compose: middle graphs differ");
  return {inner.source, outer.target,
          compose_maps(outer.edge_map, inner.edge_map),
          compose_maps(outer.vertex_map, inner.vertex_map)};
}

GraphPtr SubgraphHandle::to_graph() const {
  std::map<ElementId, Value> structure;
  for (const auto& e : edges) structure.emplace(e, parent->value_of(e));
  return std::make_shared<const FGraph>(
      FGraph{parent->spec, edges, vertices, std::move(structure)});
}

Hom SubgraphHandle::inclusion() const {
  auto sub = to_graph();
  return {sub, parent, identity_map(edges), identity_map(vertices)};
}

SubgraphVerdict subgraph_check(GraphPtr g, const FiniteSet& edge_subset,
                               const FiniteSet& vertex_subset) {
  if (!edge_subset.subset_of(g->edges))
    return {{}, {}, "edge subset contains non-edges"};
  if (!vertex_subset.subset_of(g->vertices))
    return {{}, {}, "vertex subset contains non-vertices"};
  for (const auto& e : edge_subset)
    if (!value_in_subset(g->spec, g->value_of(e), vertex_subset))
      return {{}, e, "support of edge " + e + " escapes the vertex subset"};
  return {SubgraphHandle{g, edge_subset, vertex_subset}, {}, ""};
}

ImageResult image(const Hom& phi) {
  FiniteSet e_img = image_of(phi.edge_map, phi.source->edges);
  FiniteSet v_img = image_of(phi.vertex_map, phi.source->vertices);
  auto verdict = subgraph_check(phi.target, e_img, v_img);
  if (!verdict.handle)
    throw PreconditionViolated("image is not a subgraph; input was not a hom");
  Hom restriction{phi.source, verdict.handle->to_graph(), phi.edge_map,
                  phi.vertex_map};
  return {*verdict.handle, std::move(restriction)};
}

Factorization factorize(const Hom& phi) {
  ImageResult im = image(phi);
  return {im.restriction.target, im.restriction, im.image.inclusion()};
}

Hom diagonal_fill(const Hom& epi, const Hom& mono, const Hom& top,
                  const Hom& bottom) {
  if (!epi.is_surjective())
    throw PreconditionViolated("diagonal_fill: left side is not surjective");
  if (!mono.is_injective())
    throw PreconditionViolated("diagonal_fill: right side is not injective");
  if (!(compose(bottom, epi) == compose(mono, top)))
    throw PreconditionViolated("diagonal_fill: square does not commute");
  auto med = mediate_through_epi(epi, top);
  if (!med.hom)
    throw PreconditionViolated("diagonal_fill: mediation failed unexpectedly");
  if (!(compose(mono, *med.hom) == bottom))
    throw PreconditionViolated("diagonal_fill: diagonal does not close");
  return *med.hom;
}

// ---------------------------------------------------------------------------
// Partitions

Partition Partition::discrete(const FiniteSet& domain) {
  Partition p;
  p.domain_ = domain;
  for (const auto& x : domain) p.rep_[x] = x;
  return p;
}

Partition Partition::from_pairs(
    const FiniteSet& domain,
    const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  std::map<ElementId, ElementId> parent;
  for (const auto& x : domain) parent[x] = x;
  std::function<ElementId(const ElementId&)> find =
      [&](const ElementId& x) -> ElementId {
    auto it = parent.find(x);
    if (it == parent.end())
      throw DomainMismatch("partition pair mentions unknown element " + x);
    if (it->second == x) return x;
    ElementId root = find(it->second);
    parent[x] = root;
    return root;
  };
  for (const auto& [a, b] : pairs) {
    ElementId ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  Partition p;
  p.domain_ = domain;
  for (const auto& x : domain) p.rep_[x] = find(x);
  // path-compressed roots are already the least members because unions
  // always point the larger root at the smaller one
  return p;
}

Partition Partition::from_classes(
    const FiniteSet& domain, const std::vector<std::vector<ElementId>>& classes) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& cls : classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      pairs.emplace_back(cls[0], cls[i]);
  return from_pairs(domain, pairs);
}

Partition Partition::from_key(
    const FiniteSet& domain,
    const std::function<std::string(const ElementId&)>& key) {
  std::map<std::string, ElementId> first_with_key;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& x : domain) {
    auto [it, fresh] = first_with_key.emplace(key(x), x);
    if (!fresh) pairs.emplace_back(it->second, x);
  }
  return from_pairs(domain, pairs);
}

bool Partition::is_discrete() const {
  for (const auto& [x, r] : rep_)
    if (x != r) return false;
  return true;
}

std::vector<std::vector<ElementId>> Partition::classes() const {
  std::map<ElementId, std::vector<ElementId>> by_rep;
  for (const auto& x : domain_) by_rep[rep_.at(x)].push_back(x);
  std::vector<std::vector<ElementId>> out;
  out.reserve(by_rep.size());
  for (auto& [r, members] : by_rep) out.push_back(std::move(members));
  return out;
}

FiniteSet Partition::representatives() const {
  std::vector<ElementId> reps;
  for (const auto& [x, r] : rep_)
    if (x == r) reps.push_back(x);
  return FiniteSet(std::move(reps));
}

std::vector<std::pair<ElementId, ElementId>> Partition::nontrivial_pairs()
    const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (const auto& a : domain_)
    for (const auto& b : domain_)
      if (a != b && same_class(a, b)) out.emplace_back(a, b);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (domain_ != coarser.domain_)
    throw DomainMismatch("refinement check between different domains");
  for (const auto& x : domain_)
    if (!coarser.same_class(x, rep_of(x))) return false;
  return true;
}

Partition Partition::join(const Partition& a, const Partition& b) {
  if (a.domain_ != b.domain_)
    throw DomainMismatch("join of partitions over different domains");
  auto pairs = a.nontrivial_pairs();
  auto more = b.nontrivial_pairs();
  pairs.insert(pairs.end(), more.begin(), more.end());
  return from_pairs(a.domain_, pairs);
}

Partition Partition::restrict_to(const Partition& p, const FiniteSet& sub) {
  if (!sub.subset_of(p.domain_))
    throw DomainMismatch("restriction outside the partition domain");
  // least member inside the subset becomes the class name
  std::map<ElementId, ElementId> least;
  for (const auto& x : sub) {
    auto [it, fresh] = least.emplace(p.rep_of(x), x);
    (void)it;
    (void)fresh;  // first hit in sorted order is already the least
  }
  Partition out;
  out.domain_ = sub;
  for (const auto& x : sub) out.rep_[x] = least.at(p.rep_of(x));
  return out;
}

// ---------------------------------------------------------------------------
// Kernels, congruences, quotients

EquivPair kernel(const Hom& phi) {
  return {Partition::from_key(
              phi.source->edges,
              [&](const ElementId& e) { return phi.edge_map.at(e); }),
          Partition::from_key(phi.source->vertices, [&](const ElementId& v) {
            return phi.vertex_map.at(v);
          })};
}

CongruenceVerdict is_congruence(const FGraph& g, const EquivPair& theta) {
  if (theta.edges.domain() != g.edges || theta.vertices.domain() != g.vertices)
    throw DomainMismatch("equivalence pair does not match the graph carriers");
  IdMap pi = theta.vertices.projection_map();
  for (const auto& cls : theta.edges.classes()) {
    Value base = map_value(g.spec, pi, g.value_of(cls[0]));
    for (std::size_t i = 1; i < cls.size(); ++i) {
      Value other = map_value(g.spec, pi, g.value_of(cls[i]));
      if (!(other == base)) return {false, {{cls[0], cls[i]}}};
    }
  }
  return {true, {}};
}

QuotientResult quotient(GraphPtr g, const EquivPair& theta) {
  auto verdict = is_congruence(*g, theta);
  if (!verdict.ok)
    throw NotACongruence(verdict.counterexample->first,
                         verdict.counterexample->second);
  IdMap pi_v = theta.vertices.projection_map();
  FiniteSet edges = theta.edges.representatives();
  FiniteSet vertices = theta.vertices.representatives();
  std::map<ElementId, Value> structure;
  for (const auto& e : edges)
    structure.emplace(e, map_value(g->spec, pi_v, g->value_of(e)));
  auto q = make_graph(g->spec, std::move(edges), std::move(vertices),
                      std::move(structure));
  Hom projection{g, q, theta.edges.projection_map(), pi_v};
  return {q, std::move(projection)};
}

Hom first_isomorphism(const Hom& phi) {
  auto q = quotient(phi.source, kernel(phi));
  auto im = image(phi);
  auto med = mediate_through_epi(q.projection, im.restriction);
  if (!med.hom)
    throw PreconditionViolated("first_isomorphism: mediation failed");
  return *med.hom;
}

// ---------------------------------------------------------------------------
// Diagram lemmas

namespace {

struct LiftOutcome {
  std::optional<IdMap> map;
  std::optional<std::pair<ElementId, ElementId>> violating_pair;
};

// Factor `other` through `through` on one carrier: other = out . through.
LiftOutcome lift_along_surjection(const FiniteSet& domain, const IdMap& through,
                                  const IdMap& other) {
  IdMap out;
  std::map<ElementId, ElementId> chosen_preimage;
  for (const auto& x : domain) {
    const ElementId& mid = through.at(x);
    auto [it, fresh] = out.emplace(mid, other.at(x));
    if (!fresh && it->second != other.at(x))
      return {{}, {{chosen_preimage.at(mid), x}}};
    if (fresh) chosen_preimage.emplace(mid, x);
  }
  return {std::move(out), {}};
}

}  // namespace

EpiMediation mediate_through_epi(const Hom& epi, const Hom& other) {
  if (!(*epi.source == *other.source))
    throw DomainMismatch("mediate_through_epi: sources differ");
  if (!epi.is_surjective())
    throw PreconditionViolated("mediate_through_epi: first hom not surjective");
  // Set-level side condition: an empty middle carrier cannot reach a
  // nonempty one. Surjectivity makes this unreachable, but refuse loudly
  // rather than construct a partial map if it ever comes up.
  if ((epi.target->edges.empty() && !other.target->edges.empty() &&
       !epi.source->edges.empty()) ||
      (epi.target->vertices.empty() && !other.target->vertices.empty() &&
       !epi.source->vertices.empty()))
    throw PreconditionViolated("mediate_through_epi: empty middle carrier");
  auto edge_lift =
      lift_along_surjection(epi.source->edges, epi.edge_map, other.edge_map);
  if (!edge_lift.map)
    return {{}, edge_lift.violating_pair, true,
            "kernel of the surjection not respected on edges"};
  auto vertex_lift = lift_along_surjection(epi.source->vertices,
                                           epi.vertex_map, other.vertex_map);
  if (!vertex_lift.map)
    return {{}, vertex_lift.violating_pair, false,
            "kernel of the surjection not respected on vertices"};
  Hom gamma{epi.target, other.target, std::move(*edge_lift.map),
            std::move(*vertex_lift.map)};
  auto verdict = validate_hom(gamma);
  if (!verdict.ok)
    throw PreconditionViolated(
        "mediate_through_epi: lifted maps are not a hom (" + verdict.reason +
        ")");
  return {std::move(gamma), {}, false, ""};
}

MonoMediation mediate_through_mono(const Hom& mono, const Hom& other) {
  if (!(*mono.target == *other.target))
    throw DomainMismatch("mediate_through_mono: targets differ");
  if (!mono.is_injective())
    throw PreconditionViolated("mediate_through_mono: first hom not injective");
  IdMap edge_inverse, vertex_inverse;
  for (const auto& e : mono.source->edges)
    edge_inverse[mono.edge_map.at(e)] = e;
  for (const auto& v : mono.source->vertices)
    vertex_inverse[mono.vertex_map.at(v)] = v;
  IdMap edge_out, vertex_out;
  for (const auto& e : other.source->edges) {
    auto it = edge_inverse.find(other.edge_map.at(e));
    if (it == edge_inverse.end())
      return {{}, other.edge_map.at(e), true,
              "image escapes the injection on edges"};
    edge_out[e] = it->second;
  }
  for (const auto& v : other.source->vertices) {
    auto it = vertex_inverse.find(other.vertex_map.at(v));
    if (it == vertex_inverse.end())
      return {{}, other.vertex_map.at(v), false,
              "image escapes the injection on vertices"};
    vertex_out[v] = it->second;
  }
  Hom gamma{other.source, mono.source, std::move(edge_out),
            std::move(vertex_out)};
  auto verdict = validate_hom(gamma);
  if (!verdict.ok)
    throw PreconditionViolated(
        "mediate_through_mono: corestriction is not a hom (" + verdict.reason +
        ")");
  return {std::move(gamma), {}, false, ""};
}

// ---------------------------------------------------------------------------
// Morphism classes

IsoCheck is_iso(const Hom& phi) {
  if (!phi.is_bijective()) return {false, {}};
  IdMap edge_inv, vertex_inv;
  for (const auto& [k, v] : phi.edge_map) edge_inv[v] = k;
  for (const auto& [k, v] : phi.vertex_map) vertex_inv[v] = k;
  Hom inverse{phi.target, phi.source, std::move(edge_inv),
              std::move(vertex_inv)};
  auto verdict = validate_hom(inverse);
  if (!verdict.ok)
    throw PreconditionViolated("is_iso: inverse of a bijective hom failed (" +
                               verdict.reason + ")");
  return {true, std::move(inverse)};
}

bool is_epi(const Hom& phi) { return phi.is_surjective(); }

bool is_regular_mono(const Hom& phi) { return phi.is_injective(); }

// ---------------------------------------------------------------------------
// Isomorphism theorems

SecondIsoResult second_isomorphism(GraphPtr g, const EquivPair& theta1,
                                   const EquivPair& theta2) {
  if (!theta1.refines(theta2))
    throw PreconditionViolated(
        "second_isomorphism: first congruence must refine the second");
  auto q1 = quotient(g, theta1);
  auto q2 = quotient(g, theta2);
  auto chi = mediate_through_epi(q1.projection, q2.projection);
  if (!chi.hom)
    throw PreconditionViolated("second_isomorphism: chi does not exist");
  EquivPair theta3 = kernel(*chi.hom);
  auto q3 = quotient(q1.graph, theta3);
  auto iso = mediate_through_epi(compose(q3.projection, q1.projection),
                                 q2.projection);
  if (!iso.hom || !is_iso(*iso.hom).ok)
    throw PreconditionViolated("second_isomorphism: witness is not an iso");
  return {*chi.hom, std::move(theta3), *iso.hom};
}

ThirdIsoResult third_isomorphism(GraphPtr g, const EquivPair& theta,
                                 const SubgraphHandle& u) {
  if (!(*u.parent == *g))
    throw DomainMismatch("third_isomorphism: handle is not on the graph");
  std::vector<ElementId> sat_edges, sat_vertices;
  for (const auto& e : g->edges)
    for (const auto& eu : u.edges)
      if (theta.edges.same_class(e, eu)) {
        sat_edges.push_back(e);
        break;
      }
  for (const auto& v : g->vertices)
    for (const auto& vu : u.vertices)
      if (theta.vertices.same_class(v, vu)) {
        sat_vertices.push_back(v);
        break;
      }
  auto sat_check = subgraph_check(g, FiniteSet(std::move(sat_edges)),
                                  FiniteSet(std::move(sat_vertices)));
  if (!sat_check.handle)
    throw PreconditionViolated(
        "third_isomorphism: saturation is not a subgraph; the equivalence "
        "pair is not a congruence");
  SubgraphHandle saturation = *sat_check.handle;

  EquivPair restricted{Partition::restrict_to(theta.edges, u.edges),
                       Partition::restrict_to(theta.vertices, u.vertices)};
  EquivPair on_saturation{
      Partition::restrict_to(theta.edges, saturation.edges),
      Partition::restrict_to(theta.vertices, saturation.vertices)};

  auto qu = quotient(u.to_graph(), restricted);
  auto qsat = quotient(saturation.to_graph(), on_saturation);

  // G_U -> saturation -> saturation/theta has exactly the restricted kernel,
  // so it factors through G_U/restricted and the factor is the witness iso.
  Hom incl{qu.projection.source, qsat.projection.source,
           identity_map(u.edges), identity_map(u.vertices)};
  auto kappa = compose(qsat.projection, incl);
  auto iso = mediate_through_epi(qu.projection, kappa);
  if (!iso.hom || !is_iso(*iso.hom).ok)
    throw PreconditionViolated("third_isomorphism: witness is not an iso");
  return {std::move(saturation), std::move(restricted), *iso.hom};
}

}  // namespace fgraph
