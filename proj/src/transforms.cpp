#include "fgraph/transforms.hpp"

#include <cassert>
#include <set>

namespace fgraph {

NaturalTransformation deorientation() {
  NaturalTransformation tau;
  tau.source = FunctorSpec::dpair();
  tau.target = FunctorSpec::upair();
  tau.name = "deorientation";
  tau.component = [](const FiniteSet&, const Value& w) {
    return Value::set_of({w.children()[0], w.children()[1]});
  };
  tau.section = [](const FiniteSet&, const Value& w) {
    return Value::tuple({w.children().front(), w.children().back()});
  };
  return tau;
}

NaturalTransformation uncoloring(const FunctorSpec& colored_spec) {
  if (colored_spec.kind() != FunctorKind::Colored)
    throw SpecMismatch("uncoloring needs a colored functor");

  NaturalTransformation tau;
  tau.source = colored_spec;
  tau.target = colored_spec.inner();
  tau.name = "uncoloring";
  FunctorSpec inner = colored_spec.inner();
  tau.component = [inner](const FiniteSet&, const Value& w) {
    return map_value_leaves(inner, w.inner(),
                            [](const Value& u) { return u.inner(); });
  };
  if (!colored_spec.edge_colors().empty() &&
      !colored_spec.vertex_colors().empty()) {
    ElementId ce = *colored_spec.edge_colors().begin();
    ElementId cv = *colored_spec.vertex_colors().begin();
    tau.section = [inner, ce, cv](const FiniteSet&, const Value& w) {
      return Value::colored(
          ce, map_value_leaves(inner, w, [&cv](const Value& u) {
            return Value::colored(cv, u);
          }));
    };
  }
  return tau;
}

NaturalTransformation underlying_hypergraph() {
  NaturalTransformation tau;
  tau.source = FunctorSpec::directed_hyper();
  tau.target = FunctorSpec::powerset();
  tau.name = "underlying_hypergraph";
  tau.component = [](const FiniteSet&, const Value& w) {
    std::vector<Value> members = w.children()[1].children();
    members.push_back(w.children()[0]);
    return Value::set_of(std::move(members));
  };
  return tau;
}

std::optional<NaturalityCounterexample> check_naturality(
    const NaturalTransformation& tau, int universe_size,
    const Budgets& budgets) {
  std::vector<ElementId> universe;
  for (int i = 1; i <= universe_size; ++i)
    universe.push_back("x" + std::to_string(i));

  std::uint64_t spent = 0;
  const std::uint64_t n_subsets = std::uint64_t{1} << universe.size();
  for (std::uint64_t am = 0; am < n_subsets; ++am) {
    std::vector<ElementId> a_elems;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (am & (std::uint64_t{1} << i)) a_elems.push_back(universe[i]);
    FiniteSet domain(a_elems);
    std::vector<Value> values =
        enumerate_values(tau.source, domain, budgets.enumeration);

    for (std::uint64_t bm = 0; bm < n_subsets; ++bm) {
      std::vector<ElementId> b_elems;
      for (std::size_t i = 0; i < universe.size(); ++i)
        if (bm & (std::uint64_t{1} << i)) b_elems.push_back(universe[i]);
      FiniteSet codomain(b_elems);
      if (codomain.empty() && !domain.empty()) continue;

      // odometer over all maps domain -> codomain
      std::vector<std::size_t> digits(domain.size(), 0);
      while (true) {
        IdMap f;
        for (std::size_t i = 0; i < a_elems.size(); ++i)
          f[a_elems[i]] = b_elems[digits[i]];

        for (const Value& w : values) {
          if (++spent > budgets.enumeration)
            throw BudgetExceeded("naturality check budget exhausted");
          Value lhs = tau.component(codomain, map_value(tau.source, f, w));
          Value rhs = map_value(tau.target, f, tau.component(domain, w));
          if (!(lhs == rhs))
            return NaturalityCounterexample{domain, codomain, f, w,
                                            lhs,    rhs};
        }

        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] + 1 == codomain.size())
          digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
    }
  }
  return std::nullopt;
}

GraphPtr apply_transformation(const NaturalTransformation& tau,
                              const GraphPtr& g) {
  if (g->spec != tau.source)
    throw SpecMismatch("graph is not typed over the transformation's source");
  std::map<ElementId, Value> structure;
  for (const auto& e : g->edges)
    structure.emplace(e, tau.component(g->vertices, g->value_of(e)));
  return make_graph(tau.target, g->edges, g->vertices, std::move(structure));
}

Hom transport_hom(const NaturalTransformation& tau, const Hom& phi) {
  Hom out{apply_transformation(tau, phi.source),
          apply_transformation(tau, phi.target), phi.edge_map, phi.vertex_map};
  HomVerdict verdict = validate_hom(out);
  if (!verdict.ok)
    throw PreconditionViolated("transformation broke the hom square: " +
                               verdict.reason);
  return out;
}

GraphPtr preimage_graph(const NaturalTransformation& tau, const GraphPtr& g) {
  if (!tau.section)
    throw PreconditionViolated(tau.name + " has no section");
  if (g->spec != tau.target)
    throw SpecMismatch("graph is not typed over the transformation's target");
  std::map<ElementId, Value> structure;
  for (const auto& e : g->edges)
    structure.emplace(e, tau.section(g->vertices, g->value_of(e)));
  return make_graph(tau.source, g->edges, g->vertices, std::move(structure));
}

CarrierFunctor identity_carrier() {
  CarrierFunctor id;
  id.on_set = [](const FiniteSet& s) { return s; };
  id.on_map = [](const IdMap& f) { return f; };
  return id;
}

GeneralTransformation general_from_natural(const NaturalTransformation& tau) {
  GeneralTransformation t;
  t.source = tau.source;
  t.target = tau.target;
  t.name = tau.name;
  t.edges = identity_carrier();
  t.vertices = identity_carrier();
  auto component = tau.component;
  t.structure = [component](const FGraph& g, const ElementId& e) {
    return component(g.vertices, g.value_of(e));
  };
  return t;
}

GraphPtr apply_general_transformation(const GeneralTransformation& t,
                                      const GraphPtr& g) {
  if (g->spec != t.source)
    throw SpecMismatch("graph is not typed over the transformation's source");
  FiniteSet edges = t.edges.on_set(g->edges);
  FiniteSet vertices = t.vertices.on_set(g->vertices);
  std::map<ElementId, Value> structure;
  for (const auto& e : edges) structure.emplace(e, t.structure(*g, e));
  return make_graph(t.target, std::move(edges), std::move(vertices),
                    std::move(structure));
}

Hom transport_hom_general(const GeneralTransformation& t, const Hom& phi) {
  Hom out{apply_general_transformation(t, phi.source),
          apply_general_transformation(t, phi.target),
          t.edges.on_map(phi.edge_map), t.vertices.on_map(phi.vertex_map)};
  HomVerdict verdict = validate_hom(out);
  if (!verdict.ok)
    throw PreconditionViolated("transformation broke the hom square: " +
                               verdict.reason);
  return out;
}

bool is_simple(const GraphPtr& g) {
  std::set<Value> seen;
  for (const auto& e : g->edges)
    if (!seen.insert(g->value_of(e)).second) return false;
  return true;
}

SimplifyResult simplify(const GraphPtr& g) {
  std::vector<ElementId> edge_ids;
  std::map<ElementId, Value> structure;
  IdMap edge_map;
  for (const auto& e : g->edges) {
    ElementId id = g->value_of(e).to_string();
    edge_ids.push_back(id);
    structure.emplace(id, g->value_of(e));
    edge_map[e] = std::move(id);
  }

  SimplifyResult out;
  out.graph = make_graph(g->spec, FiniteSet(std::move(edge_ids)), g->vertices,
                         std::move(structure));
  out.surjection = Hom{g, out.graph, std::move(edge_map),
                       identity_map(g->vertices)};
  assert(validate_hom(out.surjection).ok);
  return out;
}

Hom simplify_hom(const Hom& phi) {
  HomVerdict verdict = validate_hom(phi);
  if (!verdict.ok)
    throw PreconditionViolated("not a homomorphism: " + verdict.reason);

  SimplifyResult sa = simplify(phi.source);
  SimplifyResult sb = simplify(phi.target);
  IdMap edge_map;
  for (const auto& e : phi.source->edges) {
    const Value& u = phi.source->value_of(e);
    Value image = map_value(phi.source->spec, phi.vertex_map, u);
    edge_map[u.to_string()] = image.to_string();
  }

  Hom out{sa.graph, sb.graph, std::move(edge_map), phi.vertex_map};
  assert(validate_hom(out).ok);
  return out;
}

MinimizeResult minimize(const GraphPtr& g, std::uint64_t cap) {
  Hom bang = terminal_hom(g, cap);
  QuotientResult q = quotient(g, kernel(bang));
  return MinimizeResult{q.graph, q.projection};
}

void validate_orientation(const GraphPtr& g, const Orientation& omega) {
  if (g->spec.kind() != FunctorKind::Powerset)
    throw PreconditionViolated("orientations live on powerset graphs");
  for (const auto& [e, v] : omega)
    if (!g->edges.contains(e))
      throw DomainMismatch("orientation names a missing edge: " + e);
  for (const auto& e : g->edges) {
    auto it = omega.find(e);
    if (it == omega.end())
      throw DomainMismatch("orientation misses edge " + e);
    bool member = false;
    for (const auto& atom : g->value_of(e).children())
      if (atom.label() == it->second) {
        member = true;
        break;
      }
    if (!member) throw NotAnOrientation(e, it->second);
  }
}

Orientation lift_orientation(const Hom& phi, const Orientation& target_omega) {
  HomVerdict verdict = validate_hom(phi);
  if (!verdict.ok)
    throw PreconditionViolated("not a homomorphism: " + verdict.reason);
  validate_orientation(phi.target, target_omega);

  Orientation out;
  for (const auto& e : phi.source->edges) {
    const ElementId& picked = target_omega.at(phi.edge_map.at(e));
    for (const auto& atom : phi.source->value_of(e).children()) {
      if (phi.vertex_map.at(atom.label()) == picked) {
        out[e] = atom.label();
        break;
      }
    }
    if (!out.count(e))
      throw PreconditionViolated("no preimage vertex for edge " + e);
  }
  validate_orientation(phi.source, out);
  return out;
}

GraphPtr pair_with_orientation(const GraphPtr& g, const Orientation& omega) {
  validate_orientation(g, omega);
  std::map<ElementId, Value> structure;
  for (const auto& e : g->edges)
    structure.emplace(
        e, Value::tuple({Value::atom(omega.at(e)), g->value_of(e)}));
  return make_graph(FunctorSpec::directed_hyper(), g->edges, g->vertices,
                    std::move(structure));
}

ConjunctDecomposition conjunct_decomposition(const GraphPtr& g) {
  ConjunctDecomposition out;
  FiniteSet covered;
  for (const auto& e : g->edges) {
    SubgraphHandle part = edge_induced(g, e);
    covered = FiniteSet::union_of(covered, part.vertices);
    out.part_one_generated.push_back(is_one_generated(part.to_graph()));
    out.parts.push_back(std::move(part));
  }
  out.isolated_vertices = FiniteSet::difference_of(g->vertices, covered);
  return out;
}

bool is_one_generated(const GraphPtr& g) {
  for (const auto& e : g->edges) {
    SubgraphHandle h = generated_subgraph(g, FiniteSet({e}), {});
    if (h.edges == g->edges && h.vertices == g->vertices) return true;
  }
  return false;
}

bool is_conjunctly_irreducible(const GraphPtr& g) {
  // Every proper subgraph is a union of proper edge-induced subgraphs and
  // proper single-vertex subgraphs, so their union is the union of all
  // proper subgraphs.
  FiniteSet union_edges, union_vertices;
  for (const auto& e : g->edges) {
    SubgraphHandle h = edge_induced(g, e);
    if (h.edges == g->edges && h.vertices == g->vertices) continue;
    union_edges = FiniteSet::union_of(union_edges, h.edges);
    union_vertices = FiniteSet::union_of(union_vertices, h.vertices);
  }
  for (const auto& v : g->vertices) {
    if (g->edges.empty() && g->vertices == FiniteSet({v})) continue;
    union_vertices = FiniteSet::union_of(union_vertices, FiniteSet({v}));
  }
  return !(union_edges == g->edges && union_vertices == g->vertices);
}

}  // namespace fgraph
