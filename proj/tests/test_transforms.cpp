#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fgraph/hom_search.hpp"
#include "fgraph/transforms.hpp"

using namespace fgraph;

namespace {

Value up(const ElementId& a, const ElementId& b) {
  return Value::set_of({Value::atom(a), Value::atom(b)});
}

Value dp(const ElementId& a, const ElementId& b) {
  return Value::tuple({Value::atom(a), Value::atom(b)});
}

Value ps(std::vector<ElementId> members) {
  std::vector<Value> atoms;
  for (auto& m : members) atoms.push_back(Value::atom(std::move(m)));
  return Value::set_of(std::move(atoms));
}

Value dh(const ElementId& head, std::vector<ElementId> members) {
  return Value::tuple({Value::atom(head), ps(std::move(members))});
}

GraphPtr dpath() {
  return make_graph(FunctorSpec::dpair(), {"d1", "d2"}, {"x1", "x2", "x3"},
                    {{"d1", dp("x1", "x2")}, {"d2", dp("x2", "x3")}});
}

GraphPtr dloop() {
  return make_graph(FunctorSpec::dpair(), {"d"}, {"x"}, {{"d", dp("x", "x")}});
}

GraphPtr upath() {
  return make_graph(FunctorSpec::upair(), {"p1", "p2"}, {"u1", "u2", "u3"},
                    {{"p1", up("u1", "u2")}, {"p2", up("u2", "u3")}});
}

const FunctorSpec kColoredSpec =
    FunctorSpec::colored({"red", "blue"}, {"s", "t"}, FunctorSpec::upair());

GraphPtr colored_edge() {
  Value w = Value::colored(
      "red", Value::set_of({Value::colored("s", Value::atom("v")),
                            Value::colored("t", Value::atom("w"))}));
  return make_graph(kColoredSpec, {"e"}, {"v", "w"}, {{"e", w}});
}

GraphPtr hyper2() {
  return make_graph(FunctorSpec::directed_hyper(), {"h1", "h2"},
                    {"a", "b", "c"},
                    {{"h1", dh("a", {"b", "c"})}, {"h2", dh("b", {})}});
}

}  // namespace

TEST_CASE("built-in transformations are natural at small universe sizes") {
  CHECK_FALSE(check_naturality(deorientation(), 3).has_value());
  CHECK_FALSE(check_naturality(uncoloring(kColoredSpec), 2).has_value());
  CHECK_FALSE(check_naturality(underlying_hypergraph(), 3).has_value());
}

TEST_CASE("a component depending on the carrier is caught") {
  NaturalTransformation broken;
  broken.source = FunctorSpec::dpair();
  broken.target = FunctorSpec::dpair();
  broken.name = "broken";
  broken.component = [](const FiniteSet& verts, const Value& w) {
    return Value::tuple({w.children()[0], Value::atom(*verts.begin())});
  };
  auto cex = check_naturality(broken, 2);
  REQUIRE(cex.has_value());
  CHECK(cex->mapped_then_component != cex->component_then_mapped);
  Value lhs = broken.component(
      cex->codomain, map_value(broken.source, cex->map, cex->value));
  CHECK(lhs == cex->mapped_then_component);
}

TEST_CASE("deorientation forgets direction and preserves homs") {
  GraphPtr g = dpath();
  GraphPtr u = apply_transformation(deorientation(), g);
  CHECK(u->spec == FunctorSpec::upair());
  CHECK(u->value_of("d1") == up("x1", "x2"));

  for (const auto& phi : enumerate_homs(dloop(), dloop())) {
    Hom moved = transport_hom(deorientation(), phi);
    CHECK(validate_hom(moved).ok);
  }
  for (const auto& phi : enumerate_homs(dpath(), dloop())) {
    Hom moved = transport_hom(deorientation(), phi);
    CHECK(validate_hom(moved).ok);
  }
}

TEST_CASE("deorientation is surjective on objects via its section") {
  for (const auto& g : {upath(),
                        make_graph(FunctorSpec::upair(), {"l"}, {"w"},
                                   {{"l", up("w", "w")}})}) {
    GraphPtr directed = preimage_graph(deorientation(), g);
    CHECK(directed->spec == FunctorSpec::dpair());
    GraphPtr back = apply_transformation(deorientation(), directed);
    CHECK(*back == *g);
  }
}

TEST_CASE("uncoloring strips colors and has a section when colors exist") {
  GraphPtr g = colored_edge();
  NaturalTransformation tau = uncoloring(kColoredSpec);
  GraphPtr plain = apply_transformation(tau, g);
  CHECK(plain->spec == FunctorSpec::upair());
  CHECK(plain->value_of("e") == up("v", "w"));

  GraphPtr recolored = preimage_graph(tau, plain);
  CHECK(recolored->spec == kColoredSpec);
  CHECK(*apply_transformation(tau, recolored) == *plain);
}

TEST_CASE("hyperedge underlying map has no section") {
  NaturalTransformation tau = underlying_hypergraph();
  GraphPtr g = hyper2();
  GraphPtr flat = apply_transformation(tau, g);
  CHECK(flat->spec == FunctorSpec::powerset());
  CHECK(flat->value_of("h1") == ps({"a", "b", "c"}));
  CHECK(flat->value_of("h2") == ps({"b"}));
  CHECK_THROWS_AS(preimage_graph(tau, flat), PreconditionViolated);
}

TEST_CASE("general transformations subsume the natural ones") {
  GeneralTransformation g = general_from_natural(deorientation());
  GraphPtr d = dpath();
  CHECK(*apply_general_transformation(g, d) ==
        *apply_transformation(deorientation(), d));
  for (const auto& phi : enumerate_homs(dpath(), dpath())) {
    CHECK(transport_hom_general(g, phi) ==
          transport_hom(deorientation(), phi));
  }
}

TEST_CASE("a carrier-relabeling general transformation") {
  GeneralTransformation relabel;
  relabel.source = FunctorSpec::upair();
  relabel.target = FunctorSpec::upair();
  relabel.name = "shift";
  relabel.edges.on_set = [](const FiniteSet& s) {
    std::vector<ElementId> out;
    for (const auto& x : s) out.push_back("d:" + x);
    return FiniteSet(out);
  };
  relabel.edges.on_map = [](const IdMap& f) {
    IdMap out;
    for (const auto& [k, v] : f) out["d:" + k] = "d:" + v;
    return out;
  };
  relabel.vertices = identity_carrier();
  relabel.structure = [](const FGraph& g, const ElementId& e) {
    return g.value_of(e.substr(2));
  };

  GraphPtr g = upath();
  GraphPtr shifted = apply_general_transformation(relabel, g);
  CHECK(shifted->edges == FiniteSet{"d:p1", "d:p2"});
  CHECK(shifted->vertices == g->vertices);
  for (const auto& phi : enumerate_homs(g, g))
    CHECK(validate_hom(transport_hom_general(relabel, phi)).ok);
}

TEST_CASE("simplification merges equal-valued edges exactly") {
  GraphPtr doubled = make_graph(
      FunctorSpec::upair(), {"e1", "e2", "e3"}, {"v", "w"},
      {{"e1", up("v", "w")}, {"e2", up("v", "w")}, {"e3", up("v", "v")}});
  CHECK_FALSE(is_simple(doubled));

  SimplifyResult s = simplify(doubled);
  CHECK(is_simple(s.graph));
  CHECK(s.graph->edges.size() == 2);
  CHECK(validate_hom(s.surjection).ok);
  CHECK(is_epi(s.surjection));

  SimplifyResult again = simplify(s.graph);
  CHECK(*again.graph == *s.graph);
}

TEST_CASE("simplification is functorial on homs") {
  GraphPtr doubled = make_graph(FunctorSpec::upair(), {"e1", "e2"}, {"v", "w"},
                                {{"e1", up("v", "w")}, {"e2", up("v", "w")}});
  GraphPtr target = upath();
  for (const auto& phi : enumerate_homs(doubled, target)) {
    Hom down = simplify_hom(phi);
    CHECK(validate_hom(down).ok);
    CHECK(compose(down, simplify(doubled).surjection) ==
          compose(simplify(target).surjection, phi));
  }
}

TEST_CASE("minimization leaves only the diagonal congruence") {
  GraphPtr big = make_graph(
      FunctorSpec::upair(), {"e1", "e2"}, {"v1", "v2", "v3", "v4"},
      {{"e1", up("v1", "v2")}, {"e2", up("v3", "v4")}});
  MinimizeResult m = minimize(big);
  CHECK(validate_hom(m.projection).ok);
  CHECK(is_epi(m.projection));
  CHECK(m.graph->edges.size() == 1);
  CHECK(m.graph->vertices.size() == 1);

  // only the diagonal congruence survives on a minimal graph
  const auto& es = m.graph->edges;
  const auto& vs = m.graph->vertices;
  for (const auto& a : es)
    for (const auto& b : es) {
      if (a == b) continue;
      EquivPair theta{Partition::from_pairs(es, {{a, b}}),
                      Partition::discrete(vs)};
      CHECK_FALSE(is_congruence(*m.graph, theta).ok);
    }
  for (const auto& a : vs)
    for (const auto& b : vs) {
      if (a == b) continue;
      EquivPair theta{Partition::discrete(es),
                      Partition::from_pairs(vs, {{a, b}})};
      CHECK_FALSE(is_congruence(*m.graph, theta).ok);
    }

  MinimizeResult twice = minimize(m.graph);
  CHECK(twice.projection.is_bijective());
}

TEST_CASE("orientations pull back along hypergraph homs") {
  FunctorSpec spec = FunctorSpec::powerset();
  GraphPtr g1 = make_graph(spec, {"e1", "e2"}, {"a", "b", "c"},
                           {{"e1", ps({"a", "b"})}, {"e2", ps({"b", "c"})}});
  GraphPtr g2 = make_graph(spec, {"f"}, {"x", "y"}, {{"f", ps({"x", "y"})}});
  Hom phi{g1, g2,
          {{"e1", "f"}, {"e2", "f"}},
          {{"a", "x"}, {"b", "y"}, {"c", "x"}}};
  REQUIRE(validate_hom(phi).ok);

  Orientation omega2{{"f", "y"}};
  validate_orientation(g2, omega2);
  Orientation omega1 = lift_orientation(phi, omega2);
  validate_orientation(g1, omega1);
  CHECK(omega1.at("e1") == "b");
  CHECK(omega1.at("e2") == "b");

  Hom directed{pair_with_orientation(g1, omega1),
               pair_with_orientation(g2, omega2), phi.edge_map,
               phi.vertex_map};
  CHECK(validate_hom(directed).ok);
  CHECK(directed.source->spec == FunctorSpec::directed_hyper());
}

TEST_CASE("orientation validation rejects non-members and partial maps") {
  GraphPtr g = make_graph(FunctorSpec::powerset(), {"e"}, {"a", "b"},
                          {{"e", ps({"a"})}});
  CHECK_THROWS_AS(validate_orientation(g, Orientation{{"e", "b"}}),
                  NotAnOrientation);
  CHECK_THROWS_AS(validate_orientation(g, Orientation{}), DomainMismatch);
  CHECK_THROWS_AS(lift_orientation(identity_hom(upath()), Orientation{}),
                  PreconditionViolated);
}

TEST_CASE("conjunct parts cover the graph and are one-generated") {
  GraphPtr g = make_graph(
      FunctorSpec::upair(), {"e1", "e2"}, {"v1", "v2", "v3", "z"},
      {{"e1", up("v1", "v2")}, {"e2", up("v2", "v3")}});
  ConjunctDecomposition d = conjunct_decomposition(g);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.isolated_vertices == FiniteSet{"z"});
  CHECK(d.parts[0].edges == FiniteSet{"e1"});
  CHECK(d.parts[0].vertices == FiniteSet{"v1", "v2"});
  CHECK(d.part_one_generated == std::vector<bool>{true, true});

  FiniteSet covered_edges, covered_vertices = d.isolated_vertices;
  for (const auto& part : d.parts) {
    covered_edges = FiniteSet::union_of(covered_edges, part.edges);
    covered_vertices = FiniteSet::union_of(covered_vertices, part.vertices);
    CHECK(is_one_generated(part.to_graph()));
  }
  CHECK(covered_edges == g->edges);
  CHECK(covered_vertices == g->vertices);
}

TEST_CASE("one-generation and conjunct irreducibility") {
  GraphPtr loop = make_graph(FunctorSpec::upair(), {"l"}, {"w"},
                             {{"l", up("w", "w")}});
  CHECK(is_one_generated(loop));
  CHECK(is_conjunctly_irreducible(loop));

  CHECK_FALSE(is_one_generated(upath()));
  CHECK_FALSE(is_conjunctly_irreducible(upath()));

  GraphPtr point = make_graph(FunctorSpec::upair(), {}, {"v"}, {});
  CHECK_FALSE(is_one_generated(point));
  CHECK(is_conjunctly_irreducible(point));

  GraphPtr empty = make_graph(FunctorSpec::upair(), {}, {}, {});
  CHECK_FALSE(is_conjunctly_irreducible(empty));

  GraphPtr edge_plus_isolated =
      make_graph(FunctorSpec::upair(), {"e"}, {"v", "w", "z"},
                 {{"e", up("v", "w")}});
  CHECK_FALSE(is_one_generated(edge_plus_isolated));
  CHECK_FALSE(is_conjunctly_irreducible(edge_plus_isolated));
}
