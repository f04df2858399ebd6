#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/hom_search.hpp"

using namespace fgraph;

namespace {

Value up(const ElementId& a, const ElementId& b) {
  return Value::set_of({Value::atom(a), Value::atom(b)});
}

GraphPtr cycle4() {
  return make_graph(FunctorSpec::upair(), {"e1", "e2", "e3", "e4"},
                    {"v1", "v2", "v3", "v4"},
                    {{"e1", up("v1", "v2")},
                     {"e2", up("v2", "v3")},
                     {"e3", up("v3", "v4")},
                     {"e4", up("v4", "v1")}});
}

GraphPtr triangle() {
  return make_graph(FunctorSpec::upair(), {"te1", "te2", "te3"},
                    {"tv1", "tv2", "tv3"},
                    {{"te1", up("tv1", "tv2")},
                     {"te2", up("tv2", "tv3")},
                     {"te3", up("tv3", "tv1")}});
}

/// The paper's running example: the 4-cycle wrapped onto the triangle.
Hom wrap_hom() {
  Hom phi;
  phi.source = cycle4();
  phi.target = triangle();
  phi.edge_map = {{"e1", "te1"}, {"e2", "te2"}, {"e3", "te2"}, {"e4", "te1"}};
  phi.vertex_map = {
      {"v1", "tv1"}, {"v2", "tv2"}, {"v3", "tv3"}, {"v4", "tv2"}};
  return phi;
}

GraphPtr path2() {
  return make_graph(FunctorSpec::upair(), {"p1", "p2"}, {"u1", "u2", "u3"},
                    {{"p1", up("u1", "u2")}, {"p2", up("u2", "u3")}});
}

GraphPtr loop1() {
  return make_graph(FunctorSpec::upair(), {"l"}, {"w"}, {{"l", up("w", "w")}});
}

/// Oracle: every hom as a raw pair of total maps passing validate_hom.
std::vector<Hom> brute_homs(GraphPtr a, GraphPtr b) {
  std::vector<IdMap> vmaps{IdMap{}}, emaps{IdMap{}};
  for (const auto& v : a->vertices) {
    std::vector<IdMap> next;
    for (const auto& f : vmaps)
      for (const auto& w : b->vertices) {
        IdMap g = f;
        g[v] = w;
        next.push_back(std::move(g));
      }
    vmaps = std::move(next);
  }
  for (const auto& e : a->edges) {
    std::vector<IdMap> next;
    for (const auto& f : emaps)
      for (const auto& d : b->edges) {
        IdMap g = f;
        g[e] = d;
        next.push_back(std::move(g));
      }
    emaps = std::move(next);
  }
  std::vector<Hom> out;
  for (const auto& em : emaps)
    for (const auto& vm : vmaps) {
      Hom phi{a, b, em, vm};
      if (validate_hom(phi).ok) out.push_back(phi);
    }
  return out;
}

/// All partitions of a finite set (Bell enumeration).
std::vector<Partition> all_partitions(const FiniteSet& s) {
  std::vector<std::vector<std::vector<ElementId>>> families{{}};
  for (const auto& x : s) {
    std::vector<std::vector<std::vector<ElementId>>> next;
    for (const auto& blocks : families) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto grown = blocks;
        grown[i].push_back(x);
        next.push_back(std::move(grown));
      }
      auto fresh = blocks;
      fresh.push_back({x});
      next.push_back(std::move(fresh));
    }
    families = std::move(next);
  }
  std::vector<Partition> out;
  for (const auto& blocks : families)
    out.push_back(Partition::from_classes(s, blocks));
  return out;
}

std::vector<EquivPair> all_congruences(const GraphPtr& g) {
  std::vector<EquivPair> out;
  for (const auto& pe : all_partitions(g->edges))
    for (const auto& pv : all_partitions(g->vertices)) {
      EquivPair theta{pe, pv};
      if (is_congruence(*g, theta).ok) out.push_back(std::move(theta));
    }
  return out;
}

}  // namespace

TEST_CASE("the wrap of the 4-cycle onto the triangle is a hom") {
  Hom phi = wrap_hom();
  HomVerdict v = validate_hom(phi);
  CHECK(v.ok);
  // the image misses the triangle's third edge, so phi is not surjective
  CHECK_FALSE(phi.is_surjective());
  CHECK_FALSE(phi.is_injective());
  CHECK(image_of(phi.vertex_map, phi.source->vertices) ==
        phi.target->vertices);

  Hom broken = phi;
  broken.vertex_map["v3"] = "tv1";
  HomVerdict bad = validate_hom(broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_edge == ElementId("e2"));
}

TEST_CASE("kernel of the wrap matches the worked tables") {
  EquivPair theta = kernel(wrap_hom());
  CHECK(theta.edges.classes() ==
        std::vector<std::vector<ElementId>>{{"e1", "e4"}, {"e2", "e3"}});
  CHECK(theta.vertices.classes() ==
        std::vector<std::vector<ElementId>>{{"v1"}, {"v2", "v4"}, {"v3"}});

  std::vector<std::pair<ElementId, ElementId>> edge_pairs{
      {"e1", "e4"}, {"e2", "e3"}, {"e3", "e2"}, {"e4", "e1"}};
  CHECK(theta.edges.nontrivial_pairs() == edge_pairs);
  CHECK(is_congruence(*cycle4(), theta).ok);
}

TEST_CASE("quotient of the 4-cycle by the wrap kernel is its image path") {
  GraphPtr c4 = cycle4();
  EquivPair theta = kernel(wrap_hom());
  QuotientResult q = quotient(c4, theta);
  CHECK(validate_hom(q.projection).ok);
  CHECK(q.graph->edges == FiniteSet{"e1", "e2"});
  CHECK(q.graph->vertices == FiniteSet{"v1", "v2", "v3"});
  CHECK(isomorphic(q.graph, image(wrap_hom()).image.to_graph()));
  CHECK_FALSE(isomorphic(q.graph, triangle()));
  CHECK(kernel(q.projection) == theta);
}

TEST_CASE("non-congruences are refused with the first bad pair") {
  GraphPtr c4 = cycle4();
  EquivPair theta{
      Partition::from_pairs(c4->edges, {{"e1", "e2"}}),
      Partition::discrete(c4->vertices)};
  CongruenceVerdict v = is_congruence(*c4, theta);
  CHECK_FALSE(v.ok);
  CHECK(v.counterexample == std::pair<ElementId, ElementId>("e1", "e2"));
  CHECK_THROWS_AS(quotient(c4, theta), NotACongruence);
}

TEST_CASE("category laws over enumerated homs") {
  GraphPtr p = path2(), t = triangle(), l = loop1();
  auto pt = enumerate_homs(p, t);
  auto tl = enumerate_homs(t, l);
  CHECK(!pt.empty());
  CHECK(!tl.empty());
  for (const auto& f : pt) {
    CHECK(compose(f, identity_hom(p)) == f);
    CHECK(compose(identity_hom(t), f) == f);
    for (const auto& g : tl) {
      Hom gf = compose(g, f);
      CHECK(validate_hom(gf).ok);
      CHECK(compose(identity_hom(l), gf) == compose(g, compose(identity_hom(t), f)));
    }
  }
}

TEST_CASE("hom enumeration agrees with the raw-map oracle") {
  std::vector<std::pair<GraphPtr, GraphPtr>> cases{
      {path2(), triangle()}, {triangle(), triangle()}, {loop1(), path2()},
      {path2(), loop1()},    {cycle4(), triangle()}};
  for (const auto& [a, b] : cases) {
    auto fast = enumerate_homs(a, b);
    auto slow = brute_homs(a, b);
    CHECK(fast.size() == slow.size());
    CHECK(std::is_sorted(fast.begin(), fast.end(), [](const Hom& x, const Hom& y) {
      return std::tie(x.vertex_map, x.edge_map) < std::tie(y.vertex_map, y.edge_map);
    }));
    for (const auto& phi : slow)
      CHECK(std::count_if(fast.begin(), fast.end(),
                          [&](const Hom& psi) { return psi == phi; }) == 1);
  }
}

TEST_CASE("hom count is invariant under carrier relabeling") {
  GraphPtr a = path2();
  GraphPtr b = make_graph(FunctorSpec::upair(), {"zz1", "a2"},
                          {"m1", "m2", "m3"},
                          {{"zz1", up("m1", "m2")}, {"a2", up("m2", "m3")}});
  CHECK(count_homs(a, triangle()) == count_homs(b, triangle()));
  CHECK(count_homs(triangle(), a) == count_homs(triangle(), b));
}

TEST_CASE("search options: pins, injectivity, budget") {
  GraphPtr p = path2(), t = triangle();
  HomSearchOptions pin;
  pin.vertex_pins = {{"u1", "tv1"}};
  for (const auto& phi : enumerate_homs(p, t, pin))
    CHECK(phi.vertex_map.at("u1") == "tv1");

  HomSearchOptions inj;
  inj.vertex_injective = true;
  inj.edge_injective = true;
  for (const auto& phi : enumerate_homs(p, t, inj)) {
    CHECK(phi.is_injective());
  }

  HomSearchOptions tiny;
  tiny.budget = 2;
  CHECK_THROWS_AS(enumerate_homs(cycle4(), t, tiny), BudgetExceeded);
}

TEST_CASE("factorization splits every hom into epi then regular mono") {
  for (const auto& phi : enumerate_homs(path2(), triangle())) {
    Factorization f = factorize(phi);
    CHECK(validate_hom(f.epi).ok);
    CHECK(validate_hom(f.mono).ok);
    CHECK(is_epi(f.epi));
    CHECK(is_regular_mono(f.mono));
    CHECK(compose(f.mono, f.epi) == phi);
  }
}

TEST_CASE("diagonal property: unique fill of an epi-mono square") {
  Hom phi = wrap_hom();
  Factorization f = factorize(phi);
  Hom d = diagonal_fill(f.epi, f.mono, f.epi, f.mono);
  CHECK(validate_hom(d).ok);
  CHECK(compose(d, f.epi) == f.epi);
  CHECK(compose(f.mono, d) == f.mono);

  // uniqueness: d is the only hom commuting on both sides
  std::size_t commuting = 0;
  for (const auto& cand : enumerate_homs(f.mid, f.mid))
    if (compose(cand, f.epi) == f.epi && compose(f.mono, cand) == f.mono)
      ++commuting;
  CHECK(commuting == 1);
}

TEST_CASE("kernel after quotient is the identity on all congruences") {
  for (const auto& g : {path2(), loop1(), cycle4()}) {
    auto congruences = all_congruences(g);
    CHECK(!congruences.empty());
    for (const auto& theta : congruences) {
      QuotientResult q = quotient(g, theta);
      CHECK(validate_hom(q.projection).ok);
      CHECK(is_epi(q.projection));
      CHECK(kernel(q.projection) == theta);
    }
  }
}

TEST_CASE("first isomorphism theorem across enumerated homs") {
  for (const auto& phi : enumerate_homs(cycle4(), triangle())) {
    Hom iso = first_isomorphism(phi);
    CHECK(validate_hom(iso).ok);
    CHECK(is_iso(iso).ok);
    CHECK(*iso.source == *quotient(phi.source, kernel(phi)).graph);
    CHECK(*iso.target == *image(phi).image.to_graph());
  }
}

TEST_CASE("second isomorphism theorem on a nested congruence pair") {
  GraphPtr c4 = cycle4();
  EquivPair fine = kernel(wrap_hom());
  EquivPair coarse{
      Partition::from_classes(c4->edges, {{"e1", "e2", "e3", "e4"}}),
      Partition::from_classes(c4->vertices, {{"v1", "v3"}, {"v2", "v4"}})};
  REQUIRE(is_congruence(*c4, coarse).ok);
  REQUIRE(fine.refines(coarse));

  SecondIsoResult s = second_isomorphism(c4, fine, coarse);
  CHECK(validate_hom(s.chi).ok);
  CHECK(compose(s.chi, quotient(c4, fine).projection) ==
        quotient(c4, coarse).projection);
  CHECK(validate_hom(s.witness_iso).ok);
  CHECK(is_iso(s.witness_iso).ok);
}

TEST_CASE("third isomorphism theorem on a subgraph of the 4-cycle") {
  GraphPtr c4 = cycle4();
  EquivPair theta = kernel(wrap_hom());
  SubgraphHandle u = *subgraph_check(c4, {"e1"}, {"v1", "v2"}).handle;

  ThirdIsoResult t = third_isomorphism(c4, theta, u);
  CHECK(t.saturation.edges == FiniteSet{"e1", "e4"});
  CHECK(t.saturation.vertices == FiniteSet{"v1", "v2", "v4"});
  CHECK(validate_hom(t.witness_iso).ok);
  CHECK(is_iso(t.witness_iso).ok);
}

TEST_CASE("mediation through an epi exists iff kernels nest") {
  GraphPtr c4 = cycle4();
  Hom phi = wrap_hom();
  Hom pi = quotient(c4, kernel(phi)).projection;

  EpiMediation m = mediate_through_epi(pi, phi);
  REQUIRE(m.hom.has_value());
  CHECK(validate_hom(*m.hom).ok);
  CHECK(compose(*m.hom, pi) == phi);

  std::size_t count = 0;
  for (const auto& cand : enumerate_homs(pi.target, phi.target))
    if (compose(cand, pi) == phi) ++count;
  CHECK(count == 1);

  // discrete-kernel hom cannot factor through the coarser projection
  EpiMediation refused = mediate_through_epi(pi, identity_hom(c4));
  CHECK_FALSE(refused.hom.has_value());
  CHECK(refused.violating_pair.has_value());
}

TEST_CASE("mediation through a mono exists iff the image fits") {
  Hom phi = wrap_hom();
  Factorization f = factorize(phi);

  MonoMediation m = mediate_through_mono(f.mono, phi);
  REQUIRE(m.hom.has_value());
  CHECK(compose(f.mono, *m.hom) == phi);

  GraphPtr t = triangle();
  SubgraphHandle small = *subgraph_check(t, {"te1"}, {"tv1", "tv2"}).handle;
  MonoMediation refused = mediate_through_mono(small.inclusion(), phi);
  CHECK_FALSE(refused.hom.has_value());
  CHECK(refused.missing.has_value());
}

TEST_CASE("empty-target mediation is refused unless the source is empty") {
  GraphPtr empty =
      make_graph(FunctorSpec::upair(), {}, {}, {});
  GraphPtr point = make_graph(FunctorSpec::upair(), {}, {"x"}, {});
  Hom collapse;  // point -> point, the identity, an epi
  collapse = identity_hom(point);
  Hom into_empty;
  into_empty.source = point;
  into_empty.target = empty;
  CHECK_FALSE(validate_hom(into_empty).ok);

  Hom empty_id = identity_hom(empty);
  EpiMediation fine = mediate_through_epi(empty_id, empty_id);
  CHECK(fine.hom.has_value());
}

TEST_CASE("subgraph criterion agrees with the support oracle") {
  GraphPtr c4 = cycle4();
  const auto& es = c4->edges.elements();
  const auto& vs = c4->vertices.elements();
  for (std::size_t em = 0; em < (std::size_t{1} << es.size()); ++em)
    for (std::size_t vm = 0; vm < (std::size_t{1} << vs.size()); ++vm) {
      std::vector<ElementId> edge_sub, vertex_sub;
      for (std::size_t i = 0; i < es.size(); ++i)
        if (em & (std::size_t{1} << i)) edge_sub.push_back(es[i]);
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vm & (std::size_t{1} << i)) vertex_sub.push_back(vs[i]);
      FiniteSet fe(edge_sub), fv(vertex_sub);

      bool expected = true;
      for (const auto& e : fe)
        if (!support(c4->spec, c4->value_of(e)).subset_of(fv))
          expected = false;

      SubgraphVerdict v = subgraph_check(c4, fe, fv);
      CHECK(v.handle.has_value() == expected);
      if (v.handle) {
        GraphPtr sub = v.handle->to_graph();
        CHECK(validate_graph(*sub).empty());
        CHECK(validate_hom(v.handle->inclusion()).ok);
      }
    }
}

TEST_CASE("graph validation names the violation") {
  FGraph bad;
  bad.spec = FunctorSpec::upair();
  bad.edges = {"e"};
  bad.vertices = {"v"};
  bad.structure = {{"e", up("v", "zz")}};
  CHECK_FALSE(validate_graph(bad).empty());
  CHECK_THROWS_AS(
      make_graph(FunctorSpec::upair(), {"e"}, {"v"}, {{"e", up("v", "zz")}}),
      MalformedValue);
  CHECK_THROWS_AS(make_graph(FunctorSpec::upair(), {"e"}, {"v"}, {}),
                  MalformedValue);
}

TEST_CASE("partition canonicalization uses least members") {
  FiniteSet s{"a", "b", "c", "d"};
  Partition p = Partition::from_pairs(s, {{"d", "b"}, {"b", "a"}});
  CHECK(p.rep_of("d") == "a");
  CHECK(p.rep_of("c") == "c");
  CHECK(p.same_class("a", "d"));
  CHECK(p.classes() ==
        std::vector<std::vector<ElementId>>{{"a", "b", "d"}, {"c"}});
  CHECK(Partition::join(p, Partition::from_pairs(s, {{"c", "d"}})).is_discrete() == false);
  CHECK(Partition::discrete(s).is_discrete());
}
