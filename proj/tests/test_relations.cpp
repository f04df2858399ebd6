#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fgraph/hom_search.hpp"
#include "fgraph/relations.hpp"

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

Hom wrap_hom() {
  Hom phi;
  phi.source = cycle4();
  phi.target = triangle();
  phi.edge_map = {{"e1", "te1"}, {"e2", "te2"}, {"e3", "te2"}, {"e4", "te1"}};
  phi.vertex_map = {
      {"v1", "tv1"}, {"v2", "tv2"}, {"v3", "tv3"}, {"v4", "tv2"}};
  return phi;
}

GraphPtr single_edge(const ElementId& e, const ElementId& v,
                     const ElementId& w) {
  return make_graph(FunctorSpec::upair(), {e}, {v, w}, {{e, up(v, w)}});
}

GraphPtr loop1() {
  return make_graph(FunctorSpec::upair(), {"l"}, {"w"}, {{"l", up("w", "w")}});
}

std::vector<std::pair<ElementId, ElementId>> all_pairs(const FiniteSet& a,
                                                       const FiniteSet& b) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (const auto& x : a)
    for (const auto& y : b) out.emplace_back(x, y);
  return out;
}

}  // namespace

TEST_CASE("the graph of the wrap hom matches the worked figure") {
  GraphRelation r = graph_of_hom(wrap_hom());
  CHECK(validate_hom(r.left_projection).ok);
  CHECK(validate_hom(r.right_projection).ok);
  CHECK(r.pair.edge_pairs.size() == 4);
  CHECK(r.graph->vertices ==
        FiniteSet{"(v1,tv1)", "(v2,tv2)", "(v3,tv3)", "(v4,tv2)"});
  CHECK(r.graph->edges ==
        FiniteSet{"(e1,te1)", "(e2,te2)", "(e3,te2)", "(e4,te1)"});
}

TEST_CASE("the kernel relation of the wrap hom matches the worked figure") {
  KernelRelationResult k = kernel_relation(wrap_hom());
  const GraphRelation& r = k.relation;
  CHECK(r.graph->edges.size() == 8);
  CHECK(r.graph->vertices.size() == 6);
  CHECK(r.graph->vertices == FiniteSet{"(v1,v1)", "(v2,v2)", "(v2,v4)",
                                       "(v3,v3)", "(v4,v2)", "(v4,v4)"});
  CHECK(r.graph->edges ==
        FiniteSet{"(e1,e1)", "(e1,e4)", "(e2,e2)", "(e2,e3)", "(e3,e2)",
                  "(e3,e3)", "(e4,e1)", "(e4,e4)"});

  CHECK(validate_hom(k.diagonal_section).ok);
  CHECK(compose(r.left_projection, k.diagonal_section) ==
        identity_hom(wrap_hom().source));
}

TEST_CASE("kernel relations require weak kernel preservation") {
  FunctorSpec spec = FunctorSpec::ktuple(3, 2);
  Value t = Value::tuple({Value::atom("v"), Value::atom("v"), Value::atom("v")});
  GraphPtr g = make_graph(spec, {"e"}, {"v"}, {{"e", t}});
  CHECK_THROWS_AS(kernel_relation(identity_hom(g)), UnsupportedFunctor);
}

TEST_CASE("diagonals and hom graphs are graph relations") {
  for (const auto& g : {cycle4(), triangle(), loop1()}) {
    RelationPair d = RelationPair::diagonal(g);
    RelationVerdict v = is_graph_relation(d);
    CHECK(v.relation.has_value());
  }
  GraphRelation r = graph_of_hom(wrap_hom());
  RelationVerdict v = is_graph_relation(r.pair);
  CHECK(v.relation.has_value());
}

TEST_CASE("relations are closed under union") {
  GraphPtr a = cycle4(), b = triangle();
  auto homs = enumerate_homs(a, b);
  REQUIRE(homs.size() >= 2);
  GraphRelation r1 = graph_of_hom(homs[0]);
  GraphRelation r2 = graph_of_hom(homs[homs.size() - 1]);

  RelationPair u;
  u.left = a;
  u.right = b;
  u.edge_pairs = r1.pair.edge_pairs;
  u.edge_pairs.insert(u.edge_pairs.end(), r2.pair.edge_pairs.begin(),
                      r2.pair.edge_pairs.end());
  u.vertex_pairs = r1.pair.vertex_pairs;
  u.vertex_pairs.insert(u.vertex_pairs.end(), r2.pair.vertex_pairs.begin(),
                        r2.pair.vertex_pairs.end());
  u.normalize();
  CHECK(is_graph_relation(u).relation.has_value());
}

TEST_CASE("largest relation within bounds: monotone, idempotent, dominant") {
  GraphPtr a = single_edge("e", "v", "w"), b = triangle();

  RelationPair full = RelationPair::full(a, b);
  GraphRelation best = largest_graph_relation_within(full);
  CHECK(best.pair.edge_pairs.size() == a->edges.size() * b->edges.size());

  RelationPair half = full;
  half.edge_pairs.resize(2);
  GraphRelation bounded = largest_graph_relation_within(half);
  CHECK(std::includes(best.pair.edge_pairs.begin(), best.pair.edge_pairs.end(),
                      bounded.pair.edge_pairs.begin(),
                      bounded.pair.edge_pairs.end()));

  GraphRelation again = largest_graph_relation_within(bounded.pair);
  CHECK(again.pair.edge_pairs == bounded.pair.edge_pairs);
  CHECK(again.pair.vertex_pairs == bounded.pair.vertex_pairs);

  for (const auto& phi : enumerate_homs(a, b)) {
    GraphRelation gr = graph_of_hom(phi);
    GraphRelation big = largest_graph_relation(a, b);
    CHECK(std::includes(big.pair.edge_pairs.begin(), big.pair.edge_pairs.end(),
                        gr.pair.edge_pairs.begin(), gr.pair.edge_pairs.end()));
    CHECK(std::includes(big.pair.vertex_pairs.begin(),
                        big.pair.vertex_pairs.end(),
                        gr.pair.vertex_pairs.begin(),
                        gr.pair.vertex_pairs.end()));
  }
}

TEST_CASE("largest relation equals the union of all witnessed subrelations") {
  GraphPtr a = single_edge("e", "v", "w");
  GraphPtr b = loop1();
  auto edge_univ = all_pairs(a->edges, b->edges);
  auto vertex_univ = all_pairs(a->vertices, b->vertices);

  RelationPair accumulated;
  accumulated.left = a;
  accumulated.right = b;
  for (std::size_t em = 0; em < (std::size_t{1} << edge_univ.size()); ++em)
    for (std::size_t vm = 0; vm < (std::size_t{1} << vertex_univ.size());
         ++vm) {
      RelationPair cand;
      cand.left = a;
      cand.right = b;
      for (std::size_t i = 0; i < edge_univ.size(); ++i)
        if (em & (std::size_t{1} << i)) cand.edge_pairs.push_back(edge_univ[i]);
      for (std::size_t i = 0; i < vertex_univ.size(); ++i)
        if (vm & (std::size_t{1} << i))
          cand.vertex_pairs.push_back(vertex_univ[i]);
      cand.normalize();
      if (!is_graph_relation(cand).relation.has_value()) continue;
      accumulated.edge_pairs.insert(accumulated.edge_pairs.end(),
                                    cand.edge_pairs.begin(),
                                    cand.edge_pairs.end());
      accumulated.vertex_pairs.insert(accumulated.vertex_pairs.end(),
                                      cand.vertex_pairs.begin(),
                                      cand.vertex_pairs.end());
    }
  accumulated.normalize();

  GraphRelation big = largest_graph_relation(a, b);
  CHECK(big.pair.edge_pairs == accumulated.edge_pairs);
  CHECK(big.pair.vertex_pairs == accumulated.vertex_pairs);
}

TEST_CASE("undirected edges are always related; the tuple pair is not") {
  RelatednessResult yes =
      edges_related(single_edge("e", "v", "w"), "e", loop1(), "l");
  CHECK(yes.related);
  REQUIRE(yes.span.has_value());
  CHECK(validate_hom(*yes.to_left).ok);
  CHECK(validate_hom(*yes.to_right).ok);
  CHECK(yes.to_left->edge_map.size() == 1);

  FunctorSpec spec = FunctorSpec::ktuple(3, 2);
  GraphPtr g1 = make_graph(
      spec, {"e"}, {"v1", "v2"},
      {{"e", Value::tuple({Value::atom("v1"), Value::atom("v1"),
                           Value::atom("v2")})}});
  GraphPtr g2 = make_graph(
      spec, {"f"}, {"w1", "w2"},
      {{"f", Value::tuple({Value::atom("w1"), Value::atom("w2"),
                           Value::atom("w2")})}});
  RelatednessResult no = edges_related(g1, "e", g2, "f");
  CHECK_FALSE(no.related);
  CHECK_FALSE(no.span.has_value());

  RelatednessResult same = edges_related(g1, "e", g1, "e");
  CHECK(same.related);
}

TEST_CASE("monicity through relations matches left-cancellability") {
  GraphPtr small = single_edge("s", "s1", "s2");
  GraphPtr probes[] = {small, loop1(),
                       make_graph(FunctorSpec::upair(), {}, {"q"}, {})};
  for (const auto& phi : enumerate_homs(small, triangle())) {
    bool cancellable = true;
    for (const auto& p : probes) {
      auto into = enumerate_homs(p, small);
      for (std::size_t i = 0; i < into.size() && cancellable; ++i)
        for (std::size_t j = i + 1; j < into.size() && cancellable; ++j)
          if (compose(phi, into[i]) == compose(phi, into[j]))
            cancellable = false;
    }
    CHECK(is_mono(phi) == cancellable);
  }
}

TEST_CASE("quotient projections are regular epis") {
  Hom phi = wrap_hom();
  GraphPtr c4 = cycle4();
  QuotientResult q = quotient(c4, kernel(phi));
  CHECK(is_regular_epi(q.projection));
  CHECK(is_regular_epi(identity_hom(c4)));
}
