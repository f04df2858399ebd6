#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <vector>

#include "fgraph/json_io.hpp"

using namespace fgraph;

namespace {

Value up(const ElementId& a, const ElementId& b) {
  return Value::set_of({Value::atom(a), Value::atom(b)});
}

GraphPtr sample_graph() {
  return make_graph(FunctorSpec::upair(), {"e1", "e2"}, {"v1", "v2", "v3"},
                    {{"e1", up("v1", "v2")}, {"e2", up("v2", "v3")}});
}

std::vector<FunctorSpec> spec_zoo() {
  return {
      FunctorSpec::identity(),
      FunctorSpec::upair(),
      FunctorSpec::dpair(),
      FunctorSpec::powerset(),
      FunctorSpec::directed_hyper(),
      FunctorSpec::ktuple(3, 2),
      FunctorSpec::colored({"r", "g"}, {"s"}, FunctorSpec::dpair()),
      FunctorSpec::sum({FunctorSpec::upair(),
                        FunctorSpec::colored({"c"}, {"d"},
                                             FunctorSpec::powerset())}),
  };
}

std::vector<Value> value_zoo() {
  return {
      Value::atom("v1"),
      Value::tuple({Value::atom("a"), Value::atom("b")}),
      Value::set_of({Value::atom("b"), Value::atom("a"), Value::atom("b")}),
      Value::set_of({}),
      Value::tagged(1, Value::atom("x")),
      Value::colored("red", Value::set_of({Value::colored(
                                "s", Value::atom("v"))})),
      Value::tuple({Value::atom("h"),
                    Value::set_of({Value::atom("m1"), Value::atom("m2")})}),
  };
}

}  // namespace

TEST_CASE("functor specs survive the round trip byte for byte") {
  for (const auto& spec : spec_zoo()) {
    Json j = functor_to_json(spec);
    FunctorSpec back = functor_from_json(j);
    CHECK(back == spec);
    CHECK(functor_to_json(back).dump() == j.dump());
    CHECK(functor_from_json(Json::parse(j.dump())) == spec);
  }
}

TEST_CASE("values survive the round trip in every shape") {
  for (const auto& v : value_zoo()) {
    Json j = value_to_json(v);
    Value back = value_from_json(j);
    CHECK(back == v);
    CHECK(value_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("set values parse into canonical form") {
  Json j = {{"set", {"b", "a", "b"}}};
  Value v = value_from_json(j);
  CHECK(v == up("a", "b"));
  CHECK(value_to_json(v).dump() == R"({"set":["a","b"]})");
}

TEST_CASE("graphs round-trip and reject malformed payloads") {
  GraphPtr g = sample_graph();
  Json j = graph_to_json(*g);
  GraphPtr back = graph_from_json(j);
  CHECK(*back == *g);
  CHECK(graph_to_json(*back).dump() == j.dump());

  Json dup = j;
  dup["edges"].push_back(dup["edges"][0]);
  CHECK_THROWS_AS(graph_from_json(dup), MalformedValue);

  Json alien = j;
  alien["edges"][0]["value"] = {{"set", {"v1", "zz"}}};
  CHECK_THROWS_AS(graph_from_json(alien), MalformedValue);

  CHECK_THROWS_AS(graph_from_json(Json::array()), MalformedValue);
  CHECK_THROWS_AS(graph_from_json(Json{{"vertices", {"v"}}}), MalformedValue);
}

TEST_CASE("homs round-trip against their endpoint graphs") {
  GraphPtr g = sample_graph();
  GraphPtr loop = make_graph(FunctorSpec::upair(), {"l"}, {"w"},
                             {{"l", up("w", "w")}});
  Hom phi{g, loop,
          {{"e1", "l"}, {"e2", "l"}},
          {{"v1", "w"}, {"v2", "w"}, {"v3", "w"}}};
  REQUIRE(validate_hom(phi).ok);

  Json j = hom_maps_to_json(phi);
  Hom back = hom_from_json(j, g, loop);
  CHECK(back == phi);
  CHECK(hom_maps_to_json(back).dump() == j.dump());

  // parsing builds the struct; semantic checks stay with validate_hom
  Json bad = j;
  bad["edge_map"]["e1"] = "nope";
  CHECK_FALSE(validate_hom(hom_from_json(bad, g, loop)).ok);
  CHECK_THROWS_AS(hom_from_json(Json{{"edge_map", Json::object()}}, g, loop),
                  MalformedValue);
  Json nonstring = j;
  nonstring["vertex_map"]["v1"] = 7;
  CHECK_THROWS_AS(hom_from_json(nonstring, g, loop), MalformedValue);
}

TEST_CASE("relations round-trip with normalization") {
  GraphPtr g = sample_graph();
  Json j = Json::parse(
      R"({"edge_pairs":[["e2","e1"],["e1","e1"],["e2","e1"]],
          "vertex_pairs":[["v1","v1"],["v1","v2"]]})");
  RelationPair r = relation_from_json(j, g, g);
  CHECK(r.edge_pairs ==
        std::vector<std::pair<ElementId, ElementId>>{{"e1", "e1"},
                                                     {"e2", "e1"}});
  Json out = relation_to_json(r);
  CHECK(relation_to_json(relation_from_json(out, g, g)).dump() == out.dump());

  // structural errors only; id membership is is_graph_relation's concern
  Json bad = Json::parse(R"({"edge_pairs":[["e1"]],"vertex_pairs":[]})");
  CHECK_THROWS_AS(relation_from_json(bad, g, g), MalformedValue);
  bad = Json::parse(R"({"edge_pairs":[["e1",3]],"vertex_pairs":[]})");
  CHECK_THROWS_AS(relation_from_json(bad, g, g), MalformedValue);
  bad = Json::parse(R"({"edge_pairs":{}})");
  CHECK_THROWS_AS(relation_from_json(bad, g, g), MalformedValue);
}

TEST_CASE("graph relations carry their witness values") {
  GraphPtr loop = make_graph(FunctorSpec::upair(), {"l"}, {"w"},
                             {{"l", up("w", "w")}});
  GraphRelation rel = largest_graph_relation(loop, loop);
  Json j = graph_relation_to_json(rel);
  CHECK(j.contains("witness"));
  CHECK(j["witness"].contains("l|l"));
  CHECK(value_from_json(j["witness"]["l|l"]) ==
        rel.witness.at({"l", "l"}));
}

TEST_CASE("color sets, colorings, and patterns round-trip") {
  ColorSet x{{"a", "b"}, {"s", "t"}};
  CHECK(colorset_from_json(colorset_to_json(x)) == x);
  CHECK(colorset_to_json(x).dump() ==
        R"({"edge_colors":["a","b"],"vertex_colors":["s","t"]})");

  Coloring c{{{"e1", "a"}}, {{"v1", "t"}}};
  CHECK(coloring_from_json(coloring_to_json(c)) == c);

  Pattern p{x, {"(a|{s})"}, {"s"}};
  CHECK(pattern_from_json(pattern_to_json(p)) == p);
  CHECK(pattern_to_json(p)["colors"].dump() == colorset_to_json(x).dump());
}

TEST_CASE("id maps round-trip and serializations stay byte-stable") {
  IdMap f{{"b", "2"}, {"a", "1"}};
  Json j = idmap_to_json(f);
  CHECK(j.dump() == R"({"a":"1","b":"2"})");
  CHECK(idmap_from_json(j) == f);

  GraphPtr g = sample_graph();
  std::string once = graph_to_json(*g).dump();
  std::string twice = graph_to_json(*graph_from_json(Json::parse(once)))
                          .dump();
  CHECK(once == twice);
}

TEST_CASE("closure reports serialize mode, probes, and verdicts") {
  GraphPtr loop = make_graph(FunctorSpec::upair(), {"l"}, {"w"},
                             {{"l", up("w", "w")}});
  GraphPtr edge = make_graph(FunctorSpec::upair(), {"e"}, {"v1", "v2"},
                             {{"e", up("v1", "v2")}});
  ClosureAuditReport report =
      closure_audit({loop}, {loop, edge}, ColorSet{{"a"}, {"x", "y"}},
                    ClosureMode::Covariety);
  Json j = closure_report_to_json(report);
  CHECK(j["mode"] == "covariety");
  CHECK(j["all_agree"] == true);
  REQUIRE(j["probes"].size() == 2);
  CHECK(j["probes"][0]["closure_member"] == true);
  CHECK(j["probes"][1]["closure_member"] == false);
  CHECK_FALSE(j["probes"][0].contains("boundedness_warnings"));

  CHECK(closure_mode_name(ClosureMode::Quasi) == "quasi");
  CHECK(closure_mode_from_name("complete") == ClosureMode::Complete);
  CHECK_FALSE(closure_mode_from_name("bogus").has_value());
}

TEST_CASE("file reading reports the failing path") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), MalformedValue);

  std::string path = "test_json_tmp.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(path), MalformedValue);
  {
    std::ofstream out(path);
    out << R"({"k":1})";
  }
  CHECK(read_json_file(path)["k"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("functor parsing rejects bad shapes") {
  CHECK_THROWS_AS(functor_from_json(Json{{"kind", "mystery"}}),
                  MalformedValue);
  CHECK_THROWS_AS(functor_from_json(Json{{"kind", "ktuple"}, {"k", 0}}),
                  MalformedValue);
  CHECK_THROWS_AS(
      functor_from_json(Json{{"kind", "ktuple"}, {"k", 2}, {"min_equal", 5}}),
      MalformedValue);
  CHECK_THROWS_AS(functor_from_json(Json{{"kind", "sum"},
                                         {"parts", Json::array()}}),
                  MalformedValue);
  CHECK_THROWS_AS(functor_from_json(Json{{"kind", "colored"}}),
                  MalformedValue);
  CHECK_THROWS_AS(value_from_json(Json{{"bogus", 1}}), MalformedValue);
  CHECK_THROWS_AS(value_from_json(Json(3)), MalformedValue);
}
