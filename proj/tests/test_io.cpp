#include <functional>

#include "doctest.h"
#include "singgraph/io.hpp"
#include "support/graphs.hpp"

using namespace singgraph;

namespace {

const char* kA2 = R"({"vertices":[{"id":"E1","self_intersection":-2,"genus":0,"loops":0},
 {"id":"E2","self_intersection":-2,"genus":0,"loops":0}],"edges":[["E1","E2"]]})";

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("graph JSON parses and re-emits stably") {
  const DualGraph g = parse_graph(kA2);
  CHECK(g.size() == 2);
  CHECK(g.edges().size() == 1);
  const std::string once = emit_graph(g);
  CHECK(emit_graph(parse_graph(once)) == once);
  CHECK(once.find("\"edges\"") < once.find("\"vertices\""));
  CHECK(once.find("\"genus\"") < once.find("\"id\""));
}

TEST_CASE("loops may be written as edges") {
  const DualGraph g = parse_graph(
      R"({"vertices":[{"id":"N","self_intersection":-1,"genus":0,"loops":0}],"edges":[["N","N"]]})");
  CHECK(g.vertex(0).loops == 1);
  const DualGraph h = parse_graph(emit_graph(g));
  CHECK(h.vertex(0).loops == 1);
  CHECK(h.edges().empty());
}

TEST_CASE("multiplicity overrides survive the round trip") {
  const DualGraph g({{"E", -2, 1, 0, 4}}, {});
  const DualGraph h = parse_graph(emit_graph(g));
  CHECK(h.vertex(0).mult_override == 4);
}

TEST_CASE("schema violations are parse errors") {
  CHECK(code_of([] { parse_graph("{"); }) == Errc::Parse);
  CHECK(code_of([] { parse_graph("[]"); }) == Errc::Parse);
  CHECK(code_of([] { parse_graph(R"({"vertices":[]})"); }) == Errc::Parse);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[{"id":"E","self_intersection":-2,"genus":0}]})");
        }) == Errc::Parse);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[{"id":"E","self_intersection":"-2","genus":0,"loops":0}]})");
        }) == Errc::Parse);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[{"id":"E","self_intersection":-2,"genus":0,"loops":0,"x":1}]})");
        }) == Errc::Parse);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[{"id":"E","self_intersection":-2,"genus":0,"loops":0}],"edges":[["E","F"]]})");
        }) == Errc::Parse);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[{"id":"E","self_intersection":-2,"genus":0,"loops":0}],"edges":[["E"]]})");
        }) == Errc::Parse);
}

TEST_CASE("rational vectors are strings") {
  const std::vector<Rat> xs{Rat(1, 2), Rat(-3), Rat(0)};
  const Json j = rationals_to_json(xs);
  CHECK(j.dump() == R"(["1/2","-3","0"])");
  CHECK(rationals_from_json(j) == xs);
  CHECK_THROWS_AS(rationals_from_json(Json::parse("[0.5]")), Error);
}

TEST_CASE("DOT output is sorted and deterministic") {
  const DualGraph g({{"B", -2, 0, 0, {}}, {"A", -3, 0, 1, {}}}, {{0, 1}});
  const auto data = analyze(g);
  const std::string dot = to_dot(g, &data);
  CHECK(dot.find("\"A\" [") < dot.find("\"B\" ["));
  CHECK(dot.find("\"A\" -- \"A\"") != std::string::npos);
  CHECK(dot.find("\"A\" -- \"B\"") != std::string::npos);
  CHECK(dot.find("a=") != std::string::npos);
  CHECK(to_dot(g, &data) == dot);
}

TEST_CASE("blow-up scripts") {
  const DualGraph a2 = parse_graph(kA2);
  auto steps = script_from_json(Json::parse(R"([{"op":"satellite","at":["E1","E2"]}])"));
  auto run = apply_script(a2, steps);
  CHECK(run.consistent);
  CHECK(run.graph.size() == 3);
  CHECK(run.graph.vertex(2).self_intersection == -1);

  run = apply_script(a2, script_from_json(Json::parse("[]")));
  CHECK(emit_graph(run.graph) == emit_graph(a2));

  steps = script_from_json(
      Json::parse(R"([{"op":"free","at":"E1"},{"op":"satellite","at":["E1","F1"]}])"));
  run = apply_script(a2, steps);
  CHECK(run.consistent);
  CHECK(run.reports.size() == 2);

  try {
    apply_script(a2, script_from_json(Json::parse(R"([{"op":"free","at":"X"}])")));
    FAIL("expected an error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 0);
    CHECK(e.code() == Errc::NoSuchVertex);
  }
  try {
    apply_script(a2, script_from_json(Json::parse(
                         R"([{"op":"free","at":"E1"},{"op":"satellite","at":["E2","F1"]}])")));
    FAIL("expected an error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 1);
    CHECK(e.code() == Errc::NoSuchEdge);
  }
  try {
    script_from_json(Json::parse(R"([{"op":"twist","at":"E1"}])"));
    FAIL("expected an error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 0);
  }
  CHECK(code_of([] { script_from_json(Json::parse("{}")); }) == Errc::Parse);
}

TEST_CASE("node blow-up through a script") {
  const DualGraph nodal = testgen::single(-1, 0, 1);
  const auto run = apply_script(nodal, script_from_json(Json::parse(R"([{"op":"satellite","at":["E","E"]}])")));
  CHECK(run.consistent);
  CHECK(run.graph.vertex(0).loops == 0);
}

TEST_CASE("cusp data JSON") {
  const auto c = klein_polygon(QuadLattice::sqrt_order(2));
  const Json j = cusp_to_json(c);
  CHECK(j["epsilon"] == "3+2w");
  CHECK(j["period"] == 2);
  CHECK(j["cycle"] == Json::array({4, 2}));
  CHECK(j["extremal"][0] == "1");
  CHECK(j["w"] == "sqrt(2)");
}
