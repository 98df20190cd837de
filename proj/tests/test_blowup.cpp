#include <random>

#include "doctest.h"
#include "singgraph/blowup.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace singgraph;

TEST_CASE("free blow-up of A1") {
  const auto r = blow_up_free(testgen::a_n(1), 0);
  CHECK(r.graph.size() == 2);
  CHECK(r.graph.vertex(0).self_intersection == -3);
  CHECK(r.graph.vertex(1).self_intersection == -1);
  CHECK(r.graph.vertex(1).id == "F1");
  CHECK(r.report.transported_a == std::vector<Rat>{0, 1});
  CHECK(r.report.transported_A == std::vector<Rat>{1, 2});
  CHECK(r.report.consistent());
  CHECK(oracle::discrepancies(r.graph) == r.report.transported_a);
}

TEST_CASE("satellite blow-up of A2 gives (-3, -1, -3)") {
  const auto r = blow_up_satellite(testgen::a_n(2), 0);
  const auto& g = r.graph;
  CHECK(g.vertex(0).self_intersection == -3);
  CHECK(g.vertex(1).self_intersection == -3);
  CHECK(g.vertex(2).self_intersection == -1);
  CHECK(g.valence(2) == 2);
  CHECK(r.report.transported_a[2] == 1);
  CHECK(r.report.transported_b[2] == 2);
  CHECK(r.report.new_vertex_parameter == Rat(1, 2));
  CHECK(r.report.parent_length == r.report.subdivided_length);
  CHECK(r.report.consistent());
  for (const auto& line : r.report.diff(g)) CHECK(line.rfind("note:", 0) == 0);
}

TEST_CASE("node blow-up of a nodal cubic cusp") {
  const auto r = blow_up_node(testgen::single(-1, 0, 1), 0);
  CHECK(r.graph.vertex(0).loops == 0);
  CHECK(r.graph.vertex(0).self_intersection == -5);
  CHECK(r.graph.edges().size() == 2);
  CHECK(r.report.transported_a == std::vector<Rat>{-1, -1});
  CHECK(r.report.consistent());
  CHECK_THROWS_AS(blow_up_node(testgen::a_n(1), 0), Error);
}

TEST_CASE("bad indices are reported") {
  try {
    blow_up_satellite(testgen::a_n(1), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSuchEdge);
  }
  CHECK_THROWS_AS(blow_up_free(testgen::a_n(1), 4), Error);
}

TEST_CASE("transport matches recomputation on random blow-ups") {
  std::mt19937_64 rng(17);
  testgen::GraphShape shape{5, 0.2, 0.15, 0.15, 4};
  for (int trial = 0; trial < 60; ++trial) {
    DualGraph g = testgen::random_graph(rng, shape);
    for (int step = 0; step < 4; ++step) {
      BlowupResult r;
      const int pick = testgen::uniform(rng, 0, 9);
      const auto loops_at = [&]() -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < g.size(); ++i)
          if (g.vertex(i).loops > 0) return i;
        return std::nullopt;
      }();
      if (pick == 0 && loops_at) {
        r = blow_up_node(g, *loops_at);
      } else if (pick < 5 && !g.edges().empty()) {
        r = blow_up_satellite(
            g, static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(g.edges().size()) - 1)));
      } else {
        r = blow_up_free(g, static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(g.size()) - 1)));
      }
      CHECK(r.report.consistent());
      CHECK(oracle::discrepancies(r.graph) == r.report.transported_a);
      CHECK(generic_multiplicities(r.graph) == r.report.transported_b);
      g = r.graph;
    }
  }
}

TEST_CASE("divisorialize places a vertex at the requested parameter") {
  const auto g = testgen::chain({-2, -3});
  const auto b = generic_multiplicities(g);
  const auto& e = g.edge(0);
  for (int q = 2; q <= 9; ++q)
    for (int p = 1; p < q; ++p) {
      const Rat t(p, q);
      const auto sub = divisorialize(g, 0, t);
      // the vertex with coprime weights (m, n) sits at m b_u / (m b_u + n b_v)
      const Rat target = t * b[e.v] / ((1 - t) * b[e.u]);
      const Int m = boost::multiprecision::numerator(target);
      const Int n = boost::multiprecision::denominator(target);
      const auto bb = generic_multiplicities(sub.graph);
      CHECK(Int(bb[sub.vertex]) == m * b[e.u] + n * b[e.v]);
      const auto it = std::find(sub.chain.begin(), sub.chain.end(), sub.vertex);
      REQUIRE(it != sub.chain.end());
      CHECK(sub.params[static_cast<std::size_t>(it - sub.chain.begin())] == t);
      // the subdivided chain has the length of the original edge
      Rat total = 0;
      for (std::size_t k = 0; k + 1 < sub.chain.size(); ++k)
        total += Rat(1) / (Rat(bb[sub.chain[k]]) * bb[sub.chain[k + 1]]);
      CHECK(total == Rat(1) / (Rat(b[e.u]) * b[e.v]));
    }
  CHECK(divisorialize(g, 0, Rat(1)).vertex == e.u);
  CHECK(divisorialize(g, 0, Rat(0)).vertex == e.v);
  CHECK_THROWS_AS(divisorialize(g, 0, Rat(2)), Error);
}

TEST_CASE("fresh ids skip used names") {
  const DualGraph g({{"F1", -2, 0, 0, {}}, {"F3", -2, 0, 0, {}}}, {{0, 1}});
  CHECK(fresh_vertex_id(g) == "F2");
}
