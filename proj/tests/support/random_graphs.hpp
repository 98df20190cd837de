#pragma once

// Seeded generators of connected negative definite dual graphs.

#include <random>
#include <string>
#include <vector>

#include "singgraph/graph.hpp"
#include "oracles.hpp"

namespace testgen {

struct GraphShape {
  int max_vertices = 6;
  double extra_edge = 0.0;  // chance of a cycle-closing edge per vertex
  double loop = 0.0;        // chance of a loop per vertex
  double genus = 0.0;       // chance of genus 1 or 2 per vertex
  int max_self = 5;         // self-intersections drawn from [-max_self, -1]
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

/// Rejection sampling; after many misses falls back to diagonally dominant
/// self-intersections, which are always negative definite.
inline singgraph::DualGraph random_graph(std::mt19937_64& rng, const GraphShape& s) {
  const int n = uniform(rng, 1, s.max_vertices);
  std::vector<singgraph::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({static_cast<std::size_t>(uniform(rng, 0, i - 1)), static_cast<std::size_t>(i)});
  for (int i = 0; i < n && n >= 2; ++i)
    if (chance(rng, s.extra_edge)) {
      const int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
      if (a != b) edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    }
  std::vector<singgraph::Vertex> base;
  for (int i = 0; i < n; ++i) {
    singgraph::Vertex v;
    v.id = "E" + std::to_string(i + 1);
    v.loops = chance(rng, s.loop) ? 1 : 0;
    v.genus = chance(rng, s.genus) ? uniform(rng, 1, 2) : 0;
    base.push_back(v);
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto vs = base;
    for (auto& v : vs) v.self_intersection = -uniform(rng, 1, s.max_self);
    singgraph::DualGraph g(vs, edges);
    if (oracle::negative_definite(g)) return g;
  }
  singgraph::DualGraph probe(base, edges);
  auto vs = base;
  for (std::size_t i = 0; i < vs.size(); ++i)
    vs[i].self_intersection = -(probe.valence(i) - 2 * vs[i].loops) - uniform(rng, 1, 2);
  return singgraph::DualGraph(vs, edges);
}

inline singgraph::DualGraph random_graph_with_edge(std::mt19937_64& rng, GraphShape s) {
  s.max_vertices = std::max(s.max_vertices, 2);
  while (true) {
    auto g = random_graph(rng, s);
    if (!g.edges().empty()) return g;
  }
}

/// Cycle of rational curves -c_k, c_k in [2, 6] with at least one c_k >= 3.
inline std::vector<std::int64_t> random_cusp_cycle(std::mt19937_64& rng, int max_len) {
  const int l = uniform(rng, 1, max_len);
  std::vector<std::int64_t> c(static_cast<std::size_t>(l));
  for (auto& x : c) x = uniform(rng, 2, 6);
  c[static_cast<std::size_t>(uniform(rng, 0, l - 1))] = uniform(rng, 3, 6);
  return c;
}

}  // namespace testgen
