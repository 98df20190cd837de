#pragma once

// Point blow-ups on dual graphs with transport of every invariant.
//
// Transport rules (E the blown-up curve, F the new one):
//   free point of E:        b_F = b_E,         a_F = a_E + 1,
//                           A_F = A_E + 1 / b_E
//   double point E0 . E1:   b_F = b0 + b1,     a_F = a0 + a1 + 1,
//                           A_F = (b0 A0 + b1 A1) / (b0 + b1),
//                           F sits at t = b1 / (b0 + b1) of the old edge
//   node of a nodal E:      b_F = 2 b_E,       a_F = 2 a_E + 1,   A_F = A_E
// Old vertices keep a, b and A. Each report also carries values recomputed
// from scratch on the new graph so the two can be diffed.

#include <cstddef>
#include <string>
#include <vector>

#include "singgraph/graph.hpp"

namespace singgraph {

struct TransportReport {
  std::vector<Rat> transported_a;
  std::vector<Rat> recomputed_a;
  std::vector<std::int64_t> transported_b;
  /// Fundamental-cycle coefficients of the new graph; may legitimately differ
  /// from the transported b on non-rational singularities.
  std::vector<std::int64_t> fundamental_cycle_b;
  std::vector<Rat> transported_A;
  /// (1 + recomputed a) / transported b.
  std::vector<Rat> recomputed_A;

  /// Length of the blown-up edge before, and total length of its two halves
  /// after (satellite and node blow-ups). Equal to each other when the
  /// subdivision is isometric.
  Rat parent_length;
  Rat subdivided_length;
  /// Parameter of F on the old edge (satellite only).
  Rat new_vertex_parameter;
  /// Old edges keep their lengths.
  bool old_lengths_preserved = true;

  bool metric_consistent() const {
    return old_lengths_preserved && parent_length == subdivided_length;
  }
  /// Transported a, A and metric agree with the fresh computation.
  bool consistent() const;
  /// Human-readable mismatches of a, A and metric (b mismatches are listed
  /// with a "note:" prefix and do not count as inconsistencies).
  std::vector<std::string> diff(const DualGraph& g) const;
};

struct BlowupResult {
  DualGraph graph;
  std::size_t new_vertex = 0;
  TransportReport report;
};

BlowupResult blow_up_free(const DualGraph& g, std::size_t vertex);

/// Edge k = (u, v) becomes (u, F) at index k and (F, v) appended at the end.
BlowupResult blow_up_satellite(const DualGraph& g, std::size_t edge);

/// Blows up the node of a vertex with loops > 0: E^2 drops by 4, one loop is
/// resolved, and F meets E twice.
BlowupResult blow_up_node(const DualGraph& g, std::size_t vertex);

/// Satellite blow-ups on one edge until a vertex sits at parameter t.
struct Subdivision {
  DualGraph graph;
  std::size_t vertex = 0;
  /// Vertices along the original edge, from t = 0 (old v) to t = 1 (old u),
  /// their parameters on the original edge, and the edge joining consecutive
  /// ones (oriented towards the t = 1 end).
  std::vector<std::size_t> chain;
  std::vector<Rat> params;
  std::vector<std::size_t> chain_edges;
  std::size_t blowups = 0;
};

Subdivision divisorialize(const DualGraph& g, std::size_t edge, const Rat& t);

/// Attaches mult_override = b to every vertex when b differs from the
/// fundamental cycle of g or when keep_full is set; otherwise returns g.
DualGraph with_multiplicities(const DualGraph& g, const std::vector<std::int64_t>& b,
                              bool keep_full);

/// A fresh id of the form F<k> not used in g.
std::string fresh_vertex_id(const DualGraph& g);

}  // namespace singgraph
