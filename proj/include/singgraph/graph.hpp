#pragma once

// Weighted dual graphs of good resolutions and their intersection theory:
// discrepancies, generic multiplicities, thinness and the klt/lc verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singgraph/arith.hpp"
#include "singgraph/linalg.hpp"

namespace singgraph {

struct Vertex {
  std::string id;
  int self_intersection = -2;
  int genus = 0;
  int loops = 0;
  std::optional<std::int64_t> mult_override;
};

/// An edge between two distinct vertices, by index. The stored orientation
/// matters for edge parameters: t = 1 is `u`, t = 0 is `v`.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
};

/// Immutable after construction. Loops live in Vertex::loops, never in the
/// edge list; parallel edges are allowed.
class DualGraph {
 public:
  DualGraph() = default;

  /// Validates ids, genera, loop counts and overrides. An edge with u == v is
  /// folded into the loop count of that vertex.
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws NoSuchVertex

  /// First edge joining a and b in either orientation.
  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;

  /// Number of edge ends at i; each loop counts twice.
  int valence(std::size_t i) const;

  /// genus + loops.
  int arithmetic_genus(std::size_t i) const {
    return vertices_[i].genus + vertices_[i].loops;
  }

  /// First Betti number of the graph including loops (connected input).
  std::int64_t cycle_rank() const;

  bool has_full_override() const;
  bool connected() const;

  /// M_ii = self-intersection, M_ij = number of edges between i and j.
  Mat<Rat> intersection_matrix() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct NegativeDefiniteReport {
  bool negative_definite = false;
  /// 1-based size of the first leading principal minor of -M that is not
  /// positive; 0 when all are positive.
  std::size_t failing_minor = 0;
  Rat failing_value;
};

NegativeDefiniteReport negative_definite_report(const DualGraph& g);
inline bool check_negative_definite(const DualGraph& g) {
  return negative_definite_report(g).negative_definite;
}

/// Throws Disconnected / NotNegativeDefinite. Every invariant below requires
/// this precondition.
void require_resolution_graph(const DualGraph& g);

/// ord_E(K_mu) from adjunction: sum_j a_j M_ij = 2 p_a(E_i) - 2 - M_ii.
std::vector<Rat> discrepancies(const DualGraph& g);

/// Coefficients of the fundamental cycle (Laufer's loop), ignoring overrides.
std::vector<std::int64_t> fundamental_cycle(const DualGraph& g);

/// Overrides when every vertex carries one, otherwise the fundamental cycle.
std::vector<std::int64_t> generic_multiplicities(const DualGraph& g);

/// A_E = (1 + a_E) / b_E.
std::vector<Rat> thinness_at_vertices(const DualGraph& g);

/// Solves M z = e_vertex; every entry is strictly negative.
std::vector<Rat> dual_divisor(const DualGraph& g, std::size_t vertex);

/// All per-vertex invariants at once. `dual` has Z_E as its E-th column.
struct ExceptionalData {
  std::vector<Rat> discrepancy;
  std::vector<std::int64_t> multiplicity;
  std::vector<Rat> thinness;
  Mat<Rat> dual;
};

ExceptionalData analyze(const DualGraph& g);

enum class Verdict {
  Klt,
  LcSimpleElliptic,
  LcCusp,
  LcQuotientOfLc,
  NotLc,
};

const char* to_string(Verdict v);

/// Shape of the zero locus {A = 0} on the graph.
struct LcPlaces {
  enum class Kind { Empty, WholeGraph, Vertex, Segment, Unrecognized };
  Kind kind = Kind::Empty;
  /// Vertex for Kind::Vertex; path from one end to the other for Segment;
  /// the raw zero set for Unrecognized.
  std::vector<std::size_t> vertices;
};

const char* to_string(LcPlaces::Kind k);

struct Classification {
  Verdict verdict = Verdict::Klt;
  Rat min_thinness;
  LcPlaces lc_places;
  std::vector<std::string> warnings;
};

/// The input is taken to be the minimal good resolution; a warning is
/// attached when a contractible (-1)-curve is present.
Classification classify(const DualGraph& g);

std::vector<std::string> minimality_warnings(const DualGraph& g);

/// Hirzebruch-Jung chain of the cyclic quotient singularity (1/n)(1,q).
DualGraph cyclic_quotient_graph(std::int64_t n, std::int64_t q);

/// Negative continued fraction n/q = b1 - 1/(b2 - ...).
std::vector<std::int64_t> hirzebruch_jung(std::int64_t n, std::int64_t q);

}  // namespace singgraph
