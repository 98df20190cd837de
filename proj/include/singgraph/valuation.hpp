#pragma once

// Points of the dual graph seen as normalized (quasi-)monomial valuations.
//
// Edge convention: for an edge (u, v), the parameter t runs from t = 0 at v to
// t = 1 at u, and the point t is the monomial valuation with
//   nu_t(z_u) = t / b_u,   nu_t(z_v) = (1 - t) / b_v,
// where z_u, z_v are local equations of the two curves at the double point.
//
// Functions on divisorial valuations are stored by their vertex values
// g(nu_E) = ord_E(Z) / b_E; this is the dictionary between Weil divisors and
// functions.

#include <cstddef>
#include <variant>
#include <vector>

#include "singgraph/graph.hpp"

namespace singgraph {

struct VertexPoint {
  std::size_t vertex = 0;
};

/// 0 < t < 1; endpoints are VertexPoint.
struct EdgePoint {
  std::size_t edge = 0;
  Rat t;
};

using GraphPoint = std::variant<VertexPoint, EdgePoint>;

/// Returns a VertexPoint for t in {0, 1}; throws BadParameters outside [0, 1].
GraphPoint point_on_edge(const DualGraph& g, std::size_t edge, const Rat& t);

struct WeilOnGraph {
  std::vector<Rat> values;
};

/// |t_p - t_q| / (b_u b_v) for two points of one edge (vertices count as its
/// endpoints). Two vertices joined by an edge are one edge length apart.
Rat metric_distance(const DualGraph& g, const ExceptionalData& data,
                    const GraphPoint& p, const GraphPoint& q);

/// Length of edge k.
Rat edge_length(const DualGraph& g, const ExceptionalData& data, std::size_t k);

/// Affine interpolation of vertex values at a point.
Rat interpolate(const DualGraph& g, const std::vector<Rat>& vertex_values,
                const GraphPoint& p);

Rat thinness_at(const DualGraph& g, const ExceptionalData& data,
                const GraphPoint& p);

/// Exceptional part Z_C of the Mumford pull-back of a curve whose strict
/// transform meets E_i in strict_intersections[i] points: M z = -v.
std::vector<Rat> mumford_pullback(const DualGraph& g, const ExceptionalData& data,
                                  const std::vector<std::int64_t>& strict_intersections);
std::vector<Rat> mumford_pullback(const DualGraph& g,
                                  const std::vector<std::int64_t>& strict_intersections);

/// nu_p(C) for total-transform coefficients z, assuming the strict transform
/// misses the centre of p.
Rat evaluate_divisor(const DualGraph& g, const ExceptionalData& data,
                     const std::vector<Rat>& z_total, const GraphPoint& p);

/// Function of the normalized dual divisor Z_{nu_E} = Z_E / b_E.
WeilOnGraph dual_function(const ExceptionalData& data, std::size_t vertex);

struct EdgeDualDivisor {
  /// Values of Z_{nu_t} at the vertices, t g_u + (1 - t) g_v.
  WeilOnGraph vertex_values;
  /// Value of the correction h_t at nu_t, t (1 - t) / (b_u b_v).
  Rat peak;
  /// g_t(nu_t) = Z_{nu_t}^2.
  Rat self_value;
};

EdgeDualDivisor dual_divisor_at_edge_point(const DualGraph& g,
                                           const ExceptionalData& data,
                                           std::size_t edge, const Rat& t);

/// Z_p . Z_q. Edge-edge pairs are computed by making p divisorial with
/// satellite blow-ups and evaluating nu_q on the resulting Cartier divisor.
Rat pair_dual_divisors(const DualGraph& g, const ExceptionalData& data,
                       const GraphPoint& p, const GraphPoint& q);

/// Uniform bounds for the dual-divisor functions g_t along one edge, from the
/// extrema of the endpoint functions g_0, g_1 and the edge length c2:
///   lower = -c0 - c2 <= g_t <= -c1 = upper   (vertices and the point nu_t)
///   factor_large * g_0 <= g_t <= factor_small * g_0   (vertices)
/// with c0 = -min(g_0, g_1), c1 = -max(g_0, g_1), factor_large = c0 / c1 and
/// factor_small = c1 / c0.
struct SandwichBounds {
  Rat lower;
  Rat upper;
  Rat factor_large;
  Rat factor_small;
};
SandwichBounds sandwich_bounds(const ExceptionalData& data, const DualGraph& g,
                               std::size_t edge);

}  // namespace singgraph
