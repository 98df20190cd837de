#include "singgraph/valuation.hpp"

#include <algorithm>

#include "singgraph/blowup.hpp"

namespace singgraph {

namespace {

// Position of p on edge k as a parameter, if p lies on that closed edge.
std::optional<Rat> parameter_on(const DualGraph& g, std::size_t k,
                                const GraphPoint& p) {
  const Edge& e = g.edge(k);
  if (const auto* ep = std::get_if<EdgePoint>(&p)) {
    if (ep->edge == k) return ep->t;
    return std::nullopt;
  }
  const std::size_t v = std::get<VertexPoint>(p).vertex;
  if (v == e.u) return Rat(1);
  if (v == e.v) return Rat(0);
  return std::nullopt;
}

void check_point(const DualGraph& g, const GraphPoint& p) {
  if (const auto* ep = std::get_if<EdgePoint>(&p)) {
    if (ep->edge >= g.edges().size())
      throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(ep->edge));
    if (!(ep->t > 0 && ep->t < 1))
      throw Error(Errc::BadParameters, "edge point parameter must lie in (0, 1)");
  } else if (std::get<VertexPoint>(p).vertex >= g.size()) {
    throw Error(Errc::NoSuchVertex, "vertex index out of range");
  }
}

}  // namespace

GraphPoint point_on_edge(const DualGraph& g, std::size_t edge, const Rat& t) {
  if (edge >= g.edges().size())
    throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(edge));
  if (t < 0 || t > 1) throw Error(Errc::BadParameters, "edge parameter outside [0, 1]");
  if (t == 1) return VertexPoint{g.edge(edge).u};
  if (t == 0) return VertexPoint{g.edge(edge).v};
  return EdgePoint{edge, t};
}

Rat edge_length(const DualGraph& g, const ExceptionalData& data, std::size_t k) {
  const Edge& e = g.edge(k);
  return Rat(1) / (Rat(data.multiplicity[e.u]) * data.multiplicity[e.v]);
}

Rat metric_distance(const DualGraph& g, const ExceptionalData& data,
                    const GraphPoint& p, const GraphPoint& q) {
  check_point(g, p);
  check_point(g, q);
  const auto* vp = std::get_if<VertexPoint>(&p);
  const auto* vq = std::get_if<VertexPoint>(&q);
  if (vp && vq && vp->vertex == vq->vertex) return Rat(0);

  std::vector<std::size_t> candidates;
  if (const auto* ep = std::get_if<EdgePoint>(&p))
    candidates.push_back(ep->edge);
  else if (const auto* eq = std::get_if<EdgePoint>(&q))
    candidates.push_back(eq->edge);
  else if (auto k = g.find_edge(vp->vertex, vq->vertex))
    candidates.push_back(*k);

  for (std::size_t k : candidates) {
    auto tp = parameter_on(g, k, p);
    auto tq = parameter_on(g, k, q);
    if (tp && tq) return abs(*tp - *tq) * edge_length(g, data, k);
  }
  throw Error(Errc::NotSameEdge, "points do not lie on a common edge");
}

Rat interpolate(const DualGraph& g, const std::vector<Rat>& values,
                const GraphPoint& p) {
  check_point(g, p);
  if (const auto* vp = std::get_if<VertexPoint>(&p)) return values.at(vp->vertex);
  const auto& ep = std::get<EdgePoint>(p);
  const Edge& e = g.edge(ep.edge);
  return ep.t * values.at(e.u) + (1 - ep.t) * values.at(e.v);
}

Rat thinness_at(const DualGraph& g, const ExceptionalData& data,
                const GraphPoint& p) {
  return interpolate(g, data.thinness, p);
}

std::vector<Rat> mumford_pullback(const DualGraph& g, const ExceptionalData& data,
                                  const std::vector<std::int64_t>& strict) {
  if (strict.size() != g.size())
    throw Error(Errc::BadParameters, "one strict intersection number per vertex");
  std::vector<Rat> z(g.size(), Rat(0));
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (strict[j] < 0)
      throw Error(Errc::BadParameters, "strict intersection numbers are non-negative");
    if (strict[j] == 0) continue;
    for (std::size_t i = 0; i < g.size(); ++i)
      z[i] -= Rat(strict[j]) * data.dual(static_cast<Eigen::Index>(i),
                                         static_cast<Eigen::Index>(j));
  }
  return z;
}

std::vector<Rat> mumford_pullback(const DualGraph& g,
                                  const std::vector<std::int64_t>& strict) {
  return mumford_pullback(g, analyze(g), strict);
}

Rat evaluate_divisor(const DualGraph& g, const ExceptionalData& data,
                     const std::vector<Rat>& z_total, const GraphPoint& p) {
  if (z_total.size() != g.size())
    throw Error(Errc::BadParameters, "one coefficient per vertex");
  std::vector<Rat> normalized;
  for (std::size_t i = 0; i < g.size(); ++i)
    normalized.push_back(z_total[i] / data.multiplicity[i]);
  return interpolate(g, normalized, p);
}

WeilOnGraph dual_function(const ExceptionalData& data, std::size_t vertex) {
  const auto n = data.dual.rows();
  const auto col = static_cast<Eigen::Index>(vertex);
  WeilOnGraph w;
  for (Eigen::Index i = 0; i < n; ++i)
    w.values.push_back(data.dual(i, col) /
                       (Rat(data.multiplicity[vertex]) * data.multiplicity[i]));
  return w;
}

EdgeDualDivisor dual_divisor_at_edge_point(const DualGraph& g,
                                           const ExceptionalData& data,
                                           std::size_t edge, const Rat& t) {
  if (edge >= g.edges().size())
    throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(edge));
  if (t < 0 || t > 1) throw Error(Errc::BadParameters, "edge parameter outside [0, 1]");
  const Edge& e = g.edge(edge);
  const auto g1 = dual_function(data, e.u);
  const auto g0 = dual_function(data, e.v);

  EdgeDualDivisor out;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.vertex_values.values.push_back(t * g1.values[i] + (1 - t) * g0.values[i]);
  out.peak = t * (1 - t) * edge_length(g, data, edge);
  // Both endpoint functions are affine on the edge, so at nu_t they equal the
  // interpolation of their endpoint values.
  const Rat g1_at = t * g1.values[e.u] + (1 - t) * g1.values[e.v];
  const Rat g0_at = t * g0.values[e.u] + (1 - t) * g0.values[e.v];
  out.self_value = t * g1_at + (1 - t) * g0_at - out.peak;
  return out;
}

namespace {

GraphPoint relocate(const Subdivision& sub, std::size_t edge,
                    const GraphPoint& q) {
  const auto* eq = std::get_if<EdgePoint>(&q);
  if (!eq || eq->edge != edge) return q;  // indices of everything else persist
  const Rat& s = eq->t;
  for (std::size_t k = 0; k + 1 < sub.chain.size(); ++k) {
    if (s == sub.params[k]) return VertexPoint{sub.chain[k]};
    if (s > sub.params[k] && s < sub.params[k + 1]) {
      const Rat local = (s - sub.params[k]) / (sub.params[k + 1] - sub.params[k]);
      const std::size_t ce = sub.chain_edges[k];
      // chain edges are oriented with u at the t = 1 end
      return EdgePoint{ce, local};
    }
  }
  return VertexPoint{sub.chain.back()};
}

}  // namespace

Rat pair_dual_divisors(const DualGraph& g, const ExceptionalData& data,
                       const GraphPoint& p, const GraphPoint& q) {
  check_point(g, p);
  check_point(g, q);
  if (const auto* vp = std::get_if<VertexPoint>(&p))
    return interpolate(g, dual_function(data, vp->vertex).values, q);
  if (const auto* vq = std::get_if<VertexPoint>(&q))
    return interpolate(g, dual_function(data, vq->vertex).values, p);

  const auto& ep = std::get<EdgePoint>(p);
  Subdivision sub = divisorialize(g, ep.edge, ep.t);
  const ExceptionalData fine = analyze(sub.graph);
  const GraphPoint moved = relocate(sub, ep.edge, q);
  return interpolate(sub.graph, dual_function(fine, sub.vertex).values, moved);
}

SandwichBounds sandwich_bounds(const ExceptionalData& data, const DualGraph& g,
                               std::size_t edge) {
  const Edge& e = g.edge(edge);
  const auto g1 = dual_function(data, e.u);
  const auto g0 = dual_function(data, e.v);
  Rat lo = g0.values[0], hi = g0.values[0];
  for (const auto* f : {&g0, &g1})
    for (const Rat& v : f->values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const Rat c0 = -lo, c1 = -hi;
  return {-c0 - edge_length(g, data, edge), -c1, c0 / c1, c1 / c0};
}

}  // namespace singgraph
