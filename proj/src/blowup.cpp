#include "singgraph/blowup.hpp"

namespace singgraph {

namespace {

struct BaseInvariants {
  std::vector<Rat> a;
  std::vector<std::int64_t> b;
  std::vector<Rat> thinness;
};

BaseInvariants base_invariants(const DualGraph& g) {
  BaseInvariants inv;
  inv.a = discrepancies(g);
  inv.b = generic_multiplicities(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    inv.thinness.push_back((1 + inv.a[i]) / inv.b[i]);
  return inv;
}

Vertex exceptional_curve(const DualGraph& g) {
  return {fresh_vertex_id(g), -1, 0, 0, {}};
}

// Graph part of a satellite blow-up; F gets index g.size().
DualGraph satellite_raw(const DualGraph& g, std::size_t k) {
  if (k >= g.edges().size())
    throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(k));
  const Edge e = g.edge(k);
  auto vs = g.vertices();
  auto es = g.edges();
  vs[e.u].self_intersection -= 1;
  vs[e.v].self_intersection -= 1;
  const std::size_t f = vs.size();
  vs.push_back(exceptional_curve(g));
  es[k] = {e.u, f};
  es.push_back({f, e.v});
  return DualGraph(std::move(vs), std::move(es));
}

Rat length(std::int64_t bu, std::int64_t bv) { return Rat(1) / (Rat(bu) * bv); }

bool old_edges_preserve_length(const DualGraph& before,
                               const std::vector<std::int64_t>& b_before,
                               const std::vector<std::int64_t>& b_after,
                               std::size_t skip) {
  for (std::size_t k = 0; k < before.edges().size(); ++k) {
    if (k == skip) continue;
    const Edge& e = before.edge(k);
    if (length(b_before[e.u], b_before[e.v]) != length(b_after[e.u], b_after[e.v]))
      return false;
  }
  return true;
}

void finish_report(TransportReport& r, const DualGraph& raw,
                   const DualGraph& result) {
  r.recomputed_a = discrepancies(result);
  r.fundamental_cycle_b = fundamental_cycle(raw);
  for (std::size_t i = 0; i < r.recomputed_a.size(); ++i)
    r.recomputed_A.push_back((1 + r.recomputed_a[i]) / r.transported_b[i]);
}

}  // namespace

std::string fresh_vertex_id(const DualGraph& g) {
  for (std::size_t k = 1;; ++k) {
    std::string id = "F" + std::to_string(k);
    if (!g.find(id)) return id;
  }
}

DualGraph with_multiplicities(const DualGraph& g,
                              const std::vector<std::int64_t>& b,
                              bool keep_full) {
  if (!keep_full && fundamental_cycle(g) == b) return g;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i].mult_override = b.at(i);
  return DualGraph(std::move(vs), g.edges());
}

bool TransportReport::consistent() const {
  return transported_a == recomputed_a && transported_A == recomputed_A &&
         metric_consistent();
}

std::vector<std::string> TransportReport::diff(const DualGraph& g) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string& id = g.vertex(i).id;
    if (transported_a[i] != recomputed_a[i])
      out.push_back("a[" + id + "]: transported " + to_string(transported_a[i]) +
                    ", recomputed " + to_string(recomputed_a[i]));
    if (transported_A[i] != recomputed_A[i])
      out.push_back("A[" + id + "]: transported " + to_string(transported_A[i]) +
                    ", recomputed " + to_string(recomputed_A[i]));
  }
  if (!old_lengths_preserved) out.push_back("metric: an old edge changed length");
  if (parent_length != subdivided_length)
    out.push_back("metric: edge length " + to_string(parent_length) +
                  " became " + to_string(subdivided_length));
  for (std::size_t i = 0; i < g.size(); ++i)
    if (transported_b[i] != fundamental_cycle_b[i])
      out.push_back("note: b[" + g.vertex(i).id + "] transported " +
                    std::to_string(transported_b[i]) + ", fundamental cycle " +
                    std::to_string(fundamental_cycle_b[i]));
  return out;
}

BlowupResult blow_up_free(const DualGraph& g, std::size_t vertex) {
  if (vertex >= g.size())
    throw Error(Errc::NoSuchVertex, "no vertex with index " + std::to_string(vertex));
  const auto base = base_invariants(g);

  auto vs = g.vertices();
  auto es = g.edges();
  vs[vertex].self_intersection -= 1;
  const std::size_t f = vs.size();
  vs.push_back(exceptional_curve(g));
  es.push_back({vertex, f});
  DualGraph raw(std::move(vs), std::move(es));

  TransportReport r;
  r.transported_a = base.a;
  r.transported_a.push_back(base.a[vertex] + 1);
  r.transported_b = base.b;
  r.transported_b.push_back(base.b[vertex]);
  r.transported_A = base.thinness;
  r.transported_A.push_back(base.thinness[vertex] + Rat(1) / base.b[vertex]);
  r.old_lengths_preserved = old_edges_preserve_length(g, base.b, r.transported_b,
                                                      g.edges().size());

  BlowupResult out{with_multiplicities(raw, r.transported_b, g.has_full_override()),
                   f, {}};
  finish_report(r, raw, out.graph);
  out.report = std::move(r);
  return out;
}

BlowupResult blow_up_satellite(const DualGraph& g, std::size_t edge) {
  if (edge >= g.edges().size())
    throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(edge));
  const auto base = base_invariants(g);
  const Edge e = g.edge(edge);
  DualGraph raw = satellite_raw(g, edge);
  const std::size_t f = g.size();

  const std::int64_t bu = base.b[e.u], bv = base.b[e.v], bf = bu + bv;
  TransportReport r;
  r.transported_a = base.a;
  r.transported_a.push_back(base.a[e.u] + base.a[e.v] + 1);
  r.transported_b = base.b;
  r.transported_b.push_back(bf);
  r.transported_A = base.thinness;
  r.transported_A.push_back((bu * base.thinness[e.u] + bv * base.thinness[e.v]) / bf);
  r.new_vertex_parameter = Rat(bu) / bf;
  r.parent_length = length(bu, bv);
  r.subdivided_length = length(bu, bf) + length(bf, bv);
  r.old_lengths_preserved = old_edges_preserve_length(g, base.b, r.transported_b, edge);

  BlowupResult out{with_multiplicities(raw, r.transported_b, g.has_full_override()),
                   f, {}};
  finish_report(r, raw, out.graph);
  out.report = std::move(r);
  return out;
}

BlowupResult blow_up_node(const DualGraph& g, std::size_t vertex) {
  if (vertex >= g.size())
    throw Error(Errc::NoSuchVertex, "no vertex with index " + std::to_string(vertex));
  if (g.vertex(vertex).loops == 0)
    throw Error(Errc::NoSuchEdge, "vertex '" + g.vertex(vertex).id + "' has no loop");
  const auto base = base_invariants(g);

  auto vs = g.vertices();
  auto es = g.edges();
  vs[vertex].self_intersection -= 4;
  vs[vertex].loops -= 1;
  const std::size_t f = vs.size();
  vs.push_back(exceptional_curve(g));
  es.push_back({vertex, f});
  es.push_back({vertex, f});
  DualGraph raw(std::move(vs), std::move(es));

  const std::int64_t be = base.b[vertex];
  TransportReport r;
  r.transported_a = base.a;
  r.transported_a.push_back(2 * base.a[vertex] + 1);
  r.transported_b = base.b;
  r.transported_b.push_back(2 * be);
  r.transported_A = base.thinness;
  r.transported_A.push_back(base.thinness[vertex]);
  r.parent_length = length(be, be);
  r.subdivided_length = 2 * length(be, 2 * be);
  r.old_lengths_preserved = old_edges_preserve_length(g, base.b, r.transported_b,
                                                      g.edges().size());

  BlowupResult out{with_multiplicities(raw, r.transported_b, g.has_full_override()),
                   f, {}};
  finish_report(r, raw, out.graph);
  out.report = std::move(r);
  return out;
}

Subdivision divisorialize(const DualGraph& g, std::size_t edge, const Rat& t) {
  if (edge >= g.edges().size())
    throw Error(Errc::NoSuchEdge, "no edge with index " + std::to_string(edge));
  if (t < 0 || t > 1)
    throw Error(Errc::BadParameters, "edge parameter must lie in [0, 1]");
  const Edge e = g.edge(edge);
  std::vector<std::int64_t> b = generic_multiplicities(g);
  const std::int64_t bu = b[e.u], bv = b[e.v];

  Subdivision out;
  out.graph = g;
  out.chain = {e.v, e.u};
  out.params = {Rat(0), Rat(1)};
  out.chain_edges = {edge};
  if (t == 0 || t == 1) {
    out.vertex = t == 1 ? e.u : e.v;
    return out;
  }

  // A divisor on the edge with ord(z_u) = m, ord(z_v) = n sits at
  // t = m b_u / (m b_u + n b_v); satellite blow-ups realise every coprime
  // (m, n) as a Stern-Brocot mediant.
  const Rat target = t * bv / ((1 - t) * bu);
  const Int tm = boost::multiprecision::numerator(target);
  const Int tn = boost::multiprecision::denominator(target);
  struct Node {
    Int m, n;
  };
  std::vector<Node> nodes{{Int(0), Int(1)}, {Int(1), Int(0)}};
  std::size_t seg = 0;
  const std::int64_t cap = iteration_cap(100'000);
  DualGraph cur = g;
  while (true) {
    if (static_cast<std::int64_t>(out.blowups) >= cap)
      throw Error(Errc::NonTermination, "divisorialize exceeded the iteration cap");
    const Node med{nodes[seg].m + nodes[seg + 1].m, nodes[seg].n + nodes[seg + 1].n};
    const std::size_t old_edge = out.chain_edges[seg];
    const std::size_t lower = out.chain[seg], upper = out.chain[seg + 1];
    cur = satellite_raw(cur, old_edge);
    ++out.blowups;
    const std::size_t f = cur.size() - 1;
    const std::size_t appended = cur.edges().size() - 1;
    b.push_back(b[lower] + b[upper]);

    nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(seg) + 1, med);
    out.chain.insert(out.chain.begin() + static_cast<std::ptrdiff_t>(seg) + 1, f);
    out.chain_edges[seg] = appended;
    out.chain_edges.insert(
        out.chain_edges.begin() + static_cast<std::ptrdiff_t>(seg) + 1, old_edge);

    if (med.m == tm && med.n == tn) {
      out.vertex = f;
      break;
    }
    if (tm * med.n < med.m * tn) {
      // target lies between the lower end and F
    } else {
      ++seg;
    }
  }
  out.params.clear();
  for (const Node& nd : nodes)
    out.params.push_back(Rat(nd.m * bu) / Rat(nd.m * bu + nd.n * bv));
  out.graph = with_multiplicities(cur, b, g.has_full_override());
  return out;
}

}  // namespace singgraph
