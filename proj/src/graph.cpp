#include "singgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace singgraph {

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw Error(Errc::BadParameters, "a dual graph needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw Error(Errc::BadParameters, "empty vertex id");
    if (!seen.insert(v.id).second)
      throw Error(Errc::BadParameters, "duplicate vertex id '" + v.id + "'");
    if (v.genus < 0)
      throw Error(Errc::BadParameters, "negative genus at '" + v.id + "'");
    if (v.loops < 0)
      throw Error(Errc::BadParameters, "negative loop count at '" + v.id + "'");
    if (v.mult_override && *v.mult_override <= 0)
      throw Error(Errc::BadParameters,
                  "mult_override must be positive at '" + v.id + "'");
  }
  for (const auto& e : edges) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw Error(Errc::NoSuchVertex, "edge endpoint out of range");
    if (e.u == e.v)
      ++vertices_[e.u].loops;
    else
      edges_.push_back(e);
  }
}

std::optional<std::size_t> DualGraph::find(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t DualGraph::index_of(const std::string& id) const {
  auto i = find(id);
  if (!i) throw Error(Errc::NoSuchVertex, "no vertex '" + id + "'");
  return *i;
}

std::optional<std::size_t> DualGraph::find_edge(std::size_t a,
                                                std::size_t b) const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return k;
  }
  return std::nullopt;
}

int DualGraph::valence(std::size_t i) const {
  int n = 2 * vertices_.at(i).loops;
  for (const Edge& e : edges_) n += (e.u == i) + (e.v == i);
  return n;
}

std::int64_t DualGraph::cycle_rank() const {
  std::int64_t loops = 0;
  for (const auto& v : vertices_) loops += v.loops;
  return static_cast<std::int64_t>(edges_.size()) -
         static_cast<std::int64_t>(vertices_.size()) + 1 + loops;
}

bool DualGraph::has_full_override() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.mult_override.has_value(); });
}

bool DualGraph::connected() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (const Edge& e : edges_) {
    auto a = root(e.u), b = root(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Mat<Rat> DualGraph::intersection_matrix() const {
  const auto n = static_cast<Eigen::Index>(vertices_.size());
  Mat<Rat> m = Mat<Rat>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = vertices_[i].self_intersection;
  for (const Edge& e : edges_) {
    auto u = static_cast<Eigen::Index>(e.u), v = static_cast<Eigen::Index>(e.v);
    m(u, v) += 1;
    m(v, u) += 1;
  }
  return m;
}

// ---------------------------------------------------------------------------

NegativeDefiniteReport negative_definite_report(const DualGraph& g) {
  Mat<Rat> neg = -g.intersection_matrix();
  auto minors = leading_minors_until_nonpositive<Rat>(neg);
  NegativeDefiniteReport r;
  if (minors.size() == g.size() && minors.back() > 0) {
    r.negative_definite = true;
    return r;
  }
  r.failing_minor = minors.size();
  r.failing_value = minors.back();
  return r;
}

void require_resolution_graph(const DualGraph& g) {
  if (!g.connected()) throw Error(Errc::Disconnected, "dual graph is not connected");
  auto report = negative_definite_report(g);
  if (!report.negative_definite)
    throw Error(Errc::NotNegativeDefinite,
                "intersection matrix is not negative definite: leading "
                "principal minor " +
                    std::to_string(report.failing_minor) + " of -M equals " +
                    to_string(report.failing_value));
}

std::vector<Rat> discrepancies(const DualGraph& g) {
  require_resolution_graph(g);
  const auto n = static_cast<Eigen::Index>(g.size());
  Mat<Rat> m = g.intersection_matrix();
  Vec<Rat> rhs(n);
  for (Eigen::Index i = 0; i < n; ++i)
    rhs(i) = 2 * g.arithmetic_genus(i) - 2 - g.vertex(i).self_intersection;
  auto a = solve_exact<Rat>(m, rhs);
  if (!a) throw Error(Errc::SingularMatrix, "singular intersection matrix");
  return {a->begin(), a->end()};
}

std::vector<std::int64_t> fundamental_cycle(const DualGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = g.vertex(i).self_intersection;
  for (const Edge& e : g.edges()) {
    ++m[e.u][e.v];
    ++m[e.v][e.u];
  }
  std::vector<std::int64_t> z(n, 1);
  std::vector<std::int64_t> dot(n, 0);  // Z . E_i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dot[i] += m[i][j];

  const std::int64_t cap = iteration_cap(1'000'000);
  for (std::int64_t iter = 0;; ++iter) {
    std::size_t bump = n;
    for (std::size_t i = 0; i < n; ++i)
      if (dot[i] > 0) {
        bump = i;
        break;
      }
    if (bump == n) return z;
    if (iter >= cap)
      throw Error(Errc::NonTermination,
                  "fundamental cycle did not stabilise within the iteration "
                  "cap; the form is probably not negative definite");
    ++z[bump];
    for (std::size_t i = 0; i < n; ++i) dot[i] += m[i][bump];
  }
}

std::vector<std::int64_t> generic_multiplicities(const DualGraph& g) {
  if (g.has_full_override()) {
    std::vector<std::int64_t> b;
    for (const auto& v : g.vertices()) b.push_back(*v.mult_override);
    return b;
  }
  return fundamental_cycle(g);
}

std::vector<Rat> thinness_at_vertices(const DualGraph& g) {
  auto a = discrepancies(g);
  auto b = generic_multiplicities(g);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back((1 + a[i]) / b[i]);
  return out;
}

std::vector<Rat> dual_divisor(const DualGraph& g, std::size_t vertex) {
  require_resolution_graph(g);
  if (vertex >= g.size()) throw Error(Errc::NoSuchVertex, "vertex out of range");
  const auto n = static_cast<Eigen::Index>(g.size());
  Vec<Rat> e = Vec<Rat>::Zero(n);
  e(static_cast<Eigen::Index>(vertex)) = 1;
  auto z = solve_exact<Rat>(g.intersection_matrix(), e);
  if (!z) throw Error(Errc::SingularMatrix, "singular intersection matrix");
  for (const Rat& c : *z)
    if (!(c < 0))
      throw Error(Errc::Internal, "dual divisor has a non-negative coefficient");
  return {z->begin(), z->end()};
}

ExceptionalData analyze(const DualGraph& g) {
  require_resolution_graph(g);
  ExceptionalData data;
  data.discrepancy = discrepancies(g);
  data.multiplicity = generic_multiplicities(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    data.thinness.push_back((1 + data.discrepancy[i]) / data.multiplicity[i]);
  auto inv = inverse_exact<Rat>(g.intersection_matrix());
  if (!inv) throw Error(Errc::SingularMatrix, "singular intersection matrix");
  data.dual = std::move(*inv);
  return data;
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Klt: return "KLT";
    case Verdict::LcSimpleElliptic: return "LC_SIMPLE_ELLIPTIC";
    case Verdict::LcCusp: return "LC_CUSP";
    case Verdict::LcQuotientOfLc: return "LC_QUOTIENT_OF_LC";
    case Verdict::NotLc: return "NOT_LC";
  }
  return "?";
}

const char* to_string(LcPlaces::Kind k) {
  switch (k) {
    case LcPlaces::Kind::Empty: return "empty";
    case LcPlaces::Kind::WholeGraph: return "whole graph";
    case LcPlaces::Kind::Vertex: return "vertex";
    case LcPlaces::Kind::Segment: return "segment";
    case LcPlaces::Kind::Unrecognized: return "unrecognized";
  }
  return "?";
}

std::vector<std::string> minimality_warnings(const DualGraph& g) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vertex& v = g.vertex(i);
    if (v.self_intersection == -1 && v.genus == 0 && v.loops == 0 &&
        g.valence(i) <= 2)
      out.push_back("vertex '" + v.id +
                    "' is a contractible (-1)-curve; the resolution is not "
                    "minimal and the lc-place description may not apply");
  }
  return out;
}

namespace {

// Orders the zero set as a path whose interior vertices have valence 2 inside
// the whole graph, with both ends branched of valence 3. Empty if it is not
// such a path.
std::vector<std::size_t> as_branch_segment(const DualGraph& g,
                                           const std::vector<std::size_t>& zero) {
  std::set<std::size_t> in(zero.begin(), zero.end());
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (const Edge& e : g.edges())
    if (in.count(e.u) && in.count(e.v)) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<std::size_t> ends;
  for (std::size_t v : zero) {
    if (adj[v].size() == 1)
      ends.push_back(v);
    else if (adj[v].size() != 2)
      return {};
  }
  if (ends.size() != 2) return {};
  std::vector<std::size_t> path{ends[0]};
  std::size_t prev = ends[0], cur = adj[ends[0]][0];
  while (true) {
    path.push_back(cur);
    if (cur == ends[1]) break;
    std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    if (path.size() > zero.size()) return {};
  }
  if (path.size() != zero.size()) return {};
  if (g.valence(path.front()) != 3 || g.valence(path.back()) != 3) return {};
  for (std::size_t k = 1; k + 1 < path.size(); ++k)
    if (g.valence(path[k]) != 2) return {};
  return path;
}

}  // namespace

Classification classify(const DualGraph& g) {
  const auto thin = thinness_at_vertices(g);  // validates g
  Classification c;
  c.warnings = minimality_warnings(g);
  c.min_thinness = *std::min_element(thin.begin(), thin.end());

  if (c.min_thinness > 0) {
    c.verdict = Verdict::Klt;
    return c;
  }
  if (c.min_thinness < 0) {
    c.verdict = Verdict::NotLc;
    return c;
  }

  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (thin[i] == 0) zero.push_back(i);
  const bool whole = zero.size() == g.size();
  bool irrational_curve = false;
  for (const auto& v : g.vertices()) irrational_curve |= v.genus > 0;
  const std::int64_t rank = g.cycle_rank();

  if (irrational_curve) {
    c.verdict = Verdict::LcSimpleElliptic;
    if (g.size() == 1 && g.vertex(0).genus == 1 && g.vertex(0).loops == 0) {
      c.lc_places.kind = LcPlaces::Kind::WholeGraph;
      c.lc_places.vertices = zero;
      return c;
    }
  } else if (rank > 0) {
    c.verdict = Verdict::LcCusp;
    bool polygon = rank == 1;
    for (std::size_t i = 0; i < g.size() && polygon; ++i)
      polygon = g.valence(i) == 2;
    if (polygon && whole) {
      c.lc_places.kind = LcPlaces::Kind::WholeGraph;
      c.lc_places.vertices = zero;
      return c;
    }
  } else {
    c.verdict = Verdict::LcQuotientOfLc;
    if (zero.size() == 1 && g.valence(zero[0]) >= 3) {
      c.lc_places.kind = LcPlaces::Kind::Vertex;
      c.lc_places.vertices = zero;
      return c;
    }
    auto path = as_branch_segment(g, zero);
    if (!path.empty()) {
      c.lc_places.kind = LcPlaces::Kind::Segment;
      c.lc_places.vertices = std::move(path);
      return c;
    }
  }
  c.lc_places.kind = LcPlaces::Kind::Unrecognized;
  c.lc_places.vertices = zero;
  c.warnings.push_back(
      "zero locus of the thinness does not match the minimal-resolution "
      "pattern for this verdict");
  return c;
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> hirzebruch_jung(std::int64_t n, std::int64_t q) {
  if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
    throw Error(Errc::BadParameters,
                "cyclic quotient needs n >= 2, 1 <= q < n, gcd(n, q) = 1");
  std::vector<std::int64_t> b;
  while (q != 0) {
    std::int64_t bi = (n + q - 1) / q;
    b.push_back(bi);
    std::int64_t r = bi * q - n;
    n = q;
    q = r;
  }
  return b;
}

DualGraph cyclic_quotient_graph(std::int64_t n, std::int64_t q) {
  auto b = hirzebruch_jung(n, q);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < b.size(); ++i) {
    vs.push_back({"E" + std::to_string(i + 1), static_cast<int>(-b[i]), 0, 0, {}});
    if (i > 0) es.push_back({i - 1, i});
  }
  return DualGraph(std::move(vs), std::move(es));
}

}  // namespace singgraph
