#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's solvers: linear systems go through Bareiss determinants and
// Cramer's rule over the integers.

#include <algorithm>
#include <optional>
#include <vector>

#include "singgraph/cusp.hpp"
#include "singgraph/graph.hpp"

namespace oracle {

using singgraph::Int;
using singgraph::Rat;
using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free Gaussian elimination with row swaps.
inline Int det(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Cramer's rule; nullopt for a singular matrix.
inline std::optional<std::vector<Rat>> solve(const IntMatrix& a, const std::vector<Int>& b) {
  const Int d = det(a);
  if (d == 0) return std::nullopt;
  std::vector<Rat> x;
  for (std::size_t j = 0; j < a.size(); ++j) {
    IntMatrix aj = a;
    for (std::size_t i = 0; i < a.size(); ++i) aj[i][j] = b[i];
    x.push_back(singgraph::make_rat(det(aj), d));
  }
  return x;
}

/// Intersection matrix rebuilt from the vertex and edge lists.
inline IntMatrix intersection_matrix(const singgraph::DualGraph& g) {
  IntMatrix m(g.size(), std::vector<Int>(g.size(), Int(0)));
  for (std::size_t i = 0; i < g.size(); ++i) m[i][i] = g.vertex(i).self_intersection;
  for (const auto& e : g.edges()) {
    m[e.u][e.v] += 1;
    m[e.v][e.u] += 1;
  }
  return m;
}

/// Sylvester: -M is positive definite iff all leading minors are positive.
inline bool negative_definite(const singgraph::DualGraph& g) {
  IntMatrix m = intersection_matrix(g);
  for (auto& row : m)
    for (auto& x : row) x = -x;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    IntMatrix minor(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
    if (det(minor) <= 0) return false;
  }
  return true;
}

/// Adjunction: K.E_i = 2 p_a - 2 - E_i^2, with loops counted in p_a.
inline std::vector<Rat> discrepancies(const singgraph::DualGraph& g) {
  std::vector<Int> rhs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    rhs.push_back(Int(2 * (v.genus + v.loops) - 2 - v.self_intersection));
  }
  return *solve(intersection_matrix(g), rhs);
}

/// Z with Z . E_i = delta_ij, i.e. column j of M^{-1}.
inline std::vector<Rat> dual_column(const singgraph::DualGraph& g, std::size_t j) {
  std::vector<Int> rhs(g.size(), Int(0));
  rhs[j] = 1;
  return *solve(intersection_matrix(g), rhs);
}

/// Mumford pull-back: Z . E_i = -v_i.
inline std::vector<Rat> pullback(const singgraph::DualGraph& g,
                                 const std::vector<std::int64_t>& strict) {
  std::vector<Int> rhs;
  for (auto v : strict) rhs.push_back(Int(-v));
  return *solve(intersection_matrix(g), rhs);
}

/// Smallest unit > 1 of Z[sqrt d] or Z[(1 + sqrt d)/2] of norm +1, by trying
/// x + y sqrt d in increasing y (the unit with smallest y is the smallest).
inline singgraph::QuadElem brute_force_unit(std::int64_t d, bool half, std::int64_t max_y) {
  for (std::int64_t y = 1; y <= max_y; ++y)
    for (std::int64_t x = 1; x * x <= d * y * y + 4; ++x) {
      if (half && (x - y) % 2 != 0) continue;
      if (!half && (x * x - d * y * y) != 1) continue;
      if (half && (x * x - d * y * y) != 4) continue;
      return half ? singgraph::QuadElem(d, Rat(x, 2), Rat(y, 2))
                  : singgraph::QuadElem(d, Rat(x), Rat(y));
    }
  throw std::runtime_error("no unit found");
}

/// Boundary lattice points of the hull of N_+ between the least-norm point n
/// and epsilon n: exhaustive box search and a monotone chain that keeps
/// collinear points.
inline std::vector<singgraph::QuadElem> box_hull(const singgraph::QuadLattice& lattice,
                                                 const singgraph::QuadElem& eps) {
  using singgraph::QuadElem;
  const std::int64_t d = lattice.d();
  const QuadElem& w = lattice.omega();
  auto points = [&](const QuadElem& x0, const QuadElem& x1, const QuadElem& y0,
                    const QuadElem& y1) {
    // a + b w with a, b in a generous integer window, filtered exactly.
    const double span = x1.embed_first() + y1.embed_first() + 2;
    const double wd = std::abs(w.embed_first() - w.embed_second());
    const auto bmax = static_cast<long long>(span / wd) + 3;
    std::vector<QuadElem> out;
    for (long long b = -bmax; b <= bmax; ++b) {
      const double c = -b * std::min(w.embed_first(), w.embed_second());
      for (long long a = static_cast<long long>(c) - 3 - static_cast<long long>(span);
           a <= static_cast<long long>(c + span) + 3; ++a) {
        QuadElem n = QuadElem(d, Rat(a)) + Rat(b) * w;
        if (n >= x0 && n <= x1 && n.conjugate() >= y0 && n.conjugate() <= y1)
          out.push_back(n);
      }
    }
    return out;
  };
  const QuadElem zero(d, Rat(0)), one(d, Rat(1));
  std::optional<QuadElem> n0;
  for (const auto& n : points(zero, eps, zero, one))
    if (singgraph::quad_is_totally_positive(n) &&
        (!n0 || n.norm() < n0->norm() || (n.norm() == n0->norm() && n < *n0)))
      n0 = n;
  const QuadElem n1 = eps * *n0;
  auto pts = points(*n0, n1, n1.conjugate(), n0->conjugate());
  std::sort(pts.begin(), pts.end());
  std::vector<QuadElem> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const QuadElem u = hull.back() - hull[hull.size() - 2], v = p - hull[hull.size() - 2];
      if ((u * v.conjugate() - u.conjugate() * v).sign() >= 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

/// c_k read off a closed boundary polygon n_0 .. n_l = eps n_0.
inline std::vector<std::int64_t> cycle_of(const std::vector<singgraph::QuadElem>& pts,
                                          const singgraph::QuadElem& eps) {
  const std::size_t l = pts.size() - 1;
  std::vector<std::int64_t> c;
  for (std::size_t k = 0; k < l; ++k) {
    const auto prev = k == 0 ? pts[l - 1] / eps : pts[k - 1];
    const auto ck = (prev + pts[k + 1]) / pts[k];
    c.push_back(boost::multiprecision::numerator(ck.rational_part()).convert_to<std::int64_t>());
  }
  return c;
}

/// Equal up to cyclic rotation.
inline bool same_cycle(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < a.size() && ok; ++k) ok = a[k] == b[(k + r) % a.size()];
    if (ok) return true;
  }
  return a.empty();
}

}  // namespace oracle
