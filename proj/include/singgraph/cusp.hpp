#pragma once

// Cusp singularities from lattices N = Z + Z*omega in a real quadratic field,
// and the rotation that a multiplication map induces on the cusp cycle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singgraph/arith.hpp"
#include "singgraph/graph.hpp"

namespace singgraph {

/// N = Z + Z*omega inside Q(sqrt d); omega irrational.
class QuadLattice {
 public:
  QuadLattice(std::int64_t d, QuadElem omega);

  /// N = Z[sqrt d].
  static QuadLattice sqrt_order(std::int64_t d);
  /// N = Z[(1 + sqrt d) / 2]; d must be 1 mod 4.
  static QuadLattice half_order(std::int64_t d);

  std::int64_t d() const { return d_; }
  const QuadElem& omega() const { return omega_; }

  bool contains(const QuadElem& x) const { return quad_is_integral(x, omega_); }
  /// x N is contained in N.
  bool stabilized_by(const QuadElem& x) const;

 private:
  std::int64_t d_;
  QuadElem omega_;
};

/// Fundamental unit (> 1) of the maximal order of Q(sqrt d), by a bounded
/// Pell search. Throws SearchExhausted.
QuadElem fundamental_unit(std::int64_t d);

/// Generator > 1 of the totally positive units of the maximal order.
QuadElem totally_positive_fundamental_unit(std::int64_t d);

/// Generator epsilon > 1 of U_N^+: the least power of the totally positive
/// fundamental unit that maps N onto itself.
QuadElem fundamental_totally_positive_unit(const QuadLattice& lattice);

struct CuspData {
  QuadElem epsilon;
  int period = 0;
  /// c_k >= 2, one per extremal point n_0 .. n_{l-1}.
  std::vector<std::int64_t> cycle;
  /// n_0 .. n_l with n_l = epsilon * n_0.
  std::vector<QuadElem> extremal;
};

/// Lattice points on the boundary of the convex hull of the totally positive
/// part of N over one period of epsilon, starting at the point of least trace,
/// and the cycle read off n_{k-1} + n_{k+1} = c_k n_k. Each n_{k+1} is the
/// first totally positive point c n_k - n_{k-1}. Throws DegenerateCycle if
/// every c_k is 2.
CuspData klein_polygon(const QuadLattice& lattice);

/// Checks every CuspData invariant exactly; returns the failures.
std::vector<std::string> check_cusp_data(const CuspData& c, const QuadLattice& lattice);

/// Trace of the product of [[c_k, -1], [1, 0]] over the cycle.
Int cycle_trace(const std::vector<std::int64_t>& cycle);

/// Cycle of rational curves with self-intersections -c_k. A one-element cycle
/// is a nodal rational curve, whose self-intersection is 2 - c_0.
DualGraph cusp_dual_graph(const std::vector<std::int64_t>& cycle);

struct RotationNumber {
  bool rational = false;
  /// Reduced value when rational.
  std::optional<Rat> value;
  /// alpha / alpha'.
  QuadElem ratio;
  std::string description;
};

/// rho = log(alpha / alpha') / (2 log epsilon), decided exactly. Throws
/// NotTotallyPositive, NotStabilizing.
RotationNumber rotation_number(const QuadLattice& lattice, const QuadElem& alpha);

/// Norm of alpha, which must be totally positive with integral norm.
Int topological_degree(const QuadElem& alpha);

/// k with x = unit^k, by exact repeated division, |k| <= 256; nullopt if x is
/// not such a power.
std::optional<std::int64_t> discrete_log(const QuadElem& x, const QuadElem& unit);

}  // namespace singgraph
