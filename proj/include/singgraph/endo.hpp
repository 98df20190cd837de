#pragma once

// Monomial germs F(x, y) = (x^a y^b, x^c y^d) acting on monomial valuations,
// optionally equivariant for a cyclic group (1/n)(1, q).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "singgraph/arith.hpp"
#include "singgraph/graph.hpp"

namespace singgraph {

/// Generator acts by (x, y) -> (zeta x, zeta^q y), zeta a primitive n-th root.
struct CyclicGroup {
  std::int64_t n = 1;
  std::int64_t q = 1;
};

using Exponents = Eigen::Matrix<std::int64_t, 2, 2>;

class MonomialMap {
 public:
  /// Rows are the exponents of the two components. Throws NonFinite for a
  /// zero row or column, NotDominant for det = 0, NotEquivariant when the
  /// invariant monomials are not mapped to invariant monomials.
  explicit MonomialMap(const Exponents& m,
                       std::optional<CyclicGroup> group = std::nullopt);

  static MonomialMap identity(std::optional<CyclicGroup> group = std::nullopt);
  /// "a,b,c,d".
  static MonomialMap parse(std::string_view text,
                           std::optional<CyclicGroup> group = std::nullopt);

  const Exponents& matrix() const { return m_; }
  const std::optional<CyclicGroup>& group() const { return group_; }
  std::int64_t a() const { return m_(0, 0); }
  std::int64_t b() const { return m_(0, 1); }
  std::int64_t c() const { return m_(1, 0); }
  std::int64_t d() const { return m_(1, 1); }

  std::int64_t det() const { return a() * d() - b() * c(); }
  std::int64_t topological_degree() const { return det() < 0 ? -det() : det(); }
  std::int64_t trace() const { return a() + d(); }

  std::string to_string() const;

 private:
  Exponents m_;
  std::optional<CyclicGroup> group_;
};

/// Throws BadParameters unless n >= 1, 0 < q < n (q = 1 when n = 1) and
/// gcd(n, q) = 1.
CyclicGroup make_cyclic_group(std::int64_t n, std::int64_t q);

/// The map descends to C^2 / (1/n)(1, q).
bool is_equivariant(const Exponents& m, const CyclicGroup& g);

/// F o G.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// nu(x) = s, nu(y) = t.
struct MonoVal {
  Rat s;
  Rat t;
};

/// Throws BadParameters for negative weights or s = t = 0.
MonoVal make_monoval(Rat s, Rat t);

/// nu(m) over the generators of the maximal ideal: x, y on the smooth germ,
/// the minimal invariant monomials on a quotient.
Rat maximal_ideal_value(const MonoVal& v, const std::optional<CyclicGroup>& group);
bool is_normalized(const MonoVal& v, const std::optional<CyclicGroup>& group);
MonoVal normalize(const MonoVal& v, const std::optional<CyclicGroup>& group);

/// A(nu) = s + t on the smooth germ.
inline Rat thinness(const MonoVal& v) { return v.s + v.t; }

/// F_* nu: weights (a s + b t, c s + d t).
MonoVal push_valuation(const MonomialMap& f, const MonoVal& v);

/// F_* nu evaluated on the maximal ideal of the target. v must be normalized.
Rat contraction_rate(const MonomialMap& f, const MonoVal& v);

/// coefficient * x^ex * y^ey.
struct JacobianDivisor {
  std::int64_t coefficient = 1;
  std::int64_t ex = 0;
  std::int64_t ey = 0;
  bool empty() const { return ex == 0 && ey == 0; }
};

JacobianDivisor jacobian_divisor(const MonomialMap& f);

struct JacobianReport {
  Rat lhs;  // A(F_* nu)
  Rat rhs;  // A(nu) + nu(JF)
  bool equal = false;
};

/// Checks A(F_* nu) = A(nu) + nu(JF) on the smooth germ (on the cover when F
/// carries group data).
JacobianReport verify_jacobian_formula(const MonomialMap& f, const MonoVal& v);

struct TheoremBReport {
  enum class Case { JacobianNonEmpty, Invertible };
  Case which = Case::Invertible;
  std::int64_t degree = 1;
  std::int64_t trace = 0;
  std::int64_t det = 1;
  JacobianDivisor jacobian;
  /// Verdict of the quotient singularity computed from its resolution graph.
  Verdict quotient_verdict = Verdict::Klt;
  /// JF non-empty and the quotient is klt, as predicted.
  bool klt_confirmed = false;
  std::string description;
};

/// Requires group data (BadParameters otherwise).
TheoremBReport theoremB_case(const MonomialMap& f);

struct SkewDegrees {
  std::int64_t e = 1;
  std::int64_t lambda = 1;
};

/// e = e_fiber * e_base, lambda = max(e_fiber, e_base).
SkewDegrees skew_degrees(std::int64_t e_fiber, std::int64_t e_base);

}  // namespace singgraph
