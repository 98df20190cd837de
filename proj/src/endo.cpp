#include "singgraph/endo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace singgraph {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out(1);
  for (char ch : text) {
    if (ch == sep)
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

std::int64_t to_int64(const std::string& s) {
  const Rat r = parse_rat(s);
  if (!is_integer(r)) throw Error(Errc::Parse, "not an integer: '" + s + "'");
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}

}  // namespace

CyclicGroup make_cyclic_group(std::int64_t n, std::int64_t q) {
  if (n < 1) throw Error(Errc::BadParameters, "group order must be positive");
  if (n == 1) return {1, 1};
  if (q <= 0 || q >= n || std::gcd(n, q) != 1)
    throw Error(Errc::BadParameters, "need 0 < q < n with gcd(n, q) = 1");
  return {n, q};
}

bool is_equivariant(const Exponents& m, const CyclicGroup& g) {
  // Invariant monomials x^i y^j form the lattice i + q j = 0 mod n, spanned by
  // (n, 0) and (-q, 1); x^i y^j o F = x^(a i + c j) y^(b i + d j).
  auto image_invariant = [&](std::int64_t i, std::int64_t j) {
    const std::int64_t ii = m(0, 0) * i + m(1, 0) * j;
    const std::int64_t jj = m(0, 1) * i + m(1, 1) * j;
    return mod(ii + g.q * jj, g.n) == 0;
  };
  return image_invariant(g.n, 0) && image_invariant(-g.q, 1);
}

MonomialMap::MonomialMap(const Exponents& m, std::optional<CyclicGroup> group)
    : m_(m), group_(group) {
  if ((m_.array() < 0).any())
    throw Error(Errc::BadParameters, "exponents must be non-negative");
  for (int i = 0; i < 2; ++i)
    if (m_.row(i).isZero() || m_.col(i).isZero())
      throw Error(Errc::NonFinite, "zero row or column: the germ is not finite");
  if (det() == 0) throw Error(Errc::NotDominant, "det = 0: the map is not dominant");
  if (group_) {
    group_ = make_cyclic_group(group_->n, group_->q);
    if (!is_equivariant(m_, *group_))
      throw Error(Errc::NotEquivariant,
                  "the map does not descend to (1/" + std::to_string(group_->n) +
                      ")(1," + std::to_string(group_->q) + ")");
  }
}

MonomialMap MonomialMap::identity(std::optional<CyclicGroup> group) {
  return MonomialMap(Exponents::Identity(), group);
}

MonomialMap MonomialMap::parse(std::string_view text,
                               std::optional<CyclicGroup> group) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw Error(Errc::Parse, "expected a,b,c,d but got '" + std::string(text) + "'");
  Exponents m;
  m << to_int64(parts[0]), to_int64(parts[1]), to_int64(parts[2]), to_int64(parts[3]);
  return MonomialMap(m, group);
}

std::string MonomialMap::to_string() const {
  auto mono = [](std::int64_t i, std::int64_t j) {
    std::string s;
    if (i) s += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) s += j == 1 ? "y" : "y^" + std::to_string(j);
    return s;
  };
  return "(" + mono(a(), b()) + ", " + mono(c(), d()) + ")";
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  std::optional<CyclicGroup> group = g.group();
  if (f.group() && g.group() &&
      (f.group()->n != g.group()->n || f.group()->q != g.group()->q))
    throw Error(Errc::BadParameters, "composing maps on different quotients");
  if (!group) group = f.group();
  return MonomialMap(f.matrix() * g.matrix(), group);
}

MonoVal make_monoval(Rat s, Rat t) {
  if (s < 0 || t < 0) throw Error(Errc::BadParameters, "weights must be non-negative");
  if (s == 0 && t == 0) throw Error(Errc::BadParameters, "weights are both zero");
  return {std::move(s), std::move(t)};
}

Rat maximal_ideal_value(const MonoVal& v, const std::optional<CyclicGroup>& group) {
  if (!group || group->n == 1) return std::min(v.s, v.t);
  // Minimal invariant monomials all have exponents in [0, n].
  std::optional<Rat> best;
  for (std::int64_t i = 0; i <= group->n; ++i)
    for (std::int64_t j = 0; j <= group->n; ++j) {
      if ((i == 0 && j == 0) || mod(i + group->q * j, group->n) != 0) continue;
      Rat val = Rat(i) * v.s + Rat(j) * v.t;
      if (!best || val < *best) best = std::move(val);
    }
  return *best;
}

bool is_normalized(const MonoVal& v, const std::optional<CyclicGroup>& group) {
  return maximal_ideal_value(v, group) == 1;
}

MonoVal normalize(const MonoVal& v, const std::optional<CyclicGroup>& group) {
  const Rat m = maximal_ideal_value(v, group);
  if (m == 0) throw Error(Errc::BadParameters, "valuation vanishes on the maximal ideal");
  return {v.s / m, v.t / m};
}

MonoVal push_valuation(const MonomialMap& f, const MonoVal& v) {
  return {f.a() * v.s + f.b() * v.t, f.c() * v.s + f.d() * v.t};
}

Rat contraction_rate(const MonomialMap& f, const MonoVal& v) {
  if (!is_normalized(v, f.group()))
    throw Error(Errc::BadParameters, "contraction rate needs a normalized valuation");
  return maximal_ideal_value(push_valuation(f, v), f.group());
}

JacobianDivisor jacobian_divisor(const MonomialMap& f) {
  return {f.det(), f.a() + f.c() - 1, f.b() + f.d() - 1};
}

JacobianReport verify_jacobian_formula(const MonomialMap& f, const MonoVal& v) {
  const MonoVal w = push_valuation(f, v);
  const JacobianDivisor jf = jacobian_divisor(f);
  JacobianReport r;
  r.lhs = thinness(w);
  r.rhs = thinness(v) + Rat(jf.ex) * v.s + Rat(jf.ey) * v.t;
  r.equal = r.lhs == r.rhs;
  return r;
}

TheoremBReport theoremB_case(const MonomialMap& f) {
  if (!f.group())
    throw Error(Errc::BadParameters, "the dichotomy check needs group data (n, q)");
  const CyclicGroup g = *f.group();
  TheoremBReport r;
  r.degree = f.topological_degree();
  r.trace = f.trace();
  r.det = f.det();
  r.jacobian = jacobian_divisor(f);
  r.quotient_verdict =
      g.n == 1 ? Verdict::Klt : classify(cyclic_quotient_graph(g.n, g.q)).verdict;

  std::ostringstream os;
  os << "e = " << r.degree << ", trace = " << r.trace << ", det = " << r.det << "; ";
  if (!r.jacobian.empty()) {
    r.which = TheoremBReport::Case::JacobianNonEmpty;
    r.klt_confirmed = r.quotient_verdict == Verdict::Klt;
    os << "JF non-empty, so the germ must be klt; the quotient is "
       << to_string(r.quotient_verdict) << (r.klt_confirmed ? " (confirmed)" : " (CONTRADICTION)");
  } else {
    // a + c = b + d = 1 with no zero row or column: a permutation matrix.
    r.which = TheoremBReport::Case::Invertible;
    os << "JF empty, F is invertible (e = 1); the dichotomy makes no claim";
  }
  r.description = os.str();
  return r;
}

SkewDegrees skew_degrees(std::int64_t e_fiber, std::int64_t e_base) {
  if (e_fiber < 1 || e_base < 1)
    throw Error(Errc::BadParameters, "degrees must be positive");
  return {e_fiber * e_base, std::max(e_fiber, e_base)};
}

}  // namespace singgraph
