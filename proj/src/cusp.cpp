#include "singgraph/cusp.hpp"

#include <algorithm>
#include <cmath>

namespace singgraph {

namespace mp = boost::multiprecision;

QuadLattice::QuadLattice(std::int64_t d, QuadElem omega)
    : d_(d), omega_(std::move(omega)) {
  if (omega_.d() != d)
    throw Error(Errc::MixedFields, "omega does not lie in Q(sqrt " + std::to_string(d) + ")");
  if (omega_.is_rational())
    throw Error(Errc::BadParameters, "omega must be irrational");
}

QuadLattice QuadLattice::sqrt_order(std::int64_t d) {
  return QuadLattice(d, QuadElem(d, Rat(0), Rat(1)));
}

QuadLattice QuadLattice::half_order(std::int64_t d) {
  if (d % 4 != 1)
    throw Error(Errc::BadParameters, "(1 + sqrt d)/2 is integral only for d = 1 mod 4");
  return QuadLattice(d, QuadElem(d, Rat(1, 2), Rat(1, 2)));
}

bool QuadLattice::stabilized_by(const QuadElem& x) const {
  return contains(x) && contains(x * omega_);
}

QuadElem fundamental_unit(std::int64_t d) {
  if (d < 2 || !is_square_free(d))
    throw Error(Errc::BadParameters, "d must be square-free and >= 2");
  const bool half = d % 4 == 1;
  const Int k = half ? 4 : 1;  // x^2 - d y^2 = +-k
  const std::int64_t cap = iteration_cap(10'000'000);
  for (std::int64_t y = 1; y <= cap; ++y) {
    const Int dy2 = Int(d) * y * y;
    for (const Int& rhs : {Int(dy2 - k), Int(dy2 + k)}) {
      if (rhs <= 0 || !is_perfect_square(rhs)) continue;
      const Int x = isqrt(rhs);
      if (half) return QuadElem(d, make_rat(x, 2), make_rat(Int(y), 2));
      return QuadElem(d, Rat(x), Rat(y));
    }
  }
  throw Error(Errc::SearchExhausted,
              "Pell search exhausted; raise SINGGRAPH_ITER_CAP");
}

QuadElem totally_positive_fundamental_unit(std::int64_t d) {
  QuadElem eta = fundamental_unit(d);
  return eta.norm() == 1 ? eta : eta * eta;
}

QuadElem fundamental_totally_positive_unit(const QuadLattice& lattice) {
  const QuadElem eta = totally_positive_fundamental_unit(lattice.d());
  QuadElem power = eta;
  const std::int64_t cap = iteration_cap(10'000);
  for (std::int64_t j = 1; j <= cap; ++j, power *= eta)
    if (lattice.stabilized_by(power)) return power;
  throw Error(Errc::SearchExhausted, "no power of the unit stabilises the lattice");
}

namespace {

using Bound = QuadElem;

// Lattice points a + b*omega with x in [x0, x1] and x' in [y0, y1].
std::vector<QuadElem> lattice_points_in_box(const QuadLattice& lattice, const Bound& x0,
                                            const Bound& x1, const Bound& y0,
                                            const Bound& y1) {
  const std::int64_t d = lattice.d();
  const QuadElem& w = lattice.omega();
  const double wx = w.embed_first(), wy = w.embed_second();
  const double delta = wx - wy;
  const double X0 = x0.embed_first(), X1 = x1.embed_first();
  const double Y0 = y0.embed_first(), Y1 = y1.embed_first();
  double blo = (X0 - Y1) / delta, bhi = (X1 - Y0) / delta;
  if (blo > bhi) std::swap(blo, bhi);
  const auto bmin = static_cast<long long>(std::floor(blo)) - 2;
  const auto bmax = static_cast<long long>(std::ceil(bhi)) + 2;

  const std::int64_t cap = iteration_cap(10'000'000);
  std::int64_t visited = 0;
  std::vector<QuadElem> out;
  for (long long b = bmin; b <= bmax; ++b) {
    const double bd = static_cast<double>(b);
    const double alo = std::max(X0 - bd * wx, Y0 - bd * wy);
    const double ahi = std::min(X1 - bd * wx, Y1 - bd * wy);
    if (alo > ahi + 4) continue;
    const auto amin = static_cast<long long>(std::floor(alo)) - 2;
    const auto amax = static_cast<long long>(std::ceil(ahi)) + 2;
    for (long long a = amin; a <= amax; ++a) {
      if (++visited > cap)
        throw Error(Errc::SearchExhausted, "lattice box search exceeded the cap");
      QuadElem n = QuadElem(d, Rat(a)) + Rat(b) * w;
      const QuadElem nc = n.conjugate();
      if (n < x0 || n > x1 || nc < y0 || nc > y1) continue;
      out.push_back(std::move(n));
    }
  }
  return out;
}

// The lattice point of least trace in N_+; a vertex of the hull since trace
// is a linear functional. 1 lies in N, so the minimum is at most 2.
QuadElem least_trace_point(const QuadLattice& lattice) {
  const std::int64_t d = lattice.d();
  const QuadElem zero(d, Rat(0)), two(d, Rat(2));
  std::optional<QuadElem> best;
  for (const auto& n : lattice_points_in_box(lattice, zero, two, zero, two)) {
    if (!quad_is_totally_positive(n)) continue;
    if (!best || n.trace() < best->trace() || (n.trace() == best->trace() && n < *best))
      best = n;
  }
  if (!best) throw Error(Errc::Internal, "1 is missing from the lattice");
  return *best;
}

// Coordinates (a, b) of n = a + b*omega.
std::pair<Int, Int> coordinates(const QuadElem& n, const QuadElem& omega) {
  const Rat b = n.surd_part() / omega.surd_part();
  const Rat a = n.rational_part() - b * omega.rational_part();
  return {mp::numerator(a), mp::numerator(b)};
}

// Least integer m with m*q - p totally positive.
Int least_positive_multiple(const QuadElem& q, const QuadElem& p) {
  const QuadElem r = p / q;
  const Int f1 = floor(r), f2 = floor(r.conjugate());
  return (f1 > f2 ? f1 : f2) + 1;
}

}  // namespace

CuspData klein_polygon(const QuadLattice& lattice) {
  CuspData c{fundamental_totally_positive_unit(lattice), 0, {}, {}};
  const QuadElem& eps = c.epsilon;
  const QuadElem& w = lattice.omega();
  const QuadElem n0 = least_trace_point(lattice);
  const QuadElem n_end = eps * n0;

  // The neighbour of n0 towards the first axis is the first totally positive
  // point on the line det(n0, .) = sign(w - w') parallel to n0.
  const auto [a0, b0] = coordinates(n0, w);
  Int g, x, y;  // a0 x + b0 y = g
  {
    Int r0 = a0, r1 = b0, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const Int qt = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, Int(r0 - qt * r1));
      std::tie(s0, s1) = std::make_pair(s1, Int(s0 - qt * s1));
      std::tie(t0, t1) = std::make_pair(t1, Int(t0 - qt * t1));
    }
    g = r0, x = s0, y = t0;
  }
  if (g != 1 && g != -1) throw Error(Errc::Internal, "hull vertex is not primitive");
  // (a1, b1) = sg (-y, x) gives a0 b1 - b0 a1 = orient.
  const int orient = w.surd_part() > 0 ? 1 : -1;
  const Int sg = g * orient;
  const QuadElem start = QuadElem(lattice.d(), Rat(Int(-y * sg))) + Rat(Int(x * sg)) * w;
  const QuadElem n1 = Rat(least_positive_multiple(n0, -start)) * n0 + start;

  std::vector<QuadElem> pts{n0, n1};
  const std::int64_t cap = iteration_cap(100'000);
  while (!(pts.back() == n_end)) {
    if (static_cast<std::int64_t>(pts.size()) > cap)
      throw Error(Errc::SearchExhausted, "hull walk exceeded the cap");
    if (pts.back() > n_end) throw Error(Errc::Internal, "hull walk overshot epsilon n_0");
    const QuadElem& p = pts[pts.size() - 2];
    const QuadElem& q = pts.back();
    pts.push_back(Rat(least_positive_multiple(q, p)) * q - p);
  }

  const std::size_t l = pts.size() - 1;
  c.period = static_cast<int>(l);
  const QuadElem eps_inv = QuadElem(lattice.d(), Rat(1)) / eps;
  for (std::size_t k = 0; k < l; ++k) {
    const QuadElem prev = k == 0 ? eps_inv * pts[l - 1] : pts[k - 1];
    const QuadElem ck = (prev + pts[k + 1]) / pts[k];
    if (!ck.is_rational() || !is_integer(ck.rational_part()))
      throw Error(Errc::Internal, "extremal points violate the integral recurrence");
    c.cycle.push_back(mp::numerator(ck.rational_part()).convert_to<std::int64_t>());
  }
  c.extremal = std::move(pts);
  if (std::all_of(c.cycle.begin(), c.cycle.end(), [](auto v) { return v == 2; }))
    throw Error(Errc::DegenerateCycle, "every c_k equals 2; no cusp singularity");
  return c;
}

Int cycle_trace(const std::vector<std::int64_t>& cycle) {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (std::int64_t ck : cycle) {
    // M * [[c, -1], [1, 0]]
    Int n00 = m00 * ck + m01, n01 = -m00;
    Int n10 = m10 * ck + m11, n11 = -m10;
    m00 = n00;
    m01 = n01;
    m10 = n10;
    m11 = n11;
  }
  return m00 + m11;
}

std::vector<std::string> check_cusp_data(const CuspData& c, const QuadLattice& lattice) {
  std::vector<std::string> bad;
  const QuadElem& eps = c.epsilon;
  if (!quad_is_totally_positive(eps)) bad.push_back("epsilon is not totally positive");
  if (eps.norm() != 1) bad.push_back("epsilon does not have norm 1");
  if (!lattice.stabilized_by(eps)) bad.push_back("epsilon N is not N");
  const std::size_t l = c.cycle.size();
  if (static_cast<std::size_t>(c.period) != l || c.extremal.size() != l + 1) {
    bad.push_back("period, cycle and extremal points disagree in length");
    return bad;
  }
  if (std::any_of(c.cycle.begin(), c.cycle.end(), [](auto v) { return v < 2; }))
    bad.push_back("some c_k < 2");
  if (std::none_of(c.cycle.begin(), c.cycle.end(), [](auto v) { return v >= 3; }))
    bad.push_back("no c_k >= 3");
  if (!(c.extremal[l] == eps * c.extremal[0])) bad.push_back("n_l != epsilon n_0");
  for (const auto& n : c.extremal)
    if (!lattice.contains(n) || !quad_is_totally_positive(n))
      bad.push_back("extremal point " + n.to_string() + " not in N_+");
  auto at = [&](std::ptrdiff_t k) {
    // n_{k + j l} = epsilon^j n_k
    const auto L = static_cast<std::ptrdiff_t>(l);
    std::ptrdiff_t j = 0;
    while (k < 0) k += L, --j;
    while (k >= L) k -= L, ++j;
    QuadElem n = c.extremal[static_cast<std::size_t>(k)];
    const QuadElem e = j >= 0 ? eps : QuadElem(eps.d(), Rat(1)) / eps;
    for (std::ptrdiff_t s = 0; s < (j >= 0 ? j : -j); ++s) n *= e;
    return n;
  };
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(l); ++k) {
    const Rat ck(c.cycle[static_cast<std::size_t>(k)]);
    if (!(at(k - 1) + at(k + 1) == ck * at(k)))
      bad.push_back("n_{k-1} + n_{k+1} != c_k n_k at k = " + std::to_string(k));
    // consecutive extremal points form a basis of N
    const QuadElem& w = lattice.omega();
    const QuadElem p = at(k), q = at(k + 1);
    const Rat pb = p.surd_part() / w.surd_part(), qb = q.surd_part() / w.surd_part();
    const Rat pa = p.rational_part() - pb * w.rational_part();
    const Rat qa = q.rational_part() - qb * w.rational_part();
    const Rat det = pa * qb - pb * qa;
    if (det != 1 && det != -1)
      bad.push_back("n_k, n_{k+1} is not a basis of N at k = " + std::to_string(k));
  }
  if (!(QuadElem(eps.d(), Rat(cycle_trace(c.cycle))) == eps + eps.conjugate()))
    bad.push_back("trace of the monodromy differs from epsilon + epsilon'");
  return bad;
}

DualGraph cusp_dual_graph(const std::vector<std::int64_t>& cycle) {
  if (cycle.empty()) throw Error(Errc::BadParameters, "empty cusp cycle");
  for (auto ck : cycle)
    if (ck < 2) throw Error(Errc::BadParameters, "cusp cycle entries must be >= 2");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  const std::size_t l = cycle.size();
  if (l == 1) {
    vs.push_back({"C0", static_cast<int>(2 - cycle[0]), 0, 1, {}});
    return DualGraph(std::move(vs), {});
  }
  for (std::size_t k = 0; k < l; ++k)
    vs.push_back({"C" + std::to_string(k), static_cast<int>(-cycle[k]), 0, 0, {}});
  for (std::size_t k = 0; k < l; ++k) es.push_back({k, (k + 1) % l});
  return DualGraph(std::move(vs), std::move(es));
}

std::optional<std::int64_t> discrete_log(const QuadElem& x, const QuadElem& unit) {
  if (!(unit > QuadElem(unit.d(), Rat(1))))
    throw Error(Errc::BadParameters, "discrete_log needs a unit > 1");
  if (x.sign() <= 0) return std::nullopt;
  const QuadElem one(x.d(), Rat(1));
  constexpr std::int64_t kCap = 256;
  QuadElem cur = x;
  std::int64_t k = 0;
  if (cur > one) {
    while (cur > one && k < kCap) {
      cur /= unit;
      ++k;
    }
  } else {
    while (cur < one && k > -kCap) {
      cur *= unit;
      --k;
    }
  }
  if (cur == one) return k;
  return std::nullopt;
}

RotationNumber rotation_number(const QuadLattice& lattice, const QuadElem& alpha) {
  if (!quad_is_totally_positive(alpha))
    throw Error(Errc::NotTotallyPositive, alpha.to_string() + " is not totally positive");
  if (!lattice.stabilized_by(alpha))
    throw Error(Errc::NotStabilizing, "alpha N is not contained in N");

  RotationNumber r{false, std::nullopt, alpha / alpha.conjugate(), {}};
  if (!quad_is_algebraic_integer(r.ratio)) {
    r.description = "irrational: alpha/alpha' = " + r.ratio.to_string() +
                    " is not integral, so none of its powers is a power of epsilon";
    return r;
  }
  // ratio has norm 1 and is totally positive, so it is a power of eta; so is
  // epsilon. rho = k / (2 j).
  const QuadElem eta = totally_positive_fundamental_unit(lattice.d());
  const QuadElem eps = fundamental_totally_positive_unit(lattice);
  const auto k = discrete_log(r.ratio, eta);
  const auto j = discrete_log(eps, eta);
  if (!k || !j || *j == 0)
    throw Error(Errc::Internal, "discrete logarithm failed for an integral unit");
  r.rational = true;
  r.value = Rat(*k) / (2 * *j);
  r.description = "rational: " + to_string(*r.value);
  return r;
}

Int topological_degree(const QuadElem& alpha) {
  if (!quad_is_totally_positive(alpha))
    throw Error(Errc::NotTotallyPositive, alpha.to_string() + " is not totally positive");
  const Rat n = alpha.norm();
  if (!is_integer(n))
    throw Error(Errc::NotIntegralNorm, "norm " + to_string(n) + " is not an integer");
  return mp::numerator(n);
}

}  // namespace singgraph
