#include "singgraph/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace singgraph {

namespace mp = boost::multiprecision;

const char* to_string(Errc code) {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::BadParameters: return "BadParameters";
    case Errc::MixedFields: return "MixedFields";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotNegativeDefinite: return "NotNegativeDefinite";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonTermination: return "NonTermination";
    case Errc::NoSuchVertex: return "NoSuchVertex";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NotSameEdge: return "NotSameEdge";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::DegenerateCycle: return "DegenerateCycle";
    case Errc::NotTotallyPositive: return "NotTotallyPositive";
    case Errc::NotStabilizing: return "NotStabilizing";
    case Errc::NotIntegralNorm: return "NotIntegralNorm";
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::int64_t iteration_cap(std::int64_t fallback) {
  const char* env = std::getenv("SINGGRAPH_ITER_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return fallback;
  return v;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::BadParameters, "zero denominator");
  Rat r(num, den);
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Int parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(Errc::Parse, "not an integer: '" + std::string(s) + "'");
  Int v{std::string(s)};
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw Error(Errc::Parse, "bad denominator in '" + std::string(text) + "'");
  Int den(std::string{den_text});
  if (den == 0)
    throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& x) {
  if (is_integer(x)) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

Int floor(const Rat& x) {
  Int n = mp::numerator(x);
  Int d = mp::denominator(x);
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Int ceil(const Rat& x) { return -floor(Rat(-x)); }

double to_double(const Rat& x) { return x.convert_to<double>(); }

bool is_square_free(std::int64_t d) {
  if (d == 0) return false;
  if (d < 0) d = -d;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(Errc::BadParameters, "isqrt of a negative number");
  return mp::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// ---------------------------------------------------------------------------

QuadElem::QuadElem(std::int64_t d, Rat p, Rat q)
    : d_(d), p_(std::move(p)), q_(std::move(q)) {
  if (d < 2 || !is_square_free(d))
    throw Error(Errc::BadParameters,
                "quadratic field needs a square-free d >= 2, got " +
                    std::to_string(d));
}

QuadElem QuadElem::parse(std::string_view text, std::int64_t d) {
  if (text.empty()) throw Error(Errc::Parse, "empty quadratic element");
  std::string_view s = text;
  if (s.back() != 'w') return QuadElem(d, parse_rat(s));
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view ptext = split == std::string_view::npos ? "" : s.substr(0, split);
  std::string_view qtext = split == std::string_view::npos ? s : s.substr(split);
  Rat p = ptext.empty() ? Rat(0) : parse_rat(ptext);
  Rat q;
  if (qtext.empty() || qtext == "+") {
    q = 1;
  } else if (qtext == "-") {
    q = -1;
  } else {
    if (qtext.front() == '+') qtext.remove_prefix(1);
    q = parse_rat(qtext);
  }
  return QuadElem(d, std::move(p), std::move(q));
}

void QuadElem::check_field(const QuadElem& o) const {
  if (o.d_ != d_)
    throw Error(Errc::MixedFields, "mixing Q(sqrt " + std::to_string(d_) +
                                       ") with Q(sqrt " + std::to_string(o.d_) +
                                       ")");
}

int QuadElem::sign() const {
  int sp = p_.sign();
  int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with q^2 d; equality is impossible (d is
  // square-free and q != 0).
  Rat lhs = p_ * p_;
  Rat rhs = q_ * q_ * d_;
  return lhs > rhs ? sp : sq;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_field(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_field(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_field(o);
  Rat p = p_ * o.p_ + q_ * o.q_ * d_;
  Rat q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_field(o);
  Rat n = o.norm();
  if (n == 0) throw Error(Errc::BadParameters, "division by zero in Q(sqrt d)");
  *this *= o.conjugate();
  p_ /= n;
  q_ /= n;
  return *this;
}

QuadElem QuadElem::pow(unsigned n) const {
  QuadElem result(d_, Rat(1));
  QuadElem base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

double QuadElem::embed_first() const {
  return to_double(p_) + to_double(q_) * std::sqrt(static_cast<double>(d_));
}

std::string QuadElem::to_string() const {
  if (q_ == 0) return singgraph::to_string(p_);
  std::string out;
  if (p_ != 0) out = singgraph::to_string(p_);
  if (q_ > 0 && !out.empty()) out += "+";
  out += singgraph::to_string(q_) + "w";
  return out;
}

QuadElem operator*(const Rat& r, const QuadElem& x) {
  return QuadElem(x.d(), r * x.rational_part(), r * x.surd_part());
}

Int floor(const QuadElem& x) {
  if (x.is_rational()) return floor(x.rational_part());
  double approx = x.embed_first();
  Int m;
  if (std::isfinite(approx) && std::fabs(approx) < 1e15) {
    m = Int(static_cast<long long>(std::floor(approx)));
  } else {
    // Far outside double range for exact steps: bracket by bisection.
    Rat bound = abs(x.rational_part()) +
                abs(x.surd_part()) * Rat(x.d()) + 1;
    Int lo = -ceil(bound), hi = ceil(bound);
    while (hi - lo > 1) {
      Int mid = (lo + hi) / 2;
      if ((x - QuadElem(x.d(), Rat(mid))).sign() >= 0)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }
  while ((x - QuadElem(x.d(), Rat(m))).sign() < 0) m -= 1;
  while ((x - QuadElem(x.d(), Rat(m + 1))).sign() >= 0) m += 1;
  return m;
}

bool quad_is_totally_positive(const QuadElem& x) {
  return x.sign() > 0 && x.conjugate().sign() > 0;
}

bool quad_is_integral(const QuadElem& x, const QuadElem& omega) {
  if (omega.is_rational())
    throw Error(Errc::BadParameters, "order basis element must be irrational");
  if (x.d() != omega.d())
    throw Error(Errc::MixedFields, "element and order live in different fields");
  // x = a + b*omega  =>  b = x.q / omega.q, a = x.p - b*omega.p
  Rat b = x.surd_part() / omega.surd_part();
  if (!is_integer(b)) return false;
  Rat a = x.rational_part() - b * omega.rational_part();
  return is_integer(a);
}

bool quad_is_algebraic_integer(const QuadElem& x) {
  return is_integer(x.trace()) && is_integer(x.norm());
}

}  // namespace singgraph
