#pragma once

// Exact arithmetic: GMP-backed integers and rationals, and elements of a real
// quadratic field Q(sqrt d). Nothing in here uses floating point to decide
// anything; `to_double` exists for display only.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "singgraph/error.hpp"

namespace singgraph {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws Errc::Parse.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the value is an integer.
std::string to_string(const Rat& x);

inline bool is_integer(const Rat& x) {
  return boost::multiprecision::denominator(x) == 1;
}
Int floor(const Rat& x);
Int ceil(const Rat& x);
inline Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

double to_double(const Rat& x);

bool is_square_free(std::int64_t d);

/// Integer square root (floor) of a non-negative integer.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

/// p + q*sqrt(d) with d a square-free integer >= 2.
///
/// Values with different d never mix: arithmetic between them throws
/// Errc::MixedFields.
class QuadElem {
 public:
  QuadElem(std::int64_t d, Rat p, Rat q = Rat(0));

  /// Parses "p+qw", "p-qw", "qw", "p" where w stands for sqrt(d) and p, q are
  /// rationals in parse_rat syntax ("3+1w", "3/2+1/2w", "-w").
  static QuadElem parse(std::string_view text, std::int64_t d);

  std::int64_t d() const { return d_; }
  const Rat& rational_part() const { return p_; }
  const Rat& surd_part() const { return q_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  QuadElem conjugate() const { return {d_, p_, -q_}; }
  Rat norm() const { return p_ * p_ - q_ * q_ * d_; }
  Rat trace() const { return 2 * p_; }

  /// Exact sign of the real number p + q*sqrt(d) (first embedding).
  int sign() const;

  QuadElem operator-() const { return {d_, -p_, -q_}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

  /// Order of the first real embedding.
  friend bool operator<(const QuadElem& a, const QuadElem& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadElem& a, const QuadElem& b) { return b < a; }
  friend bool operator<=(const QuadElem& a, const QuadElem& b) {
    return !(b < a);
  }
  friend bool operator>=(const QuadElem& a, const QuadElem& b) {
    return !(a < b);
  }

  QuadElem pow(unsigned n) const;

  /// Real embeddings, display only.
  double embed_first() const;
  double embed_second() const { return conjugate().embed_first(); }

  /// "p+qw" with w = sqrt(d).
  std::string to_string() const;

 private:
  void check_field(const QuadElem& o) const;

  std::int64_t d_;
  Rat p_;
  Rat q_;
};

QuadElem operator*(const Rat& r, const QuadElem& x);

/// Largest integer not exceeding x, decided exactly.
Int floor(const QuadElem& x);

bool quad_is_totally_positive(const QuadElem& x);

/// True iff x lies in Z + Z*omega (omega irrational, same field as x).
bool quad_is_integral(const QuadElem& x, const QuadElem& omega);

/// True iff x is an algebraic integer, i.e. trace and norm are integers.
bool quad_is_algebraic_integer(const QuadElem& x);

inline Rat quad_norm(const QuadElem& x) { return x.norm(); }

}  // namespace singgraph
