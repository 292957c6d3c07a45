#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace laminar {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms.  Never build a two-argument mpq_class directly: GMP
// leaves it uncanonicalized.
inline Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

int sign(const Integer& x);
int sign(const Rational& x);

Integer floor_of(const Rational& x);
Rational frac(const Rational& x);  // x - floor(x), in [0,1)
bool is_integer(const Rational& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Sign of p + q*sqrt(d) for rationals p, q and a non-negative integer d.
int sign_of_surd(const Rational& p, const Rational& q, const Integer& d);

/// Exact real number (a + b*sqrt(d)) / c.
///
/// Canonical form: c > 0, gcd(a, b, c) = 1, and either b = 0 (then d = 1)
/// or d > 1 is free of square factors.  Square factors of d are stripped by
/// trial division up to 10^6 plus a perfect-square test on the cofactor, which
/// covers every discriminant the homeomorphism backends produce.  Equality and
/// ordering never rely on syntactic form: they go through an exact sign
/// computation, so two encodings of the same real compare equal.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), c_(1), d_(1) {}
  QuadraticSurd(const Rational& r);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(Integer a, Integer b, Integer d, Integer c);

  /// p + q*sqrt(d) for rationals p, q.
  static QuadraticSurd from_parts(const Rational& p, const Rational& q, const Integer& d);

  /// p + q*sqrt(like.d()); the radicand is already reduced, so no factoring.
  static QuadraticSurd in_field(const Rational& p, const Rational& q, const QuadraticSurd& like);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational rational_part() const { return ratio(a_, c_); }
  Rational surd_coefficient() const { return ratio(b_, c_); }
  /// Only valid when is_rational().
  Rational to_rational() const;

  Integer floor() const;
  double approx() const;

  friend int compare(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) == 0; }
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    return compare(x, y) <=> 0;
  }

  /// Literal form: `p/q` (or `p`) when rational, else `(a+b*sqrt(d))/c`.
  std::string str() const;

 private:
  void canonicalize(bool reduce_radicand);

  Integer a_, b_, c_, d_;
};

/// A rational strictly between x < y.  Prefers small denominators.
Rational rational_between(const QuadraticSurd& x, const QuadraticSurd& y);

}  // namespace laminar
