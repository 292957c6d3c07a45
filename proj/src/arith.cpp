#include "laminar/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace laminar {

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int sign_of_surd(const Rational& p, const Rational& q, const Integer& d) {
  int sp = sgn(p);
  int sq = sgn(d) == 0 ? 0 : sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 against q^2 d
  Rational lhs = p * p;
  Rational rhs = q * q * Rational(d);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Largest k with k^2 | d, returning (k, d / k^2).
std::pair<Integer, Integer> extract_square(Integer d) {
  Integer k = 1;
  if (d <= 1) return {k, d};
  Integer s;
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    return {s, 1};
  }
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > d) break;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p * p) != 0) {
      d /= p * p;
      k *= p;
    }
  }
  if (d > 1 && mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    k *= s;
    d = 1;
  }
  return {k, d};
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& r) : a_(r.get_num()), b_(0), c_(r.get_den()), d_(1) {}

QuadraticSurd::QuadraticSurd(Integer a, Integer b, Integer d, Integer c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::invalid_argument("quadratic surd with zero denominator");
  if (d_ < 0) throw std::invalid_argument("quadratic surd with negative radicand");
  canonicalize(true);
}

QuadraticSurd QuadraticSurd::from_parts(const Rational& p, const Rational& q, const Integer& d) {
  if (q == 0 || d == 0) return QuadraticSurd(p);
  // p + q sqrt d = (pn qd + qn pd sqrt d) / (pd qd)
  Integer a = p.get_num() * q.get_den();
  Integer b = q.get_num() * p.get_den();
  Integer c = p.get_den() * q.get_den();
  return QuadraticSurd(a, b, d, c);
}

QuadraticSurd QuadraticSurd::in_field(const Rational& p, const Rational& q, const QuadraticSurd& like) {
  if (q == 0 || like.b_ == 0) return QuadraticSurd(p);
  QuadraticSurd r;
  r.a_ = p.get_num() * q.get_den();
  r.b_ = q.get_num() * p.get_den();
  r.c_ = p.get_den() * q.get_den();
  r.d_ = like.d_;
  r.canonicalize(false);
  return r;
}

void QuadraticSurd::canonicalize(bool reduce_radicand) {
  if (reduce_radicand && b_ != 0 && d_ > 1) {
    auto [k, rest] = extract_square(d_);
    b_ *= k;
    d_ = rest;
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 1;
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational QuadraticSurd::to_rational() const {
  if (b_ != 0) throw std::logic_error("irrational surd has no rational value");
  return ratio(a_, c_);
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  // x - y = (P + Q sqrt m) - (R + S sqrt n)
  Rational P = x.rational_part() - y.rational_part();
  Rational Q = x.surd_coefficient();
  Rational S = -y.surd_coefficient();
  const Integer& m = x.d();
  const Integer& n = y.d();
  if (Q == 0) return sign_of_surd(P, S, n);
  if (S == 0) return sign_of_surd(P, Q, m);
  if (m == n) return sign_of_surd(P, Q + S, m);
  // sign of s1 + s2 with s1 = P + Q sqrt m, s2 = S sqrt n
  int s1 = sign_of_surd(P, Q, m);
  int s2 = sgn(S);
  if (s1 == 0) return s2;
  if (s1 == s2) return s1;
  // opposite: compare s1^2 with s2^2; s1^2 = P^2 + Q^2 m + 2PQ sqrt m
  int t = sign_of_surd(P * P + Q * Q * Rational(m) - S * S * Rational(n), 2 * P * Q, m);
  if (t == 0) return 0;
  return t > 0 ? s1 : s2;
}

Integer QuadraticSurd::floor() const {
  if (b_ == 0) return floor_of(ratio(a_, c_));
  // floor(sqrt(b^2 d)) brackets b sqrt d within one unit
  Integer bb = b_ * b_ * d_;
  Integer r = isqrt(bb);
  Integer lo = b_ > 0 ? Integer(a_ + r) : Integer(a_ - r - 1);
  Integer guess = floor_of(ratio(lo, c_));
  // true value lies in [lo/c, (lo+1)/c); adjust guess by at most one step
  while (compare(QuadraticSurd(Rational(guess + 1)), *this) <= 0) guess += 1;
  while (compare(QuadraticSurd(Rational(guess)), *this) > 0) guess -= 1;
  return guess;
}

double QuadraticSurd::approx() const {
  double v = a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
  return v / c_.get_d();
}

std::string QuadraticSurd::str() const {
  if (b_ == 0) return to_string(ratio(a_, c_));
  std::string s = a_.get_str();
  s += (b_ < 0 ? "-" : "+");
  Integer ab = abs(b_);
  if (ab != 1) s += ab.get_str() + "*";
  s += "sqrt(" + d_.get_str() + ")";
  if (c_ == 1) return s;
  return "(" + s + ")/" + c_.get_str();
}

Rational rational_between(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (compare(x, y) >= 0) throw std::invalid_argument("rational_between needs x < y");
  for (int k = 0;; ++k) {
    Integer scale = Integer(1) << k;
    // smallest multiple of 1/2^k strictly above x
    QuadraticSurd xs = QuadraticSurd::in_field(x.rational_part() * scale, x.surd_coefficient() * scale, x);
    Rational cand(xs.floor() + 1, scale);
    cand.canonicalize();
    if (compare(QuadraticSurd(cand), y) < 0) return cand;
  }
}

}  // namespace laminar
