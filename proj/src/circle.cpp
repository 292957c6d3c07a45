#include "laminar/circle.hpp"

#include <algorithm>
#include <cmath>

namespace laminar {

const char* model_name(Model m) { return m == Model::Angle ? "angle" : "projective"; }

CirclePoint CirclePoint::angle(const Rational& turns) {
  return CirclePoint(Model::Angle, false, QuadraticSurd(frac(turns)));
}

CirclePoint CirclePoint::projective(const QuadraticSurd& x) { return CirclePoint(Model::Projective, false, x); }

CirclePoint CirclePoint::infinity() { return CirclePoint(Model::Projective, true, QuadraticSurd()); }

std::string CirclePoint::str() const {
  if (infinite_) return "inf";
  return value_.str();
}

int linear_compare(const CirclePoint& p, const CirclePoint& q) {
  if (p.model_ != q.model_) throw ModelMismatch();
  if (p.infinite_ || q.infinite_) return int(p.infinite_) - int(q.infinite_);
  return compare(p.value_, q.value_);
}

std::strong_ordering operator<=>(const CirclePoint& p, const CirclePoint& q) {
  if (p.model_ != q.model_) return p.model_ <=> q.model_;
  return linear_compare(p, q) <=> 0;
}

void require_same_model(const CirclePoint& a, const CirclePoint& b) {
  if (a.model() != b.model()) throw ModelMismatch();
}

int circular_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  int ab = linear_compare(a, b);
  int bc = linear_compare(b, c);
  int ca = linear_compare(c, a);
  if (ab == 0 || bc == 0 || ca == 0) return 0;
  int ascents = (ab < 0) + (bc < 0) + (ca < 0);
  return ascents == 2 ? 1 : -1;
}

void sort_cyclic(std::vector<CirclePoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const CirclePoint& x, const CirclePoint& y) { return linear_compare(x, y) < 0; });
}

OpenInterval::OpenInterval(CirclePoint u, CirclePoint v) : u_(std::move(u)), v_(std::move(v)) {
  require_same_model(u_, v_);
  if (u_ == v_) throw std::invalid_argument("open interval needs distinct endpoints: " + u_.str());
}

Interval interval(const CirclePoint& u, const CirclePoint& v) {
  require_same_model(u, v);
  if (u == v) return DegenerateInterval{u};
  return OpenInterval(u, v);
}

OpenInterval dual(const OpenInterval& I) { return I.dual(); }

OpenInterval dual(const Interval& I) {
  if (const auto* o = std::get_if<OpenInterval>(&I)) return o->dual();
  throw std::invalid_argument("degenerate interval has no dual");
}

bool subset(const OpenInterval& I, const OpenInterval& J) {
  const CirclePoint &a = I.u(), &b = I.v(), &c = J.u(), &d = J.v();
  require_same_model(a, c);
  bool a_in = a == c || circular_order(c, a, d) == 1;
  bool b_in = b == d || circular_order(c, b, d) == 1;
  if (!a_in || !b_in) return false;
  return a == c || b == d || circular_order(c, a, b) == 1;
}

bool closure_subset(const OpenInterval& I, const OpenInterval& J) {
  return J.contains(I.u()) && J.contains(I.v()) && circular_order(J.u(), I.u(), I.v()) == 1;
}

bool disjoint(const OpenInterval& I, const OpenInterval& J) { return subset(I, J.dual()); }

CirclePoint interior_point(const OpenInterval& I) {
  const CirclePoint &u = I.u(), &v = I.v();
  if (u.model() == Model::Angle) {
    Rational a = u.rational_value(), b = v.rational_value();
    if (b < a) b += 1;
    // prefer the simplest dyadic in the arc
    for (int k = 1;; ++k) {
      Rational step(1, Integer(1) << k);
      Rational cand = Rational(floor_of(a / step) + 1) * step;
      if (cand < b) return CirclePoint::angle(cand);
    }
  }
  if (u.is_infinite()) return CirclePoint::projective(Rational(v.value().floor() - 1));
  if (v.is_infinite()) return CirclePoint::projective(Rational(u.value().floor() + 1));
  if (compare(u.value(), v.value()) > 0) return CirclePoint::infinity();
  return CirclePoint::projective(rational_between(u.value(), v.value()));
}

Leaf::Leaf(const CirclePoint& u, const CirclePoint& v) : lo_(u), hi_(v) {
  require_same_model(u, v);
  int c = linear_compare(u, v);
  if (c == 0) throw std::invalid_argument("leaf needs distinct endpoints: " + u.str());
  if (c > 0) std::swap(lo_, hi_);
}

const char* lies_on_name(LiesOn r) {
  switch (r) {
    case LiesOn::No: return "no";
    case LiesOn::Lies: return "lies";
    case LiesOn::ProperlyLies: return "properly-lies";
  }
  return "?";
}

LiesOn lies_on(const Leaf& l, const OpenInterval& J) {
  OpenInterval I = l.first(), Is = l.second();
  if (closure_subset(I, J) || closure_subset(Is, J)) return LiesOn::ProperlyLies;
  if (subset(I, J) || subset(Is, J)) return LiesOn::Lies;
  return LiesOn::No;
}

bool unlinked(const Leaf& a, const Leaf& b) {
  return lies_on(a, b.first()) != LiesOn::No || lies_on(a, b.second()) != LiesOn::No;
}

std::optional<Rational> projective_to_turns(const CirclePoint& p) {
  if (p.model() == Model::Angle) return p.rational_value();
  if (p.is_infinite()) return Rational(0);
  if (!p.value().is_rational()) return std::nullopt;
  Rational x = p.rational_value();
  Rational t = ratio(1, 2) + x / (2 * (1 + abs(x)));
  t.canonicalize();
  return t;
}

double display_turns(const CirclePoint& p) {
  if (p.model() == Model::Angle) return p.value().approx();
  if (p.is_infinite()) return 0.0;
  double x = p.value().approx();
  return 0.5 + x / (2.0 * (1.0 + std::fabs(x)));
}

}  // namespace laminar
