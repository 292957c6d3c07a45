#include "laminar/homeo.hpp"

#include <algorithm>
#include <set>

namespace laminar {

PLHomeo::PLHomeo(std::vector<Point> pairs, bool reject_diagonal) {
  if (pairs.empty()) throw std::invalid_argument("PL map needs at least one breakpoint");
  for (auto& [x, y] : pairs) {
    x = frac(x);
    y = frac(y);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i].first == pairs[i - 1].first) throw std::invalid_argument("PL map: repeated breakpoint x = " + to_string(pairs[i].first));

  std::vector<Point> lifted{pairs[0]};
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    Rational Y = pairs[i].second;
    const Rational& prev = lifted.back().second;
    if (Y <= prev) Y += Rational(floor_of(prev - Y) + 1);
    lifted.emplace_back(pairs[i].first, Y);
  }
  if (lifted.back().second >= lifted.front().second + 1)
    throw std::invalid_argument("PL map: y values are not cyclically increasing within one turn");

  const std::size_t n = lifted.size();
  auto slope_at = [&](std::size_t i) {
    const Point& p = lifted[i];
    Point q = i + 1 < n ? lifted[i + 1] : Point(lifted[0].first + 1, lifted[0].second + 1);
    return Rational((q.second - p.second) / (q.first - p.first));
  };
  std::vector<Rational> slopes(n);
  for (std::size_t i = 0; i < n; ++i) slopes[i] = slope_at(i);
  for (std::size_t i = 0; i < n; ++i)
    if (slopes[(i + n - 1) % n] != slopes[i]) bp_.push_back(lifted[i]);

  if (bp_.empty()) {
    // all slopes equal, hence 1: a rotation
    bp_.emplace_back(Rational(0), frac(lifted[0].second - lifted[0].first));
  } else {
    Integer shift = floor_of(bp_[0].second);
    for (auto& p : bp_) p.second -= Rational(shift);
  }

  if (reject_diagonal && has_diagonal_piece()) throw DiagonalPiece("PL map has a piece on the diagonal: " + str());
}

bool PLHomeo::has_diagonal_piece() const {
  if (is_identity()) return false;
  for (std::size_t i = 0; i < bp_.size(); ++i)
    if (slope(i) == 1 && is_integer(bp_[i].second - bp_[i].first)) return true;
  return false;
}

PLHomeo PLHomeo::rotation(const Rational& turns) { return PLHomeo({{Rational(0), frac(turns)}}); }

Rational PLHomeo::slope(std::size_t i) const {
  const std::size_t n = bp_.size();
  const Point& p = bp_[i];
  Point q = i + 1 < n ? bp_[i + 1] : Point(bp_[0].first + 1, bp_[0].second + 1);
  return (q.second - p.second) / (q.first - p.first);
}

std::size_t PLHomeo::piece_of(const Rational& t) const {
  auto it = std::upper_bound(bp_.begin(), bp_.end(), t, [](const Rational& v, const Point& p) { return v < p.first; });
  if (it == bp_.begin()) return bp_.size() - 1;
  return std::size_t(it - bp_.begin()) - 1;
}

Rational PLHomeo::lift(const Rational& t) const {
  std::size_t i = piece_of(t);
  Rational x = bp_[i].first, Y = bp_[i].second;
  if (t < x) {
    x -= 1;
    Y -= 1;
  }
  return Y + slope(i) * (t - x);
}

PLHomeo PLHomeo::inverse() const {
  std::vector<Point> pairs;
  pairs.reserve(bp_.size());
  for (const auto& [x, y] : bp_) pairs.emplace_back(y, x);
  return PLHomeo(std::move(pairs), false);
}

bool PLHomeo::is_identity() const { return bp_.size() == 1 && bp_[0].first == 0 && bp_[0].second == 0; }

std::vector<Rational> PLHomeo::fixed_angles() const {
  std::set<Rational> out;
  const std::size_t n = bp_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = slope(i);
    if (s == 1) continue;
    Rational x0 = bp_[i].first;
    Rational x1 = i + 1 < n ? bp_[i + 1].first : bp_[0].first + 1;
    Rational D0 = bp_[i].second - x0;
    Rational D1 = D0 + (s - 1) * (x1 - x0);
    Rational lo = D0 < D1 ? D0 : D1;
    Rational hi = D0 < D1 ? D1 : D0;
    Integer k = floor_of(lo);
    if (Rational(k) < lo) k += 1;
    for (; Rational(k) <= hi; k += 1) {
      Rational t = x0 + (Rational(k) - D0) / (s - 1);
      if (t >= x0 && t < x1) out.insert(frac(t));
    }
  }
  return {out.begin(), out.end()};
}

std::string PLHomeo::str() const {
  std::string s = "pl";
  for (const auto& [x, y] : bp_) s += " (" + to_string(x) + "," + to_string(frac(y)) + ")";
  return s;
}

PLHomeo PLHomeo::compose(const PLHomeo& g, const PLHomeo& h, bool reject_diagonal) {
  std::set<Rational> xs;
  for (const auto& p : h.bp_) xs.insert(p.first);
  PLHomeo hinv = h.inverse();
  for (const auto& p : g.bp_) xs.insert(hinv(p.first));
  std::vector<Point> pairs;
  pairs.reserve(xs.size());
  for (const auto& x : xs) pairs.emplace_back(x, g(h(x)));
  return PLHomeo(std::move(pairs), reject_diagonal);
}

MobiusMap::MobiusMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det() <= 0) throw std::invalid_argument("Mobius map needs positive determinant");
  Integer g = gcd(gcd(a_, b_), gcd(c_, d_));
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
    d_ /= g;
  }
  const Integer& first = a_ != 0 ? a_ : b_;
  if (first < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Integer MobiusMap::discriminant() const {
  Integer t = trace();
  return t * t - 4 * det();
}

CirclePoint MobiusMap::operator()(const CirclePoint& p) const {
  if (p.model() != Model::Projective) throw ModelMismatch();
  if (p.is_infinite()) {
    if (c_ == 0) return CirclePoint::infinity();
    return CirclePoint::projective(ratio(a_, c_));
  }
  const QuadraticSurd& x = p.value();
  Rational P = x.rational_part(), Q = x.surd_coefficient();
  Rational A(a_), B(b_), C(c_), D(d_);
  Rational N0 = A * P + B, N1 = A * Q;
  Rational D0 = C * P + D, D1 = C * Q;
  if (D0 == 0 && D1 == 0) return CirclePoint::infinity();
  if (Q == 0) return CirclePoint::projective(QuadraticSurd(N0 / D0));
  Rational m(x.d());
  Rational norm = D0 * D0 - D1 * D1 * m;
  Rational p0 = (N0 * D0 - N1 * D1 * m) / norm;
  Rational q0 = (N1 * D0 - N0 * D1) / norm;
  return CirclePoint::projective(QuadraticSurd::in_field(p0, q0, x));
}

std::string MobiusMap::str() const {
  return "mobius " + a_.get_str() + " " + b_.get_str() + " " + c_.get_str() + " " + d_.get_str();
}

MobiusMap operator*(const MobiusMap& g, const MobiusMap& h) {
  return MobiusMap(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(), g.c() * h.a() + g.d() * h.c(),
                   g.c() * h.b() + g.d() * h.d());
}

MobiusType classify(const MobiusMap& g) {
  if (g.is_identity()) return MobiusType::Identity;
  int s = sgn(g.discriminant());
  if (s < 0) return MobiusType::Elliptic;
  return s == 0 ? MobiusType::Parabolic : MobiusType::Hyperbolic;
}

const char* mobius_type_name(MobiusType t) {
  switch (t) {
    case MobiusType::Identity: return "identity";
    case MobiusType::Elliptic: return "elliptic";
    case MobiusType::Parabolic: return "parabolic";
    case MobiusType::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

bool FixedPointSet::contains(const CirclePoint& p) const {
  if (kind == FixedKind::WholeCircle) return true;
  return std::binary_search(points.begin(), points.end(), p);
}

std::string FixedPointSet::str() const {
  if (kind == FixedKind::WholeCircle) return "circle";
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].str();
  return s + "}";
}

Model model_of(const CircleHomeo& g) { return is_pl(g) ? Model::Angle : Model::Projective; }

bool is_pl(const CircleHomeo& g) { return std::holds_alternative<PLHomeo>(g); }

CirclePoint apply(const CircleHomeo& g, const CirclePoint& p) {
  if (const auto* pl = std::get_if<PLHomeo>(&g)) {
    if (p.model() != Model::Angle) throw ModelMismatch();
    return CirclePoint::angle((*pl)(p.rational_value()));
  }
  return std::get<MobiusMap>(g)(p);
}

OpenInterval image(const CircleHomeo& g, const OpenInterval& I) { return OpenInterval(apply(g, I.u()), apply(g, I.v())); }

Leaf image(const CircleHomeo& g, const Leaf& l) { return Leaf(apply(g, l.lo()), apply(g, l.hi())); }

CircleHomeo compose(const CircleHomeo& g, const CircleHomeo& h) {
  if (g.index() != h.index()) throw BackendMismatch();
  if (is_pl(g)) return PLHomeo::compose(std::get<PLHomeo>(g), std::get<PLHomeo>(h));
  return std::get<MobiusMap>(g) * std::get<MobiusMap>(h);
}

CircleHomeo inverse(const CircleHomeo& g) {
  if (const auto* pl = std::get_if<PLHomeo>(&g)) return pl->inverse();
  return std::get<MobiusMap>(g).inverse();
}

CircleHomeo identity_like(const CircleHomeo& g) {
  if (is_pl(g)) return PLHomeo();
  return MobiusMap();
}

bool is_identity(const CircleHomeo& g) {
  if (const auto* pl = std::get_if<PLHomeo>(&g)) return pl->is_identity();
  return std::get<MobiusMap>(g).is_identity();
}

FixedPointSet fixed_points(const CircleHomeo& g) {
  FixedPointSet out;
  if (is_identity(g)) {
    out.kind = FixedKind::WholeCircle;
    return out;
  }
  if (const auto* pl = std::get_if<PLHomeo>(&g)) {
    for (const auto& t : pl->fixed_angles()) out.points.push_back(CirclePoint::angle(t));
  } else {
    const MobiusMap& m = std::get<MobiusMap>(g);
    const Integer &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    if (c == 0) {
      out.points.push_back(CirclePoint::infinity());
      if (a != d) out.points.push_back(CirclePoint::projective(ratio(b, d - a)));
    } else {
      Integer disc = m.discriminant();
      if (disc == 0) {
        out.points.push_back(CirclePoint::projective(ratio(a - d, 2 * c)));
      } else if (disc > 0) {
        // roots of c x^2 + (d-a) x - b
        out.points.push_back(CirclePoint::projective(QuadraticSurd(a - d, 1, disc, 2 * c)));
        out.points.push_back(CirclePoint::projective(QuadraticSurd(a - d, -1, disc, 2 * c)));
      }
    }
    std::sort(out.points.begin(), out.points.end());
  }
  out.kind = out.points.empty() ? FixedKind::Empty : FixedKind::Finite;
  return out;
}

bool commutes(const CircleHomeo& g, const CircleHomeo& h) {
  if (g.index() != h.index()) throw BackendMismatch();
  if (is_pl(g)) {
    const auto& a = std::get<PLHomeo>(g);
    const auto& b = std::get<PLHomeo>(h);
    return PLHomeo::compose(a, b, false) == PLHomeo::compose(b, a, false);
  }
  return std::get<MobiusMap>(g) * std::get<MobiusMap>(h) == std::get<MobiusMap>(h) * std::get<MobiusMap>(g);
}

std::string to_string(const CircleHomeo& g) {
  if (const auto* pl = std::get_if<PLHomeo>(&g)) return pl->str();
  return std::get<MobiusMap>(g).str();
}

}  // namespace laminar
