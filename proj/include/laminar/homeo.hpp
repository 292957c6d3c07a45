#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "laminar/circle.hpp"

namespace laminar {

struct BackendMismatch : std::invalid_argument {
  BackendMismatch() : std::invalid_argument("mixing PL and Mobius maps") {}
};

// Raised when a PL map would contain a piece lying on the diagonal (a whole
// arc of fixed points) without being the identity.
struct DiagonalPiece : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Piecewise-linear homeomorphism of the angle circle.
//
// Stored as breakpoints (x_i, Y_i): x_0 < ... < x_{n-1} in [0,1), Y_i the
// values of a degree-one lift, strictly increasing with Y_{n-1} < Y_0 + 1 and
// 0 <= Y_0 < 1.  Consecutive collinear pieces are merged, so every stored
// breakpoint is a genuine slope change, except for rotations which keep the
// single breakpoint (0, F(0)).
class PLHomeo {
 public:
  using Point = std::pair<Rational, Rational>;

  PLHomeo() : PLHomeo(std::vector<Point>{{Rational(0), Rational(0)}}) {}
  // Pairs (x, y) in any order; x values distinct mod 1, y values cyclically
  // increasing once sorted by x.
  // With reject_diagonal false, maps with diagonal pieces are kept (only
  // used for equality tests of products).
  explicit PLHomeo(std::vector<Point> pairs, bool reject_diagonal = true);

  static PLHomeo compose(const PLHomeo& g, const PLHomeo& h, bool reject_diagonal = true);

  static PLHomeo rotation(const Rational& turns);

  const std::vector<Point>& breakpoints() const { return bp_; }
  std::size_t pieces() const { return bp_.size(); }
  Rational slope(std::size_t i) const;

  Rational lift(const Rational& t) const;  // F(t) for t in [0,1)
  Rational operator()(const Rational& t) const { return frac(lift(frac(t))); }

  PLHomeo inverse() const;
  bool is_identity() const;
  bool has_diagonal_piece() const;  // never true for maps built with rejection on
  // Finite list of fixed angles, sorted.  Identity handled by the caller.
  std::vector<Rational> fixed_angles() const;

  std::string str() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;
  friend auto operator<=>(const PLHomeo& a, const PLHomeo& b) { return a.bp_ <=> b.bp_; }

 private:
  std::size_t piece_of(const Rational& t) const;
  std::vector<Point> bp_;
};

// x -> (ax+b)/(cx+d) on the projective circle, det > 0, canonical up to scale.
class MobiusMap {
 public:
  MobiusMap() : MobiusMap(1, 0, 0, 1) {}
  MobiusMap(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }
  Integer trace() const { return a_ + d_; }
  // (a+d)^2 - 4 det: negative elliptic, zero parabolic, positive hyperbolic
  Integer discriminant() const;

  CirclePoint operator()(const CirclePoint& p) const;
  MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }
  bool is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  std::string str() const;

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
  friend auto operator<=>(const MobiusMap& x, const MobiusMap& y) {
    if (auto c = cmp(x.a_, y.a_); c != 0) return c <=> 0;
    if (auto c = cmp(x.b_, y.b_); c != 0) return c <=> 0;
    if (auto c = cmp(x.c_, y.c_); c != 0) return c <=> 0;
    return cmp(x.d_, y.d_) <=> 0;
  }

 private:
  Integer a_, b_, c_, d_;
};

MobiusMap operator*(const MobiusMap& g, const MobiusMap& h);

enum class MobiusType { Identity, Elliptic, Parabolic, Hyperbolic };
MobiusType classify(const MobiusMap& g);
const char* mobius_type_name(MobiusType t);

using CircleHomeo = std::variant<PLHomeo, MobiusMap>;

enum class FixedKind { Empty, Finite, WholeCircle };

struct FixedPointSet {
  FixedKind kind = FixedKind::Empty;
  std::vector<CirclePoint> points;  // sorted, duplicate free

  std::size_t count() const { return points.size(); }
  bool contains(const CirclePoint& p) const;
  bool whole() const { return kind == FixedKind::WholeCircle; }
  std::string str() const;
};

Model model_of(const CircleHomeo& g);
bool is_pl(const CircleHomeo& g);
CirclePoint apply(const CircleHomeo& g, const CirclePoint& p);
OpenInterval image(const CircleHomeo& g, const OpenInterval& I);
Leaf image(const CircleHomeo& g, const Leaf& l);
CircleHomeo compose(const CircleHomeo& g, const CircleHomeo& h);  // g after h
CircleHomeo inverse(const CircleHomeo& g);
CircleHomeo identity_like(const CircleHomeo& g);
bool is_identity(const CircleHomeo& g);
FixedPointSet fixed_points(const CircleHomeo& g);
bool commutes(const CircleHomeo& g, const CircleHomeo& h);
std::string to_string(const CircleHomeo& g);

}  // namespace laminar
