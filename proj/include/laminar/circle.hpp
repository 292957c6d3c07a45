#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "laminar/arith.hpp"

namespace laminar {

enum class Model { Angle, Projective };

const char* model_name(Model m);

struct ModelMismatch : std::invalid_argument {
  ModelMismatch() : std::invalid_argument("points from different coordinate models") {}
};

// A point of S^1 in one of two exact models.
//   Angle:      rational turns in [0,1), counterclockwise increasing.
//   Projective: element of Q(sqrt d) or inf; the circle order is the order
//               of R closed up at inf.
class CirclePoint {
 public:
  CirclePoint() : CirclePoint(angle(0)) {}

  static CirclePoint angle(const Rational& turns);
  static CirclePoint projective(const QuadraticSurd& x);
  static CirclePoint infinity();

  Model model() const { return model_; }
  bool is_infinite() const { return infinite_; }
  // Angle model: the turn value.  Projective: the coordinate (undefined at inf).
  const QuadraticSurd& value() const { return value_; }
  bool is_rational() const { return infinite_ || value_.is_rational(); }
  Rational rational_value() const { return value_.to_rational(); }

  std::string str() const;

  // Linear order inside one model (inf is last).  Throws ModelMismatch.
  friend int linear_compare(const CirclePoint& p, const CirclePoint& q);

  // Total order over all points (model first), for use as container keys.
  friend std::strong_ordering operator<=>(const CirclePoint& p, const CirclePoint& q);
  friend bool operator==(const CirclePoint& p, const CirclePoint& q) {
    return (p <=> q) == std::strong_ordering::equal;
  }

 private:
  CirclePoint(Model m, bool inf, QuadraticSurd v) : model_(m), infinite_(inf), value_(std::move(v)) {}

  Model model_;
  bool infinite_;
  QuadraticSurd value_;
};

void require_same_model(const CirclePoint& a, const CirclePoint& b);

// phi(a,b,c): +1 when a,b,c are distinct and counterclockwise, -1 when
// clockwise, 0 when two coincide.
int circular_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

// Sorts points counterclockwise starting from the smallest linear value.
void sort_cyclic(std::vector<CirclePoint>& pts);

class OpenInterval {
 public:
  OpenInterval(CirclePoint u, CirclePoint v);

  const CirclePoint& u() const { return u_; }
  const CirclePoint& v() const { return v_; }
  Model model() const { return u_.model(); }

  bool contains(const CirclePoint& p) const { return circular_order(u_, p, v_) == 1; }
  bool closure_contains(const CirclePoint& p) const { return p == u_ || p == v_ || contains(p); }
  OpenInterval dual() const { return OpenInterval(v_, u_); }

  std::string str() const { return "(" + u_.str() + "," + v_.str() + ")"; }

  friend auto operator<=>(const OpenInterval&, const OpenInterval&) = default;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;

 private:
  CirclePoint u_, v_;
};

// S^1 minus one point.
struct DegenerateInterval {
  CirclePoint puncture;
  bool contains(const CirclePoint& p) const { return !(p == puncture); }
};

using Interval = std::variant<OpenInterval, DegenerateInterval>;

Interval interval(const CirclePoint& u, const CirclePoint& v);
OpenInterval dual(const OpenInterval& I);
OpenInterval dual(const Interval& I);  // throws on the degenerate variant

bool subset(const OpenInterval& I, const OpenInterval& J);
bool closure_subset(const OpenInterval& I, const OpenInterval& J);  // closure(I) inside J
bool disjoint(const OpenInterval& I, const OpenInterval& J);

// A point strictly inside I with small height; rational in both models
// (may be inf in the projective model).
CirclePoint interior_point(const OpenInterval& I);

// Unordered pair {I, I*} with endpoints stored linearly sorted.
class Leaf {
 public:
  Leaf(const CirclePoint& u, const CirclePoint& v);
  explicit Leaf(const OpenInterval& I) : Leaf(I.u(), I.v()) {}

  const CirclePoint& lo() const { return lo_; }
  const CirclePoint& hi() const { return hi_; }
  Model model() const { return lo_.model(); }
  OpenInterval first() const { return OpenInterval(lo_, hi_); }
  OpenInterval second() const { return OpenInterval(hi_, lo_); }
  bool has_endpoint(const CirclePoint& p) const { return p == lo_ || p == hi_; }
  bool is_element(const OpenInterval& I) const { return I == first() || I == second(); }

  std::string str() const { return "{" + lo_.str() + "," + hi_.str() + "}"; }

  friend auto operator<=>(const Leaf&, const Leaf&) = default;
  friend bool operator==(const Leaf&, const Leaf&) = default;

 private:
  CirclePoint lo_, hi_;
};

enum class LiesOn { No, Lies, ProperlyLies };
const char* lies_on_name(LiesOn r);

LiesOn lies_on(const Leaf& l, const OpenInterval& J);
bool unlinked(const Leaf& a, const Leaf& b);

// Monotone chart from the projective model to turns: x -> 1/2 + x/(2(1+|x|)),
// inf -> 0.  Exact for rational points; nullopt for irrational surds.
std::optional<Rational> projective_to_turns(const CirclePoint& p);
// Floating version for display only.
double display_turns(const CirclePoint& p);

}  // namespace laminar
