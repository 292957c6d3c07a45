// Test helpers and independent oracles.  Nothing here calls the library's
// own order, gap or fixed-point code; the point is to disagree with it if it
// is wrong.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "laminar/examples.hpp"
#include "laminar/measure.hpp"

namespace t {

using namespace laminar;

inline Rational Q(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline CirclePoint A(const std::string& s) { return CirclePoint::angle(Q(s)); }
inline CirclePoint P(const std::string& s) {
  if (s == "inf") return CirclePoint::infinity();
  return CirclePoint::projective(QuadraticSurd(Q(s)));
}
inline OpenInterval IA(const std::string& u, const std::string& v) { return OpenInterval(A(u), A(v)); }
inline OpenInterval IP(const std::string& u, const std::string& v) { return OpenInterval(P(u), P(v)); }
inline Leaf LA(const std::string& u, const std::string& v) { return Leaf(A(u), A(v)); }
inline Leaf LP(const std::string& u, const std::string& v) { return Leaf(P(u), P(v)); }

inline FiniteLamination triangle() {
  return FiniteLamination(Model::Angle, {LA("0", "1/3"), LA("1/3", "2/3"), LA("2/3", "0")});
}

// ---- circular order --------------------------------------------------------

inline Rational turn(const Rational& x) {
  Rational f = x - Rational(floor_of(x));
  return f;
}

// angle model: measure b and c counterclockwise from a
inline int oracle_order_angle(const Rational& a, const Rational& b, const Rational& c) {
  if (a == b || b == c || a == c) return 0;
  return turn(b - a) < turn(c - a) ? 1 : -1;
}

// projective rationals with inf on top: parity of the sorting permutation
inline int oracle_order_proj(std::vector<std::pair<bool, Rational>> v) {
  auto less = [](const std::pair<bool, Rational>& x, const std::pair<bool, Rational>& y) {
    if (x.first != y.first) return !x.first;  // finite < inf
    return !x.first && x.second < y.second;
  };
  auto eq = [&](int i, int j) { return !less(v[i], v[j]) && !less(v[j], v[i]); };
  if (eq(0, 1) || eq(1, 2) || eq(0, 2)) return 0;
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += less(v[j], v[i]);
  return inversions % 2 == 0 ? 1 : -1;
}

// ---- unlinkedness ----------------------------------------------------------

// angle leaves: chords cross iff exactly one endpoint of m lies strictly
// between the endpoints of l, with no shared endpoints
inline bool oracle_unlinked(const Leaf& l, const Leaf& m) {
  Rational a = l.lo().rational_value(), b = l.hi().rational_value();
  Rational c = m.lo().rational_value(), d = m.hi().rational_value();
  if (a == c || a == d || b == c || b == d) return true;
  bool ci = a < c && c < b, di = a < d && d < b;
  return ci == di;
}

inline std::size_t oracle_linked_count(const FiniteLamination& L) {
  std::size_t n = 0;
  const auto& v = L.leaves();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) n += !oracle_unlinked(v[i], v[j]);
  return n;
}

// ---- faces of the chord diagram by half-edge walk --------------------------
//
// Vertices are the distinct endpoints in increasing turn order.  Edges are the
// circle arcs between consecutive vertices plus one edge per leaf.  Around a
// vertex the edges sorted counterclockwise are: arc to the next vertex, chords
// by increasing counterclockwise distance, arc to the previous vertex.  A face
// with its interior on the left continues, at each vertex, along the edge
// just clockwise of the one it arrived by.

struct OracleGap {
  GapKind kind;
  std::vector<OpenInterval> sides, arcs;
  friend bool operator<(const OracleGap& x, const OracleGap& y) {
    if (x.sides != y.sides) return x.sides < y.sides;
    return x.arcs < y.arcs;
  }
  friend bool operator==(const OracleGap& x, const OracleGap& y) {
    return x.kind == y.kind && x.sides == y.sides && x.arcs == y.arcs;
  }
};

inline std::vector<OracleGap> oracle_faces(const FiniteLamination& L) {
  std::vector<Rational> pts;
  for (const auto& l : L.leaves()) {
    pts.push_back(l.lo().rational_value());
    pts.push_back(l.hi().rational_value());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t m = pts.size();
  auto idx = [&](const Rational& r) { return std::size_t(std::lower_bound(pts.begin(), pts.end(), r) - pts.begin()); };

  struct Edge {
    std::size_t a, b;  // arcs go a -> b counterclockwise
    bool arc;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m, true});
  for (const auto& l : L.leaves()) edges.push_back({idx(l.lo().rational_value()), idx(l.hi().rational_value()), false});

  // rotation system: per vertex, (edge id, other end) in ccw order
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rot(m);
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t e = m; e < edges.size(); ++e) {
      if (edges[e].a == v) chords.push_back({e, edges[e].b});
      if (edges[e].b == v) chords.push_back({e, edges[e].a});
    }
    std::sort(chords.begin(), chords.end(), [&](auto x, auto y) { return (x.second + m - v) % m < (y.second + m - v) % m; });
    rot[v].push_back({v, (v + 1) % m});  // arc out
    for (auto c : chords) rot[v].push_back(c);
    rot[v].push_back({(v + m - 1) % m, (v + m - 1) % m});  // arc in
  }

  // half-edge = (edge, from); interior faces use arcs only in the ccw direction
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<OracleGap> out;
  auto other = [&](std::size_t e, std::size_t from) { return edges[e].a == from ? edges[e].b : edges[e].a; };
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    for (std::size_t from0 : {edges[e0].a, edges[e0].b}) {
      if (edges[e0].arc && from0 != edges[e0].a) continue;
      if (used.count({e0, from0})) continue;
      OracleGap g;
      std::size_t e = e0, from = from0;
      for (;;) {
        used.insert({e, from});
        std::size_t to = other(e, from);
        if (edges[e].arc)
          g.arcs.emplace_back(A(pts[from].get_str()), A(pts[to].get_str()));
        else
          g.sides.emplace_back(A(pts[from].get_str()), A(pts[to].get_str()));
        const auto& r = rot[to];
        std::size_t k = 0;
        while (r[k].first != e) ++k;
        auto nxt = r[(k + r.size() - 1) % r.size()];
        from = to;
        e = nxt.first;
        if (e == e0 && from == from0) break;
      }
      if (g.sides.size() == 1) {
        g.kind = GapKind::Leaf;
        g.sides.push_back(g.sides[0].dual());
      } else {
        g.kind = g.arcs.empty() ? GapKind::Polygon : GapKind::Bordered;
      }
      std::sort(g.sides.begin(), g.sides.end());
      std::sort(g.arcs.begin(), g.arcs.end());
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<OracleGap> as_oracle(const std::vector<Gap>& gs) {
  std::vector<OracleGap> out;
  for (const auto& g : gs) out.push_back({g.kind, g.sides, g.arcs});
  std::sort(out.begin(), out.end());
  return out;
}

// ---- quadratic surds -------------------------------------------------------

// c x^2 + (d-a) x - b = 0 with x = p + q sqrt(D), checked coefficientwise
inline bool oracle_mobius_fixed(const MobiusMap& g, const CirclePoint& x) {
  if (x.is_infinite()) return g.c() == 0;
  Rational p = x.value().rational_part(), q = x.value().surd_coefficient();
  Rational D(x.value().d());
  Rational a(g.a()), b(g.b()), c(g.c()), d(g.d());
  Rational rat = c * (p * p + q * q * D) + (d - a) * p - b;
  Rational irr = c * 2 * p * q + (d - a) * q;
  return rat == 0 && irr == 0;
}

// ---- small utilities -------------------------------------------------------

inline PLHomeo pl(std::vector<std::pair<std::string, std::string>> pts) {
  std::vector<PLHomeo::Point> v;
  for (auto& [x, y] : pts) v.emplace_back(Q(x), Q(y));
  return PLHomeo(v);
}

inline Rational pl_eval(const CircleHomeo& g, const Rational& x) {
  return laminar::apply(g, CirclePoint::angle(x)).rational_value();
}

}  // namespace t
