#include "laminar/examples.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace laminar {

namespace {

CirclePoint P(long v) { return CirclePoint::projective(QuadraticSurd(Rational(v))); }

}  // namespace

FiniteLamination sanov_seed() {
  const CirclePoint inf = CirclePoint::infinity();
  return FiniteLamination(Model::Projective, {Leaf(P(-1), P(0)), Leaf(P(0), P(1)), Leaf(P(1), inf), Leaf(inf, P(-1))});
}

PingPongTable sanov_table() {
  const CirclePoint inf = CirclePoint::infinity();
  return {OpenInterval(P(1), inf), OpenInterval(inf, P(-1)), OpenInterval(P(0), P(1)), OpenInterval(P(-1), P(0))};
}

Example sanov_example(std::size_t depth) {
  MarkedGroup G({{"a", MobiusMap(1, 2, 0, 1)}, {"b", MobiusMap(1, 0, 2, 1)}});
  OrbitResult orb = orbit_lamination(G, sanov_seed(), depth);
  if (!orb.unlinked()) throw std::logic_error("sanov orbit is linked");
  return {"sanov", G, orb.lamination, depth};
}

Example ideal_triangle_rotation(std::size_t n) {
  if (n < 3) throw std::invalid_argument("rotation example needs n >= 3");
  std::vector<Leaf> leaves;
  for (std::size_t k = 0; k < n; ++k)
    leaves.emplace_back(CirclePoint::angle(ratio(k, n)), CirclePoint::angle(ratio(k + 1, n)));
  MarkedGroup G({{"r", PLHomeo::rotation(ratio(1, n))}});
  return {"rotation", G, FiniteLamination(Model::Angle, leaves), n};
}

Leaf nested_seed(const MobiusMap& g) {
  if (classify(g) != MobiusType::Hyperbolic) throw std::invalid_argument("nested_attractor needs a hyperbolic map, got " + g.str());
  FixedPointSet fix = fixed_points(CircleHomeo(g));
  const CirclePoint& p = fix.points[0];
  const CirclePoint& q = fix.points[1];
  return Leaf(interior_point(OpenInterval(p, q)), interior_point(OpenInterval(q, p)));
}

FiniteLamination nested_attractor(const MobiusMap& g, std::size_t depth) {
  Leaf seed = nested_seed(g);
  MarkedGroup G({{"g", g}});
  return orbit_lamination(G, FiniteLamination(Model::Projective, {seed}), depth).lamination;
}

PlanarOrderTree pants_tree(std::size_t radius) {
  if (radius == 0) throw std::invalid_argument("pants tree radius must be >= 1");
  PlanarOrderTree T;
  T.add_vertex("c", VertexKind::Singular);
  // breadth first; each frontier vertex gets two children until the radius
  struct Pending {
    std::string name, parent;
    std::size_t dist;
  };
  std::vector<Pending> layer;
  for (int i = 0; i < 3; ++i) layer.push_back({"c" + std::to_string(i), "c", 1});
  std::vector<std::pair<std::string, std::vector<std::string>>> orders{{"c", {"c0", "c1", "c2"}}};
  while (!layer.empty()) {
    std::vector<Pending> next;
    for (const auto& p : layer) {
      bool end = p.dist == radius;
      T.add_vertex(p.name, end ? VertexKind::Ordinary : VertexKind::Singular);
      T.add_edge(p.parent, p.name);
      if (!end) {
        next.push_back({p.name + "0", p.name, p.dist + 1});
        next.push_back({p.name + "1", p.name, p.dist + 1});
        orders.push_back({p.name, {p.parent, p.name + "0", p.name + "1"}});
      }
    }
    layer = std::move(next);
  }
  for (const auto& [v, o] : orders) T.set_cyclic(v, o);
  T.finalize();
  return T;
}

Example pants_example(std::size_t radius) {
  MarkedGroup G({{"r", PLHomeo::rotation(ratio(1, 3))}});
  return {"pants", G, lamination_from_tree(pants_tree(radius)), radius};
}

std::vector<std::string> example_names() { return {"nested", "pants", "rotation", "sanov"}; }

Example make_example(const std::string& name, std::size_t depth) {
  if (name == "sanov") return sanov_example(depth);
  if (name == "rotation") return ideal_triangle_rotation(std::max<std::size_t>(depth, 3));  // depth is the polygon size
  if (name == "pants") return pants_example(depth);
  if (name == "nested") {
    MobiusMap g(2, 0, 0, 1);
    return {"nested", MarkedGroup({{"g", g}}), nested_attractor(g, depth), depth};
  }
  throw std::invalid_argument("unknown example '" + name + "'");
}

Rational random_angle(std::mt19937_64& rng, unsigned max_den) {
  std::uniform_int_distribution<unsigned> dd(1, max_den);
  unsigned q = dd(rng);
  std::uniform_int_distribution<unsigned> dn(0, q - 1);
  return ratio(dn(rng), q);
}

namespace {

std::vector<CirclePoint> random_points(std::mt19937_64& rng, std::size_t k, unsigned max_den) {
  std::set<Rational> s;
  while (s.size() < k) s.insert(random_angle(rng, max_den));
  std::vector<CirclePoint> out;
  for (const auto& r : s) out.push_back(CirclePoint::angle(r));
  return out;
}

void add_chords(std::mt19937_64& rng, const std::vector<CirclePoint>& pts, std::vector<Leaf>& leaves, std::size_t cap,
                std::size_t tries) {
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (std::size_t t = 0; t < tries && leaves.size() < cap; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Leaf l(pts[i], pts[j]);
    bool ok = true;
    for (const auto& m : leaves)
      if (m == l || !unlinked(m, l)) {
        ok = false;
        break;
      }
    if (ok) leaves.push_back(l);
  }
}

}  // namespace

FiniteLamination random_lamination(std::mt19937_64& rng, std::size_t max_leaves, unsigned max_den) {
  if (max_leaves == 0) throw std::invalid_argument("max_leaves must be positive");
  std::uniform_int_distribution<std::size_t> dk(2, std::max<std::size_t>(2, std::min<std::size_t>(2 * max_leaves, max_den)));
  std::uniform_int_distribution<std::size_t> dc(1, max_leaves);
  std::vector<Leaf> leaves;
  while (leaves.empty()) {
    auto pts = random_points(rng, dk(rng), max_den);
    add_chords(rng, pts, leaves, dc(rng), 8 * max_leaves);
  }
  return FiniteLamination(Model::Angle, leaves);
}

FiniteLamination random_triangulated(std::mt19937_64& rng, std::size_t corners, unsigned max_den) {
  if (corners < 3) throw std::invalid_argument("need at least three corners");
  if (corners > max_den) throw std::invalid_argument("too many corners for the denominator bound");
  auto pts = random_points(rng, corners, max_den);
  std::vector<Leaf> leaves;
  for (std::size_t i = 0; i < pts.size(); ++i) leaves.emplace_back(pts[i], pts[(i + 1) % pts.size()]);
  std::uniform_int_distribution<std::size_t> dd(0, corners - 3);
  add_chords(rng, pts, leaves, leaves.size() + dd(rng), 16 * corners);
  return FiniteLamination(Model::Angle, leaves);
}

PlanarOrderTree random_tree(std::mt19937_64& rng, std::size_t max_vertices) {
  if (max_vertices < 4) throw std::invalid_argument("random_tree needs max_vertices >= 4");
  std::uniform_int_distribution<std::size_t> dn(4, max_vertices);
  std::uniform_int_distribution<int> coin(0, 3);
  for (;;) {
    std::size_t n = dn(rng);
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    std::size_t ends = 0;
    for (const auto& a : adj) ends += a.size() == 1;
    if (ends < 3) continue;
    auto nm = [](std::size_t v) { return "v" + std::to_string(v); };
    PlanarOrderTree T;
    std::vector<VertexKind> kinds(n, VertexKind::Ordinary);
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[v].size() >= 2) {
        int c = coin(rng);
        kinds[v] = c < 2 ? VertexKind::Singular : c == 2 ? VertexKind::Cataclysm : VertexKind::Ordinary;
      }
      T.add_vertex(nm(v), kinds[v]);
    }
    for (std::size_t i = 1; i < n; ++i) T.add_edge(nm(i), nm(adj[i][0]));
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> order = adj[v];
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::string> names;
      for (auto w : order) names.push_back(nm(w));
      T.set_cyclic(nm(v), names);
      if (kinds[v] == VertexKind::Cataclysm) {
        std::size_t s = std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng);
        std::rotate(names.begin(), names.begin() + long(s), names.end());
        T.set_linear(nm(v), names);
      }
    }
    T.finalize();
    return T;
  }
}

PLHomeo random_pl(std::mt19937_64& rng, std::size_t max_pieces, unsigned max_den) {
  std::uniform_int_distribution<std::size_t> dk(1, max_pieces);
  for (;;) {
    std::size_t k = dk(rng);
    std::set<Rational> xs, ys;
    while (xs.size() < k) xs.insert(random_angle(rng, max_den));
    while (ys.size() < k) ys.insert(random_angle(rng, max_den));
    std::vector<Rational> yv(ys.begin(), ys.end());
    std::size_t s = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    std::rotate(yv.begin(), yv.begin() + long(s), yv.end());
    std::vector<PLHomeo::Point> pairs;
    std::size_t i = 0;
    for (const auto& x : xs) pairs.emplace_back(x, yv[i++]);
    try {
      PLHomeo g(pairs);
      if (!g.is_identity()) return g;
    } catch (const DiagonalPiece&) {
    }
  }
}

MobiusMap random_mobius(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    Integer a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a * e - b * c <= 0) continue;
    MobiusMap g(a, b, c, e);
    if (!g.is_identity()) return g;
  }
}

}  // namespace laminar
