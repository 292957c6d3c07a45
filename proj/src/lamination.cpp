#include "laminar/lamination.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace laminar {

FiniteLamination::FiniteLamination(Model m, std::vector<Leaf> leaves) : model_(m), leaves_(std::move(leaves)) {
  for (const auto& l : leaves_)
    if (l.model() != model_) throw ModelMismatch();
  std::sort(leaves_.begin(), leaves_.end());
  leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
}

bool FiniteLamination::contains(const Leaf& l) const { return std::binary_search(leaves_.begin(), leaves_.end(), l); }

std::optional<std::size_t> FiniteLamination::index_of(const Leaf& l) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), l);
  if (it == leaves_.end() || !(*it == l)) return std::nullopt;
  return std::size_t(it - leaves_.begin());
}

namespace {

struct Diagram {
  std::vector<CirclePoint> pts;
  std::vector<std::pair<std::size_t, std::size_t>> chord;  // per leaf, i < j
  std::vector<std::size_t> order;                         // by (a asc, b desc)
};

std::size_t index_in(const std::vector<CirclePoint>& pts, const CirclePoint& p) {
  return std::size_t(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
}

Diagram build_diagram(const FiniteLamination& L) {
  Diagram d;
  for (const auto& l : L.leaves()) {
    d.pts.push_back(l.lo());
    d.pts.push_back(l.hi());
  }
  std::sort(d.pts.begin(), d.pts.end());
  d.pts.erase(std::unique(d.pts.begin(), d.pts.end()), d.pts.end());
  for (const auto& l : L.leaves()) d.chord.emplace_back(index_in(d.pts, l.lo()), index_in(d.pts, l.hi()));
  d.order.resize(d.chord.size());
  for (std::size_t i = 0; i < d.order.size(); ++i) d.order[i] = i;
  std::sort(d.order.begin(), d.order.end(), [&](std::size_t x, std::size_t y) {
    if (d.chord[x].first != d.chord[y].first) return d.chord[x].first < d.chord[y].first;
    return d.chord[x].second > d.chord[y].second;
  });
  return d;
}

// Parent of each chord in the nesting forest, or npos for top level.  Returns
// false on the first crossing.
constexpr std::size_t npos = std::size_t(-1);

bool nest(const Diagram& d, std::vector<std::size_t>& parent) {
  parent.assign(d.chord.size(), npos);
  std::vector<std::size_t> stack;
  for (std::size_t k : d.order) {
    auto [a, b] = d.chord[k];
    while (!stack.empty() && d.chord[stack.back()].second <= a) stack.pop_back();
    if (!stack.empty()) {
      if (b > d.chord[stack.back()].second) return false;
      parent[k] = stack.back();
    }
    stack.push_back(k);
  }
  return true;
}

}  // namespace

bool is_valid(const FiniteLamination& L) {
  Diagram d = build_diagram(L);
  std::vector<std::size_t> parent;
  return nest(d, parent);
}

ValidationReport validate(const FiniteLamination& L) {
  ValidationReport r;
  if (is_valid(L)) return r;
  const auto& ls = L.leaves();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    OpenInterval I = ls[i].first();
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (unlinked(ls[i], ls[j])) continue;
      const Leaf& m = ls[j];
      if (I.contains(m.lo()))
        r.linked.push_back({ls[i], m, m.lo(), m.hi()});
      else
        r.linked.push_back({ls[i], m, m.hi(), m.lo()});
    }
  }
  return r;
}

std::vector<Face> faces(const FiniteLamination& L) {
  if (L.empty()) throw std::invalid_argument("empty lamination has no gaps");
  Diagram d = build_diagram(L);
  std::vector<std::size_t> parent;
  if (!nest(d, parent)) throw std::invalid_argument("lamination has linked leaves");
  const auto& P = d.pts;

  std::vector<std::vector<std::size_t>> children(d.chord.size());
  std::vector<std::size_t> top;
  for (std::size_t k : d.order) {
    if (parent[k] == npos)
      top.push_back(k);
    else
      children[parent[k]].push_back(k);
  }

  std::vector<Face> out;
  Face root;
  for (std::size_t i = 0; i < top.size(); ++i) {
    auto [a, b] = d.chord[top[i]];
    root.leaves.push_back(top[i]);
    root.away.emplace_back(P[a], P[b]);
    if (i + 1 < top.size() && d.chord[top[i + 1]].first > b) root.arcs.emplace_back(P[b], P[d.chord[top[i + 1]].first]);
  }
  root.arcs.emplace_back(P[d.chord[top.back()].second], P[d.chord[top.front()].first]);
  out.push_back(std::move(root));

  for (std::size_t k : d.order) {
    auto [a, b] = d.chord[k];
    Face f;
    f.leaves.push_back(k);
    f.away.emplace_back(P[b], P[a]);
    std::size_t pos = a;
    for (std::size_t c : children[k]) {
      auto [ca, cb] = d.chord[c];
      if (ca > pos) f.arcs.emplace_back(P[pos], P[ca]);
      f.leaves.push_back(c);
      f.away.emplace_back(P[ca], P[cb]);
      pos = cb;
    }
    if (pos < b) f.arcs.emplace_back(P[pos], P[b]);
    out.push_back(std::move(f));
  }
  return out;
}

const char* gap_kind_name(GapKind k) {
  switch (k) {
    case GapKind::Leaf: return "leaf";
    case GapKind::Polygon: return "polygon";
    case GapKind::Bordered: return "bordered";
  }
  return "?";
}

bool Gap::has_side(const OpenInterval& I) const { return std::binary_search(sides.begin(), sides.end(), I); }

bool Gap::in_vertex_set(const CirclePoint& p) const {
  return std::none_of(sides.begin(), sides.end(), [&](const OpenInterval& s) { return s.contains(p); });
}

std::string Gap::str() const {
  std::string s = gap_kind_name(kind);
  s += " [";
  for (std::size_t i = 0; i < sides.size(); ++i) s += (i ? " " : "") + sides[i].str();
  s += "]";
  if (!arcs.empty()) {
    s += " arcs [";
    for (std::size_t i = 0; i < arcs.size(); ++i) s += (i ? " " : "") + arcs[i].str();
    s += "]";
  }
  return s;
}

namespace {

std::vector<CirclePoint> corners_of(const std::vector<OpenInterval>& sides) {
  std::vector<CirclePoint> v;
  for (const auto& s : sides) {
    v.push_back(s.u());
    v.push_back(s.v());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Gap gap_of(const Face& f) {
  Gap g;
  g.arcs = f.arcs;
  std::sort(g.arcs.begin(), g.arcs.end());
  if (f.away.size() == 1) {
    g.kind = GapKind::Leaf;
    g.sides = {f.away[0], f.away[0].dual()};
  } else {
    g.kind = f.arcs.empty() ? GapKind::Polygon : GapKind::Bordered;
    g.sides = f.away;
  }
  std::sort(g.sides.begin(), g.sides.end());
  g.vertices = corners_of(g.sides);
  return g;
}

Gap polygon_gap(std::vector<CirclePoint> corners) {
  sort_cyclic(corners);
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  if (corners.size() < 3) throw std::invalid_argument("polygon needs at least three corners");
  Gap g;
  g.kind = GapKind::Polygon;
  for (std::size_t i = 0; i < corners.size(); ++i) g.sides.emplace_back(corners[i], corners[(i + 1) % corners.size()]);
  std::sort(g.sides.begin(), g.sides.end());
  g.vertices = corners;
  return g;
}

std::vector<Gap> gaps(const FiniteLamination& L) {
  std::vector<Gap> out;
  for (const auto& f : faces(L)) out.push_back(gap_of(f));
  std::sort(out.begin(), out.end());
  return out;
}

const char* rainbow_kind_name(RainbowResult::Kind k) {
  switch (k) {
    case RainbowResult::Kind::EndpointWitness: return "endpoint";
    case RainbowResult::Kind::Rainbow: return "rainbow";
    case RainbowResult::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Number of endpoints strictly inside J; strictly monotone under strict inclusion.
std::size_t inner_count(const std::vector<CirclePoint>& pts, const OpenInterval& J) {
  std::size_t iu = index_in(pts, J.u()), iv = index_in(pts, J.v());
  if (iu < iv) return iv - iu - 1;
  return pts.size() - iu - 1 + iv;
}

std::vector<CirclePoint> endpoint_list(const FiniteLamination& L) {
  std::vector<CirclePoint> pts;
  for (const auto& l : L.leaves()) {
    pts.push_back(l.lo());
    pts.push_back(l.hi());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

RainbowResult rainbow_search(const FiniteLamination& L, const CirclePoint& p, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("rainbow depth must be positive");
  if (p.model() != L.model()) throw ModelMismatch();
  RainbowResult r;
  for (const auto& l : L.leaves()) {
    if (l.has_endpoint(p)) {
      r.kind = RainbowResult::Kind::EndpointWitness;
      r.witness = l;
      return r;
    }
  }
  std::vector<CirclePoint> pts = endpoint_list(L);
  std::vector<std::pair<std::size_t, OpenInterval>> around;
  for (const auto& l : L.leaves()) {
    OpenInterval I = l.first().contains(p) ? l.first() : l.second();
    around.emplace_back(inner_count(pts, I), I);
  }
  std::sort(around.begin(), around.end());
  const std::size_t k = around.size();
  std::vector<std::size_t> best(k, 1), prev(k, npos);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (around[j].first < around[i].first && best[j] + 1 > best[i] && closure_subset(around[j].second, around[i].second)) {
        best[i] = best[j] + 1;
        prev[i] = j;
      }
  std::size_t top = npos;
  for (std::size_t i = 0; i < k; ++i)
    if (top == npos || best[i] > best[top]) top = i;
  for (std::size_t i = top; i != npos; i = prev[i]) r.chain.push_back(around[i].second);
  r.full_length = r.chain.size();
  if (r.chain.size() > depth) r.chain.erase(r.chain.begin(), r.chain.end() - std::ptrdiff_t(depth));
  r.kind = r.full_length >= depth ? RainbowResult::Kind::Rainbow : RainbowResult::Kind::Inconclusive;
  return r;
}

std::vector<OpenInterval> chain(const FiniteLamination& L, const CirclePoint& p, const OpenInterval& I) {
  if (!I.contains(p)) throw std::invalid_argument("chain base point must lie in I");
  std::vector<CirclePoint> pts = endpoint_list(L);
  std::vector<std::pair<std::size_t, OpenInterval>> c;
  for (const auto& l : L.leaves())
    for (const OpenInterval& J : {l.first(), l.second()})
      if (J.contains(p) && subset(J, I)) c.emplace_back(inner_count(pts, J), J);
  std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<OpenInterval> out;
  for (auto& [n, J] : c) out.push_back(J);
  return out;
}

IsolationEvidence isolation_evidence(const FiniteLamination& L, const OpenInterval& I) {
  auto idx = L.index_of(Leaf(I));
  if (!idx) throw std::invalid_argument("l(I) is not a leaf of the lamination: " + I.str());
  std::vector<Face> fs = faces(L);
  // facing[k][s]: face lying inside element s of leaf k (s = 0 first, 1 second)
  std::vector<std::array<std::size_t, 2>> facing(L.size(), {npos, npos});
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (std::size_t i = 0; i < fs[f].leaves.size(); ++i) {
      std::size_t k = fs[f].leaves[i];
      int s = fs[f].away[i] == L.leaves()[k].first() ? 1 : 0;
      facing[k][s] = f;
    }
  auto face_inside = [&](std::size_t k, const OpenInterval& X) { return facing[k][X == L.leaves()[k].first() ? 0 : 1]; };

  IsolationEvidence ev;
  ev.lamination_size = L.size();
  OpenInterval cur = I;
  std::size_t f = face_inside(*idx, I);
  for (;;) {
    const Face& face = fs[f];
    if (face.leaves.size() != 2) {
      if (face.leaves.size() > 2) ev.blocking = gap_of(face);
      break;
    }
    std::size_t which = face.away[0] == cur.dual() ? 1 : 0;
    const OpenInterval& next = face.away[which];
    if (!closure_subset(next, cur)) {
      ev.blocking = gap_of(face);
      break;
    }
    ev.approach.push_back(next);
    cur = next;
    f = face_inside(face.leaves[which], next);
  }
  std::reverse(ev.approach.begin(), ev.approach.end());
  ev.no_approach = ev.approach.empty();
  return ev;
}

SeparationResult separation_check(const FiniteLamination& L, const OpenInterval& I, const OpenInterval& J) {
  SeparationResult r;
  if (!L.has_element(I) || !L.has_element(J)) {
    r.reason = "interval is not an element of the lamination";
    return r;
  }
  if (J == I.dual()) {
    r.reason = "pair is a leaf";
    return r;
  }
  if (!disjoint(I, J)) {
    r.reason = "intervals are not disjoint";
    return r;
  }
  for (const auto& g : gaps(L)) {
    if (g.is_leaf_gap()) continue;
    std::optional<OpenInterval> ki, kj;
    for (const auto& s : g.sides) {
      if (!ki && subset(I, s)) ki = s;
      else if (!kj && subset(J, s)) kj = s;
    }
    if (ki && kj) {
      r.kind = SeparationResult::Kind::Separated;
      r.gap = g;
      r.side_i = ki;
      r.side_j = kj;
      return r;
    }
  }
  r.kind = SeparationResult::Kind::NotSeparated;
  return r;
}

const char* convergence_name(Convergence c) {
  switch (c) {
    case Convergence::Converges: return "converges";
    case Convergence::DoesNotConverge: return "does-not-converge";
    case Convergence::Unsupported: return "unsupported";
  }
  return "?";
}

namespace {

struct Oriented {
  OpenInterval I;
  bool nested;
};

Oriented orient(const Leaf& l, const OpenInterval& J) {
  for (const OpenInterval& X : {l.first(), l.second()})
    if (subset(X, J) || subset(J, X)) return {X, true};
  return {l.first(), false};
}

ConvergenceReport converge_one(const std::vector<Leaf>& seq, const OpenInterval& J) {
  ConvergenceReport r;
  const std::size_t n = seq.size();
  if (n == 0) return r;
  std::vector<Oriented> o;
  for (const auto& l : seq) o.push_back(orient(l, J));
  // direction of step k -> k+1: 0 equal, +1 strictly ascending, -1 strictly descending, 2 none
  auto step = [&](std::size_t k) {
    const OpenInterval &a = o[k].I, &b = o[k + 1].I;
    if (a == b) return 0;
    if (subset(a, b)) return 1;
    if (subset(b, a)) return -1;
    return 2;
  };
  std::size_t start = n - 1;
  int dir = 0;
  if (!o[n - 1].nested) {
    r.tail = "none";
    return r;
  }
  while (start > 0 && o[start - 1].nested) {
    int s = step(start - 1);
    if (s == 2 || (s != 0 && dir != 0 && s != dir)) break;
    if (s != 0) dir = s;
    --start;
  }
  r.tail_length = n - start;
  r.tail = dir == 0 ? "constant" : (dir > 0 ? "ascending" : "descending");
  if (r.tail_length < (n + 1) / 2) return r;
  const OpenInterval& last = o[n - 1].I;
  r.exact = true;
  if (last == J) {
    r.verdict = Convergence::Converges;
  } else if (dir == 0) {
    r.verdict = Convergence::DoesNotConverge;
  } else if (dir > 0) {
    // union of an ascending tail is its last term
    r.verdict = subset(last, J) ? Convergence::Converges : Convergence::DoesNotConverge;
    r.exact = r.verdict == Convergence::DoesNotConverge;
  } else {
    r.verdict = subset(J, last) ? Convergence::Converges : Convergence::DoesNotConverge;
    r.exact = r.verdict == Convergence::DoesNotConverge;
  }
  return r;
}

}  // namespace

ConvergenceReport converge_check(const std::vector<Leaf>& seq, const OpenInterval& J) {
  ConvergenceReport r = converge_one(seq, J);
  ConvergenceReport d = converge_one(seq, J.dual());
  r.dual_verdict = d.verdict;
  if (r.verdict != d.verdict) throw std::logic_error("dual sandwich disagrees with primal sandwich");
  return r;
}

EndpointStats endpoints_set(const FiniteLamination& L) {
  EndpointStats s;
  s.points = endpoint_list(L);
  if (s.points.empty()) return s;
  std::vector<Rational> t;
  for (const auto& p : s.points) {
    auto v = projective_to_turns(p);
    if (!v) return s;
    t.push_back(*v);
  }
  std::sort(t.begin(), t.end());
  Rational best = t.front() + 1 - t.back();
  for (std::size_t i = 1; i < t.size(); ++i) best = std::max(best, Rational(t[i] - t[i - 1]));
  s.max_arc = best;
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> polygon_histogram(const std::vector<Gap>& gs) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& g : gs)
    if (g.is_polygon()) ++h[g.sides.size()];
  return {h.begin(), h.end()};
}

}  // namespace laminar
