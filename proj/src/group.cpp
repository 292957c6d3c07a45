#include "laminar/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace laminar {

MarkedGroup::MarkedGroup(Model m, std::vector<Generator> gens) : model_(m), gens_(std::move(gens)) {
  std::set<std::string> names;
  for (const auto& g : gens_) {
    if (model_of(g.map) != model_) throw BackendMismatch();
    if (is_identity(g.map)) throw std::invalid_argument("generator " + g.name + " is the identity");
    if (g.name.empty()) throw std::invalid_argument("generator without a name");
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator name " + g.name);
  }
}

namespace {
Model first_model(const std::vector<Generator>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generating set: give the model explicitly");
  return model_of(gens.front().map);
}
}  // namespace

MarkedGroup::MarkedGroup(std::vector<Generator> gens) : MarkedGroup(first_model(gens), gens) {}

std::string word_str(const MarkedGroup& G, const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += G.generators()[w[i].gen].name;
    if (w[i].inverse) s += "^-1";
  }
  return s;
}

namespace {

std::vector<Letter> sorted_letters(const MarkedGroup& G) {
  std::vector<std::size_t> idx(G.rank());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return G.generators()[a].name < G.generators()[b].name; });
  std::vector<Letter> out;
  for (std::size_t i : idx) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

CircleHomeo identity_of(Model m) {
  if (m == Model::Angle) return PLHomeo();
  return MobiusMap();
}

// Product without rejecting diagonal pieces; flags them instead.
CircleHomeo product(const CircleHomeo& g, const CircleHomeo& h, bool& degenerate) {
  if (is_pl(g)) {
    PLHomeo p = PLHomeo::compose(std::get<PLHomeo>(g), std::get<PLHomeo>(h), false);
    degenerate = p.has_diagonal_piece();
    return p;
  }
  degenerate = false;
  return compose(g, h);
}

}  // namespace

OrbitBall ball(const MarkedGroup& G, std::size_t radius) {
  OrbitBall b;
  b.radius = radius;
  b.elements.push_back({{}, identity_of(G.model()), false});
  std::vector<Letter> letters = sorted_letters(G);
  std::vector<CircleHomeo> letter_map;
  for (const auto& l : letters) {
    const CircleHomeo& g = G.generators()[l.gen].map;
    letter_map.push_back(l.inverse ? inverse(g) : g);
  }
  std::set<CircleHomeo> seen{b.elements[0].map};
  std::vector<std::size_t> frontier{0};
  for (std::size_t len = 1; len <= radius && !frontier.empty(); ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (std::size_t li = 0; li < letters.size(); ++li) {
        const Word& w = b.elements[idx].word;
        if (!w.empty() && w.back().gen == letters[li].gen && w.back().inverse != letters[li].inverse) continue;
        bool degenerate = false;
        CircleHomeo m = product(b.elements[idx].map, letter_map[li], degenerate);
        if (!seen.insert(m).second) continue;
        Word nw = w;
        nw.push_back(letters[li]);
        b.elements.push_back({std::move(nw), std::move(m), degenerate});
        if (degenerate) ++b.degenerate;
        next.push_back(b.elements.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return b;
}

OrbitResult orbit_lamination(const MarkedGroup& G, const FiniteLamination& L0, std::size_t N) {
  if (L0.model() != G.model()) throw ModelMismatch();
  OrbitBall B = ball(G, N);
  std::map<Leaf, Provenance> prov;
  for (const auto& e : B.elements) {
    if (e.degenerate) continue;
    for (const auto& s : L0.leaves()) {
      Leaf img = image(e.map, s);
      prov.try_emplace(img, Provenance{e.word, s});
    }
  }
  std::vector<Leaf> leaves;
  for (const auto& [l, p] : prov) leaves.push_back(l);
  OrbitResult r{FiniteLamination(G.model(), leaves), std::move(prov), {}, 0, B.elements.size()};
  if (!is_valid(r.lamination)) r.linked = validate(r.lamination).linked;
  for (const auto& l : r.lamination.leaves()) {
    bool missing = false;
    for (const auto& g : G.generators()) {
      if (!r.lamination.contains(image(g.map, l)) || !r.lamination.contains(image(inverse(g.map), l))) missing = true;
    }
    if (missing) ++r.frontier;
  }
  return r;
}

Gap image(const CircleHomeo& g, const Gap& gap) {
  Gap out;
  out.kind = gap.kind;
  for (const auto& s : gap.sides) out.sides.push_back(image(g, s));
  for (const auto& a : gap.arcs) out.arcs.push_back(image(g, a));
  for (const auto& v : gap.vertices) out.vertices.push_back(apply(g, v));
  std::sort(out.sides.begin(), out.sides.end());
  std::sort(out.arcs.begin(), out.arcs.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool vertex_set_inside(const CircleHomeo& g, const Gap& gap, const OpenInterval& I) {
  for (const auto& v : gap.vertices)
    if (!I.contains(apply(g, v))) return false;
  for (const auto& a : gap.arcs)
    if (!closure_subset(image(g, a), I)) return false;
  return true;
}

IsolationEvidence is_isolated(const FiniteLamination& L, const OpenInterval& I, std::size_t orbit_depth,
                              const MarkedGroup& G) {
  if (!L.has_element(I)) throw std::invalid_argument("l(I) is not a leaf of the lamination: " + I.str());
  OrbitResult o = orbit_lamination(G, L, orbit_depth);
  if (!o.unlinked()) throw std::invalid_argument("orbit of the lamination has linked leaves");
  IsolationEvidence ev = isolation_evidence(o.lamination, I);
  ev.depth = orbit_depth;
  return ev;
}

std::optional<Element> find_contracting(const MarkedGroup& G, const Gap& gap, const OpenInterval& I, std::size_t N) {
  if (!gap.has_side(I)) throw std::invalid_argument("interval is not a side of the gap: " + I.str());
  if (G.rank() == 0) return std::nullopt;
  OrbitBall B = ball(G, N);
  for (const auto& e : B.elements) {
    if (e.degenerate || e.word.empty()) continue;
    if (vertex_set_inside(e.map, gap, I)) return e;
  }
  return std::nullopt;
}

bool verify(const NoncommutingWitness& w) {
  if (!disjoint(w.o1, w.o2)) return false;
  CircleHomeo m12 = compose(w.f1.map, w.f2.map);
  CircleHomeo m21 = compose(w.f2.map, w.f1.map);
  OpenInterval i12 = image(m12, w.o1), i21 = image(m21, w.o1);
  return i12 == w.image12 && i21 == w.image21 && subset(i12, w.o1) && subset(i21, w.o2) && !(m12 == m21);
}

std::optional<NoncommutingWitness> noncommuting_witness(const MarkedGroup& G, const Gap& gap, std::size_t N) {
  if (gap.is_leaf_gap()) throw std::invalid_argument("non-commuting search needs a non-leaf gap");
  if (G.rank() == 0) return std::nullopt;
  constexpr std::size_t kCandidates = 16;
  OrbitBall B = ball(G, N);
  std::vector<std::vector<const Element*>> cand(gap.sides.size());
  for (std::size_t s = 0; s < gap.sides.size(); ++s)
    for (const auto& e : B.elements) {
      if (e.degenerate || e.word.empty()) continue;
      if (vertex_set_inside(e.map, gap, gap.sides[s])) cand[s].push_back(&e);
      if (cand[s].size() == kCandidates) break;
    }
  for (std::size_t s1 = 0; s1 < gap.sides.size(); ++s1)
    for (std::size_t s2 = 0; s2 < gap.sides.size(); ++s2) {
      if (s1 == s2) continue;
      const OpenInterval &o1 = gap.sides[s1], &o2 = gap.sides[s2];
      for (const Element* f1 : cand[s1])
        for (const Element* f2 : cand[s2]) {
          OpenInterval i12 = image(f1->map, image(f2->map, o1));
          OpenInterval i21 = image(f2->map, image(f1->map, o1));
          if (!subset(i12, o1) || !subset(i21, o2)) continue;
          NoncommutingWitness w{*f1, *f2, o1, o2, i12, i21};
          try {
            if (verify(w)) return w;
          } catch (const DiagonalPiece&) {
          }
        }
    }
  return std::nullopt;
}

const char* gtype_name(GType t) {
  switch (t) {
    case GType::Free: return "g-free";
    case GType::Sticky: return "g-sticky";
    case GType::Fixed: return "g-fixed";
    case GType::NotInvariant: return "not-invariant";
  }
  return "?";
}

GTypeLabel classify_gap(const CircleHomeo& g, const Gap& gap) {
  if (is_identity(g)) throw std::invalid_argument("g-type of the identity is undefined");
  if (!gap.is_polygon()) throw std::invalid_argument("g-types are defined for ideal polygons");
  FixedPointSet fix = fixed_points(g);
  GTypeLabel r;
  for (const auto& v : gap.vertices)
    if (fix.contains(v)) r.fixed_vertices.push_back(v);
  r.count = r.fixed_vertices.size();
  for (const auto& s : gap.sides)
    if (std::any_of(fix.points.begin(), fix.points.end(), [&](const CirclePoint& p) { return s.closure_contains(p); }))
      ++r.sides_touching_fix;
  bool all_fixed = r.count == gap.vertices.size();
  if (r.sides_touching_fix >= 3 && !all_fixed) {
    r.label = GType::NotInvariant;
    r.note = "three sides meet Fix_g in their closures but some vertex moves";
  } else if (r.count == 0) {
    r.label = GType::Free;
  } else if (r.count == 1) {
    r.label = GType::Sticky;
  } else if (all_fixed) {
    r.label = GType::Fixed;
  } else {
    r.label = GType::NotInvariant;
    r.note = "two fixed vertices force every vertex fixed";
  }
  if (r.label == GType::NotInvariant) {
    for (const auto& v : gap.vertices)
      if (!fix.contains(v)) {
        r.note += "; " + v.str() + " -> " + apply(g, v).str();
        break;
      }
  }
  return r;
}

namespace {

// A point of `image` outside `target`, given image is not a subset.
CirclePoint escape_point(const OpenInterval& image, const OpenInterval& target) {
  if (image.contains(target.u())) return target.u();
  if (image.contains(target.v())) return target.v();
  return interior_point(image);
}

std::optional<CirclePoint> common_point(const OpenInterval& X, const OpenInterval& Y) {
  for (const CirclePoint& s : {X.u(), Y.u()})
    for (const CirclePoint& e : {X.v(), Y.v()}) {
      if (s == e) continue;
      CirclePoint p = interior_point(OpenInterval(s, e));
      if (X.contains(p) && Y.contains(p)) return p;
    }
  return std::nullopt;
}

}  // namespace

PingPongResult pingpong_certify(const CircleHomeo& g, const CircleHomeo& h, const PingPongTable& t) {
  PingPongResult r;
  if (g.index() != h.index()) throw BackendMismatch();
  if (is_identity(g) || is_identity(h)) {
    r.reason = "a player is the identity";
    return r;
  }
  const std::pair<const char*, const OpenInterval*> arcs[] = {
      {"A+", &t.a_plus}, {"A-", &t.a_minus}, {"B+", &t.b_plus}, {"B-", &t.b_minus}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!disjoint(*arcs[i].second, *arcs[j].second)) {
        r.reason = std::string("arcs ") + arcs[i].first + " and " + arcs[j].first + " overlap";
        r.witness = common_point(*arcs[i].second, *arcs[j].second);
        return r;
      }
  CircleHomeo gi = inverse(g), hi = inverse(h);
  struct Check {
    const char* map;
    const CircleHomeo* f;
    int src;
    int dst;
  };
  const Check checks[] = {
      {"g", &g, 0, 0},   {"g", &g, 2, 0},   {"g", &g, 3, 0},   {"g^-1", &gi, 1, 1}, {"g^-1", &gi, 2, 1}, {"g^-1", &gi, 3, 1},
      {"h", &h, 2, 2},   {"h", &h, 0, 2},   {"h", &h, 1, 2},   {"h^-1", &hi, 3, 3}, {"h^-1", &hi, 0, 3}, {"h^-1", &hi, 1, 3},
  };
  for (const auto& c : checks) {
    OpenInterval img = image(*c.f, *arcs[c.src].second);
    const OpenInterval& target = *arcs[c.dst].second;
    if (!subset(img, target)) {
      r.reason = std::string(c.map) + "(" + arcs[c.src].first + ") = " + img.str() + " is not inside " + arcs[c.dst].first;
      r.witness = escape_point(img, target);
      return r;
    }
  }
  if (commutes(g, h)) throw std::logic_error("ping-pong table accepted for commuting maps");
  r.certified = true;
  r.reason = "all twelve inclusions hold; <g,h> is free of rank 2";
  return r;
}

std::vector<CirclePoint> global_fixed_points(const MarkedGroup& G) {
  if (G.rank() == 0) throw std::invalid_argument("empty generating set");
  std::vector<CirclePoint> out = fixed_points(G.generators()[0].map).points;
  for (std::size_t i = 1; i < G.rank(); ++i) {
    FixedPointSet f = fixed_points(G.generators()[i].map);
    std::erase_if(out, [&](const CirclePoint& p) { return !f.contains(p); });
  }
  return out;
}

const char* endpoint_type_name(EndpointType t) {
  switch (t) {
    case EndpointType::Consistent: return "consistent";
    case EndpointType::ExplainedByNonLooseness: return "explained-by-non-looseness";
    case EndpointType::Violation: return "violation";
  }
  return "?";
}

std::size_t Census::violations() const {
  return std::size_t(std::count_if(mixed.begin(), mixed.end(), [](const EndpointCheck& c) { return c.type == EndpointType::Violation; }));
}

namespace {

std::string kind_of(const CircleHomeo& g) {
  if (is_pl(g)) return "pl";
  return mobius_type_name(classify(std::get<MobiusMap>(g)));
}

// Looks for leaves g^n(l), 1 <= |n| <= 3, or at least three leaves of L ending
// at the fixed endpoint: both show that point is not a finite-valence vertex.
std::optional<Leaf> repeated_at(const CircleHomeo& g, const CircleHomeo& gi, const Leaf& l, const CirclePoint& u,
                                const FiniteLamination& L) {
  Leaf fwd = l, bwd = l;
  for (int n = 1; n <= 3; ++n) {
    fwd = image(g, fwd);
    bwd = image(gi, bwd);
    if (L.contains(fwd)) return fwd;
    if (L.contains(bwd)) return bwd;
  }
  std::vector<Leaf> at;
  for (const auto& m : L.leaves())
    if (m.has_endpoint(u) && !(m == l)) at.push_back(m);
  if (at.size() >= 2) return at.front();
  return std::nullopt;
}

}  // namespace

Census fixedpoint_census(const MarkedGroup& G, std::size_t N, const FiniteLamination* L) {
  Census c;
  OrbitBall B = ball(G, N);
  std::vector<Gap> gs;
  if (L) {
    std::set<std::vector<OpenInterval>> seen;
    for (auto& g : gaps(*L))
      if (g.kind != GapKind::Bordered && seen.insert(g.sides).second) gs.push_back(std::move(g));
  }
  for (const auto& e : B.elements) {
    if (e.word.empty()) continue;
    CensusRow row{e.word, word_str(G, e.word), std::nullopt, kind_of(e.map)};
    if (e.degenerate) {
      c.all_finite = false;
      c.rows.push_back(std::move(row));
      continue;
    }
    FixedPointSet fix = fixed_points(e.map);
    row.count = fix.count();
    c.rows.push_back(std::move(row));
    if (!L) continue;
    CircleHomeo inv = inverse(e.map);
    for (const auto& gap : gs) {
      ++c.gaps_checked;
      std::size_t fixed = 0;
      for (const auto& v : gap.vertices) fixed += fix.contains(v);
      if (fixed == 0 || fixed == gap.vertices.size()) {
        ++c.consistent;
        continue;
      }
      EndpointCheck chk{e.word, gap, EndpointType::Violation, std::nullopt, std::nullopt};
      for (const auto& s : gap.sides) {
        if (fix.contains(s.u()) != fix.contains(s.v())) {
          chk.mixed_leaf = Leaf(s);
          break;
        }
      }
      const CirclePoint& u = fix.contains(chk.mixed_leaf->lo()) ? chk.mixed_leaf->lo() : chk.mixed_leaf->hi();
      chk.repeated_leaf = repeated_at(e.map, inv, *chk.mixed_leaf, u, *L);
      if (chk.repeated_leaf) chk.type = EndpointType::ExplainedByNonLooseness;
      c.mixed.push_back(std::move(chk));
    }
  }
  return c;
}

}  // namespace laminar
