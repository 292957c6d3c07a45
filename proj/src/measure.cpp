#include "laminar/measure.hpp"

#include <stdexcept>

namespace laminar {

FiniteSupportMeasure::FiniteSupportMeasure(Model m, std::map<CirclePoint, Rational> atoms) : model_(m), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("measure needs at least one atom");
  Rational total = 0;
  for (const auto& [p, w] : atoms_) {
    if (p.model() != model_) throw ModelMismatch();
    if (w <= 0) throw std::invalid_argument("atom weight must be positive at " + p.str());
    total += w;
  }
  if (total != 1) throw std::invalid_argument("total mass is " + to_string(total) + ", not 1");
}

FiniteSupportMeasure FiniteSupportMeasure::uniform(Model m, const std::vector<CirclePoint>& pts) {
  std::map<CirclePoint, Rational> atoms;
  for (const auto& p : pts) atoms[p] = 0;
  if (atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
  Rational w = ratio(1, atoms.size());
  for (auto& [p, v] : atoms) v = w;
  return FiniteSupportMeasure(m, std::move(atoms));
}

std::vector<CirclePoint> FiniteSupportMeasure::support() const {
  std::vector<CirclePoint> s;
  for (const auto& [p, w] : atoms_) s.push_back(p);
  return s;
}

Rational FiniteSupportMeasure::mass(const OpenInterval& I) const {
  Rational m = 0;
  for (const auto& [p, w] : atoms_)
    if (I.contains(p)) m += w;
  return m;
}

Rational FiniteSupportMeasure::mass_at(const CirclePoint& p) const {
  auto it = atoms_.find(p);
  return it == atoms_.end() ? Rational(0) : it->second;
}

FiniteSupportMeasure pushforward(const FiniteSupportMeasure& mu, const CircleHomeo& g) {
  std::map<CirclePoint, Rational> out;
  for (const auto& [p, w] : mu.atoms()) out[apply(g, p)] += w;
  return FiniteSupportMeasure(mu.model(), std::move(out));
}

bool is_invariant(const FiniteSupportMeasure& mu, const CircleHomeo& g) { return pushforward(mu, g) == mu; }

SideMasses full_measure_side(const FiniteSupportMeasure& mu, const Gap& gap) {
  SideMasses r;
  Rational in_sides = 0;
  for (const auto& s : gap.sides) {
    Rational m = mu.mass(s);
    in_sides += m;
    r.masses.emplace_back(s, m);
    if (m == 1) r.full_side = s;
  }
  r.vertex_mass = 1 - in_sides;
  return r;
}

const char* support_kind_name(SupportReport::Kind k) {
  switch (k) {
    case SupportReport::Kind::Rejected: return "rejected";
    case SupportReport::Kind::Confirmed: return "confirmed";
    case SupportReport::Kind::Incompatible: return "incompatible";
    case SupportReport::Kind::NoEvidence: return "no-evidence";
  }
  return "?";
}

SupportReport support_singleton_check(const FiniteSupportMeasure& mu, const MarkedGroup& G, const FiniteLamination& L) {
  SupportReport r;
  for (const auto& g : G.generators())
    if (!is_invariant(mu, g.map)) {
      r.reason = "measure is not invariant under " + g.name;
      return r;
    }
  auto supp = mu.support();
  if (supp.size() == 1) {
    r.kind = SupportReport::Kind::Confirmed;
    r.fixed_point = supp[0];
    r.reason = "support is one point, fixed by every generator";
    return r;
  }
  for (const auto& gap : gaps(L)) {
    ++r.gaps_examined;
    SideMasses m = full_measure_side(mu, gap);
    if (m.violation()) r.found.emplace_back(gap, std::move(m));
  }
  if (r.found.empty()) {
    r.kind = SupportReport::Kind::NoEvidence;
    r.reason = "support has " + std::to_string(supp.size()) + " points but every gap has a side of full mass";
  } else {
    r.kind = SupportReport::Kind::Incompatible;
    r.reason = "support has " + std::to_string(supp.size()) + " points; no tight pair possible with this measure";
  }
  return r;
}

std::optional<FiniteSupportMeasure> two_point_invariant_measure(const MarkedGroup& G) {
  std::vector<CirclePoint> fix = global_fixed_points(G);
  if (fix.size() < 2) return std::nullopt;
  return FiniteSupportMeasure::uniform(G.model(), {fix[0], fix[1]});
}

}  // namespace laminar
