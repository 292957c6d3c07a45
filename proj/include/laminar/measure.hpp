#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laminar/group.hpp"

namespace laminar {

// Purely atomic probability measure: positive rational weights summing to 1.
class FiniteSupportMeasure {
 public:
  FiniteSupportMeasure(Model m, std::map<CirclePoint, Rational> atoms);
  static FiniteSupportMeasure uniform(Model m, const std::vector<CirclePoint>& pts);

  Model model() const { return model_; }
  const std::map<CirclePoint, Rational>& atoms() const { return atoms_; }
  std::vector<CirclePoint> support() const;
  Rational mass(const OpenInterval& I) const;
  Rational mass_at(const CirclePoint& p) const;

  friend bool operator==(const FiniteSupportMeasure&, const FiniteSupportMeasure&) = default;

 private:
  Model model_;
  std::map<CirclePoint, Rational> atoms_;
};

FiniteSupportMeasure pushforward(const FiniteSupportMeasure& mu, const CircleHomeo& g);
bool is_invariant(const FiniteSupportMeasure& mu, const CircleHomeo& g);

struct SideMasses {
  std::optional<OpenInterval> full_side;  // unique side of mass 1
  std::vector<std::pair<OpenInterval, Rational>> masses;
  Rational vertex_mass;  // mass carried by the vertex set
  bool violation() const { return !full_side.has_value(); }
};
SideMasses full_measure_side(const FiniteSupportMeasure& mu, const Gap& gap);

struct SupportReport {
  enum class Kind { Rejected, Confirmed, Incompatible, NoEvidence } kind = Kind::Rejected;
  std::string reason;
  std::optional<CirclePoint> fixed_point;         // Confirmed
  std::vector<std::pair<Gap, SideMasses>> found;  // Incompatible: gaps with no full side
  std::size_t gaps_examined = 0;
};
const char* support_kind_name(SupportReport::Kind k);

SupportReport support_singleton_check(const FiniteSupportMeasure& mu, const MarkedGroup& G, const FiniteLamination& L);

// Uniform measure on two global fixed points, when there are at least two.
std::optional<FiniteSupportMeasure> two_point_invariant_measure(const MarkedGroup& G);

}  // namespace laminar
