#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laminar/circle.hpp"

namespace laminar {

// Finite set of leaves in one model.  Validity (pairwise unlinked) is not
// enforced here; see validate().
class FiniteLamination {
 public:
  explicit FiniteLamination(Model m, std::vector<Leaf> leaves = {});

  Model model() const { return model_; }
  const std::vector<Leaf>& leaves() const { return leaves_; }
  std::size_t size() const { return leaves_.size(); }
  bool empty() const { return leaves_.empty(); }
  bool contains(const Leaf& l) const;
  bool has_element(const OpenInterval& I) const { return contains(Leaf(I)); }
  std::optional<std::size_t> index_of(const Leaf& l) const;

  friend bool operator==(const FiniteLamination&, const FiniteLamination&) = default;

 private:
  Model model_;
  std::vector<Leaf> leaves_;  // sorted, unique
};

struct LinkedPair {
  Leaf first, second;
  // second has one endpoint inside first.first() and one inside first.second()
  CirclePoint inside, outside;
};

struct ValidationReport {
  std::vector<LinkedPair> linked;
  bool valid() const { return linked.empty(); }
};

ValidationReport validate(const FiniteLamination& L);
bool is_valid(const FiniteLamination& L);  // O(n log n), no witnesses

// A complementary region of the chord diagram.  `away` lists, for each leaf on
// the region's boundary, the element of that leaf not meeting the region;
// `arcs` are the open boundary arcs of the circle between them.
struct Face {
  std::vector<std::size_t> leaves;
  std::vector<OpenInterval> away;
  std::vector<OpenInterval> arcs;
};

std::vector<Face> faces(const FiniteLamination& L);

enum class GapKind { Leaf, Polygon, Bordered };
const char* gap_kind_name(GapKind k);

// A gap: pairwise disjoint elements of L such that every leaf lies on one of
// them.  Leaf gaps are {I, I*}.  Polygons are faces with no boundary arc and
// at least three sides; their vertex set is the finite set of corners.
// Bordered gaps still have circle arcs in their vertex set.
struct Gap {
  GapKind kind = GapKind::Polygon;
  std::vector<OpenInterval> sides;    // sorted
  std::vector<OpenInterval> arcs;     // boundary arcs of the face, sorted
  std::vector<CirclePoint> vertices;  // sorted corner points

  bool is_leaf_gap() const { return kind == GapKind::Leaf; }
  bool is_polygon() const { return kind == GapKind::Polygon; }
  bool has_side(const OpenInterval& I) const;
  bool in_vertex_set(const CirclePoint& p) const;  // p outside every side
  std::string str() const;

  friend auto operator<=>(const Gap&, const Gap&) = default;
  friend bool operator==(const Gap&, const Gap&) = default;
};

Gap gap_of(const Face& f);
// Gaps from a polygon's corners (at least three points).
Gap polygon_gap(std::vector<CirclePoint> corners);
// One gap per face, sorted.  Throws on an empty or invalid lamination.
std::vector<Gap> gaps(const FiniteLamination& L);

struct RainbowResult {
  enum class Kind { EndpointWitness, Rainbow, Inconclusive } kind = Kind::Inconclusive;
  std::optional<Leaf> witness;
  std::vector<OpenInterval> chain;  // outermost first, closures strictly nested
  std::size_t full_length = 0;      // longest chain before truncation to depth
};
const char* rainbow_kind_name(RainbowResult::Kind k);

RainbowResult rainbow_search(const FiniteLamination& L, const CirclePoint& p, std::size_t depth);

// C_p^I, outermost first.
std::vector<OpenInterval> chain(const FiniteLamination& L, const CirclePoint& p, const OpenInterval& I);

// Walk from the face on the I side of l(I) through two-leaf faces whose other
// leaf lies properly inside I.  The leaves met form an I-side sequence prefix.
struct IsolationEvidence {
  bool no_approach = true;
  std::vector<OpenInterval> approach;  // increasing toward I
  std::optional<Gap> blocking;         // gap that stopped the walk
  std::size_t lamination_size = 0;
  std::size_t depth = 0;
};
IsolationEvidence isolation_evidence(const FiniteLamination& L, const OpenInterval& I);

struct SeparationResult {
  enum class Kind { Separated, NotSeparated, Rejected } kind = Kind::Rejected;
  std::string reason;
  std::optional<Gap> gap;
  std::optional<OpenInterval> side_i, side_j;
};
SeparationResult separation_check(const FiniteLamination& L, const OpenInterval& I, const OpenInterval& J);

enum class Convergence { Converges, DoesNotConverge, Unsupported };
const char* convergence_name(Convergence c);

struct ConvergenceReport {
  Convergence verdict = Convergence::Unsupported;
  Convergence dual_verdict = Convergence::Unsupported;
  bool exact = false;  // false: consistent at this length but not decided
  std::string tail;    // ascending | descending | constant | none
  std::size_t tail_length = 0;
};
ConvergenceReport converge_check(const std::vector<Leaf>& seq, const OpenInterval& J);

struct EndpointStats {
  std::vector<CirclePoint> points;
  std::optional<Rational> max_arc;  // in turns; nullopt when a surd is present
};
EndpointStats endpoints_set(const FiniteLamination& L);

// Histogram of side counts of the non-leaf gaps without arcs.
std::vector<std::pair<std::size_t, std::size_t>> polygon_histogram(const std::vector<Gap>& gs);

}  // namespace laminar
