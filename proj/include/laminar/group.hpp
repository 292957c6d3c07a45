#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laminar/homeo.hpp"
#include "laminar/lamination.hpp"

namespace laminar {

struct Generator {
  std::string name;
  CircleHomeo map;
};

// Finitely many named generators of one backend.  The empty list is the
// trivial group acting on the given model.
class MarkedGroup {
 public:
  MarkedGroup(Model m, std::vector<Generator> gens = {});
  explicit MarkedGroup(std::vector<Generator> gens);

  Model model() const { return model_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }

 private:
  Model model_;
  std::vector<Generator> gens_;
};

struct Letter {
  std::size_t gen;
  bool inverse;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

std::string word_str(const MarkedGroup& G, const Word& w);

struct Element {
  Word word;
  CircleHomeo map;
  // PL products can acquire a piece on the diagonal; such elements stay in
  // the ball for deduplication but are excluded from searches.
  bool degenerate = false;
};

// Elements of word length <= radius, one shortlex-least word each.
struct OrbitBall {
  std::size_t radius = 0;
  std::vector<Element> elements;  // shortlex order, identity first
  std::size_t degenerate = 0;
};

OrbitBall ball(const MarkedGroup& G, std::size_t radius);

struct Provenance {
  Word word;
  Leaf seed;
};

struct OrbitResult {
  FiniteLamination lamination;
  std::map<Leaf, Provenance> provenance;
  std::vector<LinkedPair> linked;  // empty: unlinked at this depth
  std::size_t frontier = 0;        // leaves whose generator image is missing
  std::size_t ball_size = 0;
  bool unlinked() const { return linked.empty(); }
  bool closed() const { return linked.empty() && frontier == 0; }
};

OrbitResult orbit_lamination(const MarkedGroup& G, const FiniteLamination& L0, std::size_t N);

// Gap images.
Gap image(const CircleHomeo& g, const Gap& gap);
bool vertex_set_inside(const CircleHomeo& g, const Gap& gap, const OpenInterval& I);

IsolationEvidence is_isolated(const FiniteLamination& L, const OpenInterval& I, std::size_t orbit_depth,
                              const MarkedGroup& G);

std::optional<Element> find_contracting(const MarkedGroup& G, const Gap& gap, const OpenInterval& I, std::size_t N);

struct NoncommutingWitness {
  Element f1, f2;
  OpenInterval o1, o2;
  OpenInterval image12, image21;  // f1 f2 (O1) and f2 f1 (O1)
};
std::optional<NoncommutingWitness> noncommuting_witness(const MarkedGroup& G, const Gap& gap, std::size_t N);
bool verify(const NoncommutingWitness& w);

enum class GType { Free, Sticky, Fixed, NotInvariant };
const char* gtype_name(GType t);

struct GTypeLabel {
  GType label = GType::Free;
  std::size_t count = 0;  // |v(gap) meet Fix_g|
  std::vector<CirclePoint> fixed_vertices;
  std::size_t sides_touching_fix = 0;  // sides whose closure meets Fix_g
  std::string note;
};
// Defined for ideal polygons; throws for the identity and for other gaps.
GTypeLabel classify_gap(const CircleHomeo& g, const Gap& gap);

struct PingPongTable {
  OpenInterval a_plus, a_minus, b_plus, b_minus;
};

struct PingPongResult {
  bool certified = false;
  std::string reason;
  std::optional<CirclePoint> witness;
};
PingPongResult pingpong_certify(const CircleHomeo& g, const CircleHomeo& h, const PingPongTable& t);

std::vector<CirclePoint> global_fixed_points(const MarkedGroup& G);

enum class EndpointType { Consistent, ExplainedByNonLooseness, Violation };
const char* endpoint_type_name(EndpointType t);

struct CensusRow {
  Word word;
  std::string word_text;
  std::optional<std::size_t> count;  // nullopt: infinitely many (degenerate PL product)
  std::string kind;                  // mobius type or "pl"
};

struct EndpointCheck {
  Word word;
  Gap gap;
  EndpointType type = EndpointType::Consistent;
  std::optional<Leaf> mixed_leaf;
  std::optional<Leaf> repeated_leaf;  // g^n(mixed_leaf) sharing the fixed endpoint
};

struct Census {
  std::vector<CensusRow> rows;
  bool all_finite = true;
  std::size_t gaps_checked = 0;
  std::size_t consistent = 0;
  std::vector<EndpointCheck> mixed;  // explained or violations
  std::size_t violations() const;
};

Census fixedpoint_census(const MarkedGroup& G, std::size_t N, const FiniteLamination* L = nullptr);

}  // namespace laminar
