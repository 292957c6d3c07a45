#pragma once

#include <map>
#include <string>
#include <vector>

#include "laminar/lamination.hpp"

namespace laminar {

enum class VertexKind { Ordinary, Singular, Cataclysm };
const char* vertex_kind_name(VertexKind k);
VertexKind parse_vertex_kind(const std::string& s);

// Finite tree with a cyclic order of neighbours at every vertex, plus a linear
// order at cataclysm vertices (which must read the cyclic order from some
// starting germ).  Ends are the degree-one vertices.
class PlanarOrderTree {
 public:
  void add_vertex(const std::string& id, VertexKind kind);
  void add_edge(const std::string& a, const std::string& b);
  void set_cyclic(const std::string& id, const std::vector<std::string>& order);
  void set_linear(const std::string& id, const std::vector<std::string>& order);
  // Checks the tree axioms and fills default cyclic orders at vertices of
  // degree at most two.  Throws std::invalid_argument on failure.
  void finalize();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  std::size_t id(const std::string& name) const;
  VertexKind kind(std::size_t v) const { return kind_[v]; }
  const std::vector<std::size_t>& cyclic(std::size_t v) const { return cyclic_[v]; }
  const std::vector<std::size_t>& linear(std::size_t v) const { return linear_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::vector<std::size_t> ends() const;  // declaration order
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Orientation of three distinct ends read from the given basepoint.
  int end_order_from(std::size_t basepoint, std::size_t e1, std::size_t e2, std::size_t e3) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<VertexKind> kind_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> cyclic_;
  std::vector<std::vector<std::size_t>> linear_;
  bool finalized_ = false;
};

// Basepoint-independent orientation; computed from two basepoints and
// cross-checked.
int end_cyclic_order(const PlanarOrderTree& T, std::size_t e1, std::size_t e2, std::size_t e3);

// Ends in counterclockwise order starting at the first declared end, placed at k/n.
std::map<std::size_t, CirclePoint> tree_to_circle(const PlanarOrderTree& T);
std::vector<std::size_t> ends_in_cyclic_order(const PlanarOrderTree& T);

FiniteLamination lamination_from_tree(const PlanarOrderTree& T);

}  // namespace laminar
