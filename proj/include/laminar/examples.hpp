#pragma once

#include <random>
#include <string>
#include <vector>

#include "laminar/group.hpp"
#include "laminar/ordertree.hpp"

namespace laminar {

struct Example {
  std::string name;
  MarkedGroup group;
  FiniteLamination lamination;
  std::size_t depth = 0;
};

// <(1 2; 0 1), (1 0; 2 1)> with the orbit of the ideal quadrilateral
// {-1, 0, 1, inf} over the ball of the given radius.
Example sanov_example(std::size_t depth);
FiniteLamination sanov_seed();
PingPongTable sanov_table();

// Rotation by 1/n and the inscribed n-gon.
Example ideal_triangle_rotation(std::size_t n);

// Orbit of a leaf separating the two fixed points of hyperbolic g.
FiniteLamination nested_attractor(const MobiusMap& g, std::size_t depth);
Leaf nested_seed(const MobiusMap& g);

// Symmetric trivalent tree of the given radius, every internal vertex
// singular; its lamination is a union of ideal triangles, invariant under
// rotation by 1/3.
PlanarOrderTree pants_tree(std::size_t radius);
Example pants_example(std::size_t radius);

std::vector<std::string> example_names();
Example make_example(const std::string& name, std::size_t depth);

// Random corpora.  All take the generator by reference so a single seed
// fixes a whole run.
Rational random_angle(std::mt19937_64& rng, unsigned max_den);
// Valid angle lamination with at most max_leaves leaves (non-crossing
// matching on random points, then a random subset).
FiniteLamination random_lamination(std::mt19937_64& rng, std::size_t max_leaves, unsigned max_den = 64);
// Polygon with all its sides plus random non-crossing diagonals.
FiniteLamination random_triangulated(std::mt19937_64& rng, std::size_t corners, unsigned max_den = 97);
// Random tree with 4..max_vertices vertices and at least three ends.
PlanarOrderTree random_tree(std::mt19937_64& rng, std::size_t max_vertices);
PLHomeo random_pl(std::mt19937_64& rng, std::size_t max_pieces = 4, unsigned max_den = 24);
MobiusMap random_mobius(std::mt19937_64& rng, int bound = 6);

}  // namespace laminar
