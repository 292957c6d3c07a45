#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laminar/measure.hpp"
#include "laminar/ordertree.hpp"

namespace laminar {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::string detail;
  ParseError(std::size_t line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no), detail(msg) {}
};

// Literals: rationals "p/q" or integers; projective points also accept "inf"
// and surds "(a+b*sqrt(d))/c" or "a+b*sqrt(d)".  Angle values are taken mod 1.
CirclePoint parse_point(const std::string& text, Model m);
Rational parse_rational(const std::string& text);
// "(u,v)", whitespace ignored.
OpenInterval parse_interval(const std::string& text, Model m);

// model angle|projective
// leaf u v
FiniteLamination parse_lamination(const std::string& text);
std::string write_lamination(const FiniteLamination& L);

// [name:] mobius a b c d
// [name:] pl (x1,y1) (x2,y2) ...
// An optional "model" line fixes the model of an empty (trivial) group.
// Unnamed generators get g1, g2, ... by position.
MarkedGroup parse_generators(const std::string& text);
std::string write_generators(const MarkedGroup& G);

// A+ (u,v) / A- / B+ / B- lines, any order, each exactly once.
PingPongTable parse_table(const std::string& text, Model m);
std::string write_table(const PingPongTable& t);

// [model angle|projective]
// atom p w
// Without a model line the fallback model is used (the acting group's).
FiniteSupportMeasure parse_measure(const std::string& text, std::optional<Model> fallback = std::nullopt);
std::string write_measure(const FiniteSupportMeasure& mu);

// vertex <id> <kind> / edge <id> <id> / cyclic <id>: ... / linear <id>: ...
PlanarOrderTree parse_tree(const std::string& text);
std::string write_tree(const PlanarOrderTree& T);

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace laminar
