#pragma once

#include <string>

#include "laminar/lamination.hpp"

namespace laminar {

struct SvgOptions {
  int size = 512;
  bool shade_gaps = false;  // fill polygon gaps
};

// Unit disk with one Poincare geodesic per leaf.  Floating point lives only
// here; coordinates are printed with %.6f so output is byte-stable.
// Projective laminations go through the display chart and are marked
// approximate in the document title.
std::string render_svg(const FiniteLamination& L, const SvgOptions& opt = {});

}  // namespace laminar
