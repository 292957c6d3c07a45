#include "laminar/svg.hpp"

#include <cmath>
#include <cstdio>

namespace laminar {

namespace {

const double kPi = 3.14159265358979323846;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Canvas {
  double c, r;
  std::string xy(double turns) const {
    double a = 2 * kPi * turns;
    return num(c + r * std::cos(a)) + " " + num(c - r * std::sin(a));
  }
};

// Path segment from turn s to turn t along the geodesic.  Points closer than
// half a turn counterclockwise bend with sweep 1; a diameter is a line.
std::string geodesic_to(const Canvas& cv, double s, double t) {
  double d = t - s;
  d -= std::floor(d);
  double sep = d < 0.5 ? d : 1 - d;
  if (std::fabs(sep - 0.5) < 1e-12) return "L " + cv.xy(t);
  double rad = cv.r * std::tan(kPi * sep);
  return "A " + num(rad) + " " + num(rad) + " 0 0 " + (d < 0.5 ? "1 " : "0 ") + cv.xy(t);
}

}  // namespace

std::string render_svg(const FiniteLamination& L, const SvgOptions& opt) {
  const double size = opt.size;
  Canvas cv{size / 2, size / 2 - 16};
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.size) + "\" height=\"" +
         std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " + std::to_string(opt.size) + "\">\n";
  out += "<title>lamination, " + std::to_string(L.size()) + " leaves, " + model_name(L.model()) + " model";
  if (L.model() == Model::Projective) out += " (approximate display chart)";
  out += "</title>\n";
  out += "<circle cx=\"" + num(cv.c) + "\" cy=\"" + num(cv.c) + "\" r=\"" + num(cv.r) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (opt.shade_gaps && !L.empty()) {
    out += "<g fill=\"#c8d8f0\" stroke=\"none\">\n";
    for (const auto& g : gaps(L)) {
      if (!g.is_polygon()) continue;
      std::string d = "M " + cv.xy(display_turns(g.vertices[0]));
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        double s = display_turns(g.vertices[i]);
        double t = display_turns(g.vertices[(i + 1) % g.vertices.size()]);
        d += " " + geodesic_to(cv, s, t);
      }
      out += "<path d=\"" + d + " Z\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g fill=\"none\" stroke=\"#203060\" stroke-width=\"1\">\n";
  for (const auto& l : L.leaves()) {
    double s = display_turns(l.lo()), t = display_turns(l.hi());
    out += "<path d=\"M " + cv.xy(s) + " " + geodesic_to(cv, s, t) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace laminar
