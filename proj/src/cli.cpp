#include "laminar/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "laminar/examples.hpp"
#include "laminar/io.hpp"
#include "laminar/svg.hpp"

namespace laminar::cli {

namespace {

struct NoInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CantCreate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  void kv(const std::string& k, const std::string& v) { s_ << k << ": " << v << "\n"; }
  void kv(const std::string& k, std::size_t v) { kv(k, std::to_string(v)); }
  void yes(const std::string& k, bool b) { kv(k, b ? "yes" : "no"); }
  std::string str() const { return s_.str(); }

 private:
  std::ostringstream s_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NoInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw CantCreate("cannot create " + path);
  o << text;
  if (!o) throw CantCreate("write failed for " + path);
}

// Parse a file, prefixing parse errors with its path.
template <class T, class F>
T load(Report& r, const std::string& path, F parse) {
  std::string text = slurp(path);
  r.kv("input", path + " fnv1a=" + hex64(fnv1a(text)));
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FileParseError(path + ":" + std::to_string(e.line) + ": " + e.detail);
  }
}

FiniteLamination load_lam(Report& r, const std::string& path) {
  return load<FiniteLamination>(r, path, [](const std::string& t) { return parse_lamination(t); });
}
MarkedGroup load_group(Report& r, const std::string& path) {
  return load<MarkedGroup>(r, path, [](const std::string& t) { return parse_generators(t); });
}

void need_same_model(const MarkedGroup& G, const FiniteLamination& L) {
  if (G.model() != L.model())
    throw std::invalid_argument(std::string("group acts on the ") + model_name(G.model()) + " model, lamination is " +
                                model_name(L.model()));
}

std::size_t default_depth() {
  const char* env = std::getenv("LAMINAR_DEPTH_DEFAULT");
  if (!env || !*env) return 6;
  std::string s = env;
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw UsageError("LAMINAR_DEPTH_DEFAULT must be a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

std::string points_str(const std::vector<CirclePoint>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + ps[i].str();
  return s.empty() ? "-" : s;
}

int report_linked(Report& r, const std::vector<LinkedPair>& linked) {
  for (const auto& p : linked)
    r.kv("linked", p.first.str() + " " + p.second.str() + " inside=" + p.inside.str() + " outside=" + p.outside.str());
  return linked.empty() ? kOk : kRefuted;
}

// ---- commands --------------------------------------------------------------

int cmd_validate(Report& r, const std::string& file) {
  FiniteLamination L = load_lam(r, file);
  r.kv("model", model_name(L.model()));
  r.kv("leaves", L.size());
  ValidationReport v = validate(L);
  r.yes("valid", v.valid());
  r.kv("linked_pairs", v.linked.size());
  return report_linked(r, v.linked);
}

int cmd_gaps(Report& r, const std::string& file) {
  FiniteLamination L = load_lam(r, file);
  r.kv("model", model_name(L.model()));
  r.kv("leaves", L.size());
  ValidationReport v = validate(L);
  if (!v.valid()) {
    r.yes("valid", false);
    return report_linked(r, v.linked);
  }
  if (L.empty()) throw std::invalid_argument("empty lamination has no gaps");
  auto gs = gaps(L);
  r.kv("gaps", gs.size());
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& g : gs) ++counts[int(g.kind)];
  r.kv("leaf_gaps", counts[int(GapKind::Leaf)]);
  r.kv("polygon_gaps", counts[int(GapKind::Polygon)]);
  r.kv("bordered_gaps", counts[int(GapKind::Bordered)]);
  for (auto [sides, n] : polygon_histogram(gs)) r.kv("polygon_" + std::to_string(sides), n);
  for (const auto& g : gs) r.kv("gap", g.str());
  return kOk;
}

int cmd_rainbow(Report& r, const std::string& file, const std::string& point, std::size_t depth) {
  FiniteLamination L = load_lam(r, file);
  CirclePoint p = parse_point(point, L.model());
  if (!is_valid(L)) {
    r.yes("valid", false);
    return report_linked(r, validate(L).linked);
  }
  r.kv("point", p.str());
  r.kv("depth", depth);
  RainbowResult res = rainbow_search(L, p, depth);
  r.kv("result", rainbow_kind_name(res.kind));
  if (res.witness) r.kv("witness", res.witness->str());
  r.kv("chain_length", res.chain.size());
  r.kv("longest_chain", res.full_length);
  for (const auto& I : res.chain) r.kv("chain", I.str());
  return res.kind == RainbowResult::Kind::Inconclusive ? kInconclusive : kOk;
}

int cmd_orbit(Report& r, const std::string& gfile, const std::string& lfile, std::size_t depth, const std::string& outp) {
  MarkedGroup G = load_group(r, gfile);
  FiniteLamination L0 = load_lam(r, lfile);
  need_same_model(G, L0);
  r.kv("depth", depth);
  OrbitResult o = orbit_lamination(G, L0, depth);
  r.kv("ball_size", o.ball_size);
  r.kv("leaves", o.lamination.size());
  r.kv("frontier", o.frontier);
  r.yes("unlinked", o.unlinked());
  r.yes("closed", o.closed());
  for (const auto& p : o.linked) {
    auto describe = [&](const Leaf& l) {
      auto it = o.provenance.find(l);
      if (it == o.provenance.end()) return l.str();
      return l.str() + "=" + word_str(G, it->second.word) + "(" + it->second.seed.str() + ")";
    };
    r.kv("linked", describe(p.first) + " " + describe(p.second));
  }
  if (!outp.empty()) {
    std::string text = write_lamination(o.lamination);
    dump(outp, text);
    r.kv("output", outp + " fnv1a=" + hex64(fnv1a(text)));
  }
  return o.unlinked() ? kOk : kRefuted;
}

std::vector<Gap> polygon_gaps(const FiniteLamination& L) {
  if (!is_valid(L)) throw std::invalid_argument("lamination is not valid");
  if (L.empty()) throw std::invalid_argument("empty lamination");
  std::vector<Gap> out;
  for (auto& g : gaps(L))
    if (g.is_polygon()) out.push_back(std::move(g));
  return out;
}

int cmd_witness_noncommuting(Report& r, const std::string& gfile, const std::string& lfile, std::size_t depth) {
  MarkedGroup G = load_group(r, gfile);
  FiniteLamination L = load_lam(r, lfile);
  need_same_model(G, L);
  r.kv("depth", depth);
  auto polys = polygon_gaps(L);
  r.kv("polygon_gaps", polys.size());
  for (const auto& g : polys) {
    auto w = noncommuting_witness(G, g, depth);
    if (!w) continue;
    r.kv("result", "found");
    r.kv("gap", g.str());
    r.kv("f1", word_str(G, w->f1.word) + " = " + to_string(w->f1.map));
    r.kv("f2", word_str(G, w->f2.word) + " = " + to_string(w->f2.map));
    r.kv("o1", w->o1.str());
    r.kv("o2", w->o2.str());
    r.kv("f1f2_o1", w->image12.str());
    r.kv("f2f1_o1", w->image21.str());
    r.yes("verified", verify(*w));
    return kOk;
  }
  r.kv("result", "not-found");
  return kInconclusive;
}

int cmd_witness_contracting(Report& r, const std::string& gfile, const std::string& lfile, const std::string& side,
                            std::size_t depth) {
  MarkedGroup G = load_group(r, gfile);
  FiniteLamination L = load_lam(r, lfile);
  need_same_model(G, L);
  OpenInterval I = parse_interval(side, L.model());
  r.kv("depth", depth);
  r.kv("side", I.str());
  for (const auto& g : polygon_gaps(L)) {
    if (!g.has_side(I)) continue;
    r.kv("gap", g.str());
    auto e = find_contracting(G, g, I, depth);
    if (!e) {
      r.kv("result", "not-found");
      return kInconclusive;
    }
    r.kv("result", "found");
    r.kv("element", word_str(G, e->word) + " = " + to_string(e->map));
    std::vector<CirclePoint> imgs;
    for (const auto& v : g.vertices) imgs.push_back(laminar::apply(e->map, v));
    r.kv("vertex_images", points_str(imgs));
    return kOk;
  }
  throw std::invalid_argument("no polygon gap has side " + I.str());
}

int cmd_pingpong(Report& r, const std::string& gfile, const std::string& tfile) {
  MarkedGroup G = load_group(r, gfile);
  if (G.rank() != 2) throw std::invalid_argument("pingpong needs exactly two generators, got " + std::to_string(G.rank()));
  PingPongTable t = load<PingPongTable>(r, tfile, [&](const std::string& s) { return parse_table(s, G.model()); });
  PingPongResult res = pingpong_certify(G.generators()[0].map, G.generators()[1].map, t);
  r.yes("certified", res.certified);
  r.kv("reason", res.reason);
  if (res.witness) r.kv("witness", res.witness->str());
  return res.certified ? kOk : kRefuted;
}

int cmd_census(Report& r, const std::string& gfile, const std::string& lfile, std::size_t depth) {
  MarkedGroup G = load_group(r, gfile);
  std::optional<FiniteLamination> L;
  if (!lfile.empty()) {
    L = load_lam(r, lfile);
    need_same_model(G, *L);
  }
  r.kv("depth", depth);
  Census c = fixedpoint_census(G, depth, L ? &*L : nullptr);
  r.kv("elements", c.rows.size());
  r.yes("all_finite", c.all_finite);
  std::map<std::string, std::size_t> hist;
  for (const auto& row : c.rows) hist[row.count ? std::to_string(*row.count) : std::string("infinite")]++;
  for (const auto& [k, n] : hist) r.kv("count_" + k, n);
  for (const auto& row : c.rows)
    r.kv("row", row.word_text + " " + (row.count ? std::to_string(*row.count) : std::string("infinite")) + " " + row.kind);
  if (L) {
    std::size_t explained = 0;
    for (const auto& m : c.mixed) explained += m.type == EndpointType::ExplainedByNonLooseness;
    r.kv("gaps_checked", c.gaps_checked);
    r.kv("consistent", c.consistent);
    r.kv("explained_by_nonlooseness", explained);
    r.kv("violations", c.violations());
    for (const auto& m : c.mixed) {
      if (m.type != EndpointType::Violation) continue;
      r.kv("violation", word_str(G, m.word) + " " + m.gap.str() + (m.mixed_leaf ? " leaf=" + m.mixed_leaf->str() : ""));
    }
  }
  return c.all_finite && c.violations() == 0 ? kOk : kRefuted;
}

int cmd_measure(Report& r, const std::string& gfile, const std::string& lfile, const std::string& mfile, bool two_point) {
  MarkedGroup G = load_group(r, gfile);
  FiniteLamination L = load_lam(r, lfile);
  need_same_model(G, L);
  if (mfile.empty() == !two_point) throw UsageError("give exactly one of --measure or --two-point");
  std::optional<FiniteSupportMeasure> mu;
  if (two_point) {
    mu = two_point_invariant_measure(G);
    if (!mu) {
      r.kv("result", "no-two-point-measure");
      r.kv("global_fixed_points", points_str(global_fixed_points(G)));
      return kInconclusive;
    }
  } else {
    mu = load<FiniteSupportMeasure>(r, mfile, [&](const std::string& t) { return parse_measure(t, G.model()); });
  }
  if (!is_valid(L)) throw std::invalid_argument("lamination is not valid");
  r.kv("atoms", mu->atoms().size());
  for (const auto& [p, w] : mu->atoms()) r.kv("atom", p.str() + " " + to_string(w));
  SupportReport s = support_singleton_check(*mu, G, L);
  r.kv("result", support_kind_name(s.kind));
  r.kv("reason", s.reason);
  if (s.fixed_point) r.kv("fixed_point", s.fixed_point->str());
  r.kv("gaps_examined", s.gaps_examined);
  r.kv("gaps_without_full_side", s.found.size());
  for (const auto& [g, m] : s.found) r.kv("no_full_side", g.str() + " vertex_mass=" + to_string(m.vertex_mass));
  switch (s.kind) {
    case SupportReport::Kind::Rejected: return kRefuted;
    case SupportReport::Kind::NoEvidence: return kInconclusive;
    default: return kOk;
  }
}

int cmd_tree2lam(Report& r, const std::string& tfile, const std::string& outp) {
  PlanarOrderTree T = load<PlanarOrderTree>(r, tfile, [](const std::string& t) { return parse_tree(t); });
  r.kv("vertices", T.size());
  r.kv("ends", T.ends().size());
  auto pos = tree_to_circle(T);
  for (auto e : ends_in_cyclic_order(T)) r.kv("end", T.name(e) + " " + pos.at(e).str());
  FiniteLamination L = lamination_from_tree(T);
  r.kv("leaves", L.size());
  r.yes("valid", is_valid(L));
  std::string text = write_lamination(L);
  dump(outp, text);
  r.kv("output", outp + " fnv1a=" + hex64(fnv1a(text)));
  return kOk;
}

int cmd_example(Report& r, const std::string& name, std::size_t depth, const std::string& dir, std::uint64_t seed,
                 bool seed_given) {
  Example ex = [&] {
    if (name == "random") {
      std::mt19937_64 rng(seed);
      Example e{"random", MarkedGroup(Model::Angle), random_triangulated(rng, depth + 3), depth};
      return e;
    }
    return make_example(name, depth);
  }();
  r.kv("example", ex.name);
  r.kv("depth", depth);
  if (name == "random") r.kv("seed", std::to_string(seed));
  else if (seed_given) r.kv("seed", "unused");
  r.kv("generators", ex.group.rank());
  r.kv("leaves", ex.lamination.size());
  r.yes("valid", is_valid(ex.lamination));
  std::filesystem::path base(dir);
  std::error_code ec;
  std::filesystem::create_directories(base, ec);
  if (ec) throw CantCreate("cannot create directory " + dir);
  std::vector<std::pair<std::string, std::string>> files = {
      {name + ".grp", write_generators(ex.group)},
      {name + ".lam", write_lamination(ex.lamination)},
      {name + ".svg", render_svg(ex.lamination, SvgOptions{512, true})},
  };
  if (name == "pants") files.push_back({name + ".tree", write_tree(pants_tree(depth))});
  for (const auto& [f, text] : files) {
    std::string p = (base / f).string();
    dump(p, text);
    r.kv("output", p + " fnv1a=" + hex64(fnv1a(text)));
  }
  return kOk;
}

int cmd_render(Report& r, std::ostream& out, const std::string& file, const std::string& outp, bool shade, int size) {
  FiniteLamination L = load_lam(r, file);
  if (!is_valid(L)) {
    r.yes("valid", false);
    return report_linked(r, validate(L).linked);
  }
  if (size < 64 || size > 8192) throw UsageError("--size must be between 64 and 8192");
  std::string svg = render_svg(L, SvgOptions{size, shade});
  if (outp.empty()) {
    out << svg;
    return kOk;
  }
  dump(outp, svg);
  r.kv("leaves", L.size());
  r.kv("output", outp + " fnv1a=" + hex64(fnv1a(svg)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  std::size_t depth_default = 6;
  try {
    depth_default = default_depth();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"exact laminations and circle group actions", "laminar"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  bool timing = false;
  app.add_flag("--timing", timing, "append wall-clock time to the report (breaks byte-stability)");

  std::string f1, f2, point, side, outp, table, mfile, lfile, name;
  std::size_t depth = depth_default;
  std::uint64_t seed = 1;
  bool shade = false, two_point = false;
  int size = 512;

  auto* validate_c = app.add_subcommand("validate", "check that leaves are pairwise unlinked");
  validate_c->add_option("lamination", f1)->required();

  auto* gaps_c = app.add_subcommand("gaps", "enumerate the gaps of a lamination");
  gaps_c->add_option("lamination", f1)->required();

  auto* rainbow_c = app.add_subcommand("rainbow", "endpoint witness or nested chain at a point");
  rainbow_c->add_option("lamination", f1)->required();
  rainbow_c->add_option("--point", point)->required();
  rainbow_c->add_option("--depth", depth);

  auto* orbit_c = app.add_subcommand("orbit", "orbit of a lamination under the ball of radius N");
  orbit_c->add_option("group", f1)->required();
  orbit_c->add_option("lamination", f2)->required();
  orbit_c->add_option("--depth", depth);
  orbit_c->add_option("-o", outp, "write the orbit lamination here");

  auto* witness_c = app.add_subcommand("witness", "witness searches");
  witness_c->require_subcommand(1);
  auto* nc_c = witness_c->add_subcommand("noncommuting", "two elements moving a gap side in incompatible ways");
  nc_c->add_option("group", f1)->required();
  nc_c->add_option("lamination", f2)->required();
  nc_c->add_option("--depth", depth);
  auto* ct_c = witness_c->add_subcommand("contracting", "element mapping a gap's vertices into one side");
  ct_c->add_option("group", f1)->required();
  ct_c->add_option("lamination", f2)->required();
  ct_c->add_option("--side", side)->required();
  ct_c->add_option("--depth", depth);

  auto* pp_c = app.add_subcommand("pingpong", "certify a free subgroup from an arc table");
  pp_c->add_option("group", f1)->required();
  pp_c->add_option("--table", table)->required();

  auto* census_c = app.add_subcommand("census", "fixed point counts over a ball");
  census_c->add_option("group", f1)->required();
  census_c->add_option("--depth", depth);
  census_c->add_option("--lamination", lfile, "also check gap vertex sets against Fix");

  auto* measure_c = app.add_subcommand("measure", "finite-support invariant measure checks");
  measure_c->add_option("group", f1)->required();
  measure_c->add_option("lamination", f2)->required();
  measure_c->add_option("--measure", mfile);
  measure_c->add_flag("--two-point", two_point, "use two global fixed points of the group");

  auto* tree_c = app.add_subcommand("tree2lam", "lamination from a planar order tree");
  tree_c->add_option("tree", f1)->required();
  tree_c->add_option("-o", outp)->required();

  auto* example_c = app.add_subcommand("example", "write a canonical example (group, lamination, svg)");
  example_c->add_option("name", name)->required()->check(CLI::IsMember({"nested", "pants", "random", "rotation", "sanov"}));
  example_c->add_option("--depth", depth);
  example_c->add_option("-o", outp)->required();
  auto* seed_opt = example_c->add_option("--seed", seed);

  auto* render_c = app.add_subcommand("render", "draw a lamination as svg");
  render_c->add_option("lamination", f1)->required();
  render_c->add_option("-o", outp);
  render_c->add_flag("--shade", shade, "fill polygon gaps");
  render_c->add_option("--size", size);

  for (auto* s : {validate_c, gaps_c, rainbow_c, orbit_c, nc_c, ct_c, pp_c, census_c, measure_c, tree_c, example_c, render_c})
    s->add_flag("--timing", timing, "append wall-clock time to the report");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  if (cargv.empty()) cargv.push_back("laminar");
  try {
    app.parse(int(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report r;
  std::string command;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--timing") continue;
    command += (command.empty() ? "" : " ") + argv[i];
  }
  r.kv("command", command);
  auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  bool raw_svg = false;
  try {
    if (*validate_c) code = cmd_validate(r, f1);
    else if (*gaps_c) code = cmd_gaps(r, f1);
    else if (*rainbow_c) code = cmd_rainbow(r, f1, point, depth);
    else if (*orbit_c) code = cmd_orbit(r, f1, f2, depth, outp);
    else if (*nc_c) code = cmd_witness_noncommuting(r, f1, f2, depth);
    else if (*ct_c) code = cmd_witness_contracting(r, f1, f2, side, depth);
    else if (*pp_c) code = cmd_pingpong(r, f1, table);
    else if (*census_c) code = cmd_census(r, f1, lfile, depth);
    else if (*measure_c) code = cmd_measure(r, f1, f2, mfile, two_point);
    else if (*tree_c) code = cmd_tree2lam(r, f1, outp);
    else if (*example_c) code = cmd_example(r, name, depth, outp, seed, seed_opt->count() > 0);
    else if (*render_c) {
      raw_svg = outp.empty();
      code = cmd_render(r, out, f1, outp, shade, size);
    }
  } catch (const NoInput& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const CantCreate& e) {
    err << "error: " << e.what() << "\n";
    return kCantCreate;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kDataError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  if (raw_svg && code == kOk) return code;
  if (timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    r.kv("time_ms", buf);
  }
  r.kv("exit", std::to_string(code));
  out << r.str();
  return code;
}

}  // namespace laminar::cli
