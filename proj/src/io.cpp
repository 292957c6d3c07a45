#include "laminar/io.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace laminar {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::string no_space(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace((unsigned char)c)) out += c;
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  std::string t;
  while (in >> t) w.push_back(t);
  return w;
}

struct Line {
  std::size_t no;
  std::string text;
};

// non-blank lines with comments removed
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto h = raw.find('#');
    if (h != std::string::npos) raw.resize(h);
    std::string t = strip(raw);
    if (!t.empty()) out.push_back({no, t});
  }
  return out;
}

// Rethrow library and literal errors as ParseError on the current line.
template <class F>
auto at_line(std::size_t no, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(no, e.what());
  }
}

Model parse_model(const std::string& s) {
  if (s == "angle") return Model::Angle;
  if (s == "projective") return Model::Projective;
  throw std::invalid_argument("unknown model '" + s + "' (want angle or projective)");
}

// split "(x,y)(z,w)..." into the inner texts
std::vector<std::string> paren_groups(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in '" + s + "'");
    int depth = 0;
    std::size_t j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) break;
    }
    if (j == s.size()) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
    out.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

// split at the single top-level comma
std::pair<std::string, std::string> split_pair(const std::string& s) {
  int depth = 0;
  std::size_t at = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      if (at != std::string::npos) throw std::invalid_argument("too many commas in '" + s + "'");
      at = i;
    }
  }
  if (at == std::string::npos) throw std::invalid_argument("expected 'u,v' in '" + s + "'");
  return {s.substr(0, at), s.substr(at + 1)};
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(([+-]?\d+)(?:/(\d+))?)");
  std::smatch m;
  std::string t = no_space(text);
  if (!std::regex_match(t, m, re)) throw std::invalid_argument("bad rational '" + text + "'");
  Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  return ratio(num, den);
}

CirclePoint parse_point(const std::string& text, Model m) {
  std::string t = no_space(text);
  if (m == Model::Angle) return CirclePoint::angle(parse_rational(t));
  if (t == "inf" || t == "oo") return CirclePoint::infinity();
  static const std::regex surd(R"(\(?([+-]?\d+(?:/\d+)?)([+-])(?:(\d+)\*)?sqrt\((\d+)\)\)?(?:/(\d+))?)");
  std::smatch s;
  if (t.find("sqrt") != std::string::npos) {
    if (!std::regex_match(t, s, surd)) throw std::invalid_argument("bad surd '" + text + "'");
    bool paren = t[0] == '(';
    if (paren != (t.find("))") != std::string::npos)) throw std::invalid_argument("bad surd '" + text + "'");
    if (!paren && s[5].matched) throw std::invalid_argument("surd with a denominator needs parentheses: '" + text + "'");
    Rational p = parse_rational(s[1].str());
    Rational q = s[3].matched ? Rational(Integer(s[3].str())) : Rational(1);
    if (s[2].str() == "-") q = -q;
    Integer d(s[4].str());
    if (d <= 0) throw std::invalid_argument("radicand must be positive in '" + text + "'");
    Rational c = s[5].matched ? Rational(Integer(s[5].str())) : Rational(1);
    if (c == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return CirclePoint::projective(QuadraticSurd::from_parts(p / c, q / c, d));
  }
  return CirclePoint::projective(QuadraticSurd(parse_rational(t)));
}

OpenInterval parse_interval(const std::string& text, Model m) {
  std::string t = no_space(text);
  auto g = paren_groups(t);
  if (g.size() != 1) throw std::invalid_argument("expected one interval '(u,v)', got '" + text + "'");
  auto [u, v] = split_pair(g[0]);
  return OpenInterval(parse_point(u, m), parse_point(v, m));
}

FiniteLamination parse_lamination(const std::string& text) {
  std::optional<Model> model;
  std::vector<Leaf> leaves;
  std::set<Leaf> seen;
  for (const auto& ln : content_lines(text)) {
    auto w = words(ln.text);
    if (w[0] == "model") {
      if (model) throw ParseError(ln.no, "model given twice");
      if (w.size() != 2) throw ParseError(ln.no, "expected 'model angle|projective'");
      model = at_line(ln.no, [&] { return parse_model(w[1]); });
    } else if (w[0] == "leaf") {
      if (!model) throw ParseError(ln.no, "leaf before the model line");
      if (w.size() != 3) throw ParseError(ln.no, "expected 'leaf u v'");
      Leaf l = at_line(ln.no, [&] { return Leaf(parse_point(w[1], *model), parse_point(w[2], *model)); });
      if (!seen.insert(l).second) throw ParseError(ln.no, "repeated leaf " + l.str());
      leaves.push_back(l);
    } else {
      throw ParseError(ln.no, "unknown directive '" + w[0] + "'");
    }
  }
  if (!model) throw ParseError(1, "missing 'model' line");
  return FiniteLamination(*model, leaves);
}

std::string write_lamination(const FiniteLamination& L) {
  std::string s = std::string("model ") + model_name(L.model()) + "\n";
  for (const auto& l : L.leaves()) s += "leaf " + l.lo().str() + " " + l.hi().str() + "\n";
  return s;
}

MarkedGroup parse_generators(const std::string& text) {
  std::optional<Model> model;
  std::vector<Generator> gens;
  std::size_t position = 0;
  for (const auto& ln : content_lines(text)) {
    std::string body = ln.text;
    if (body.rfind("model", 0) == 0 && (body.size() == 5 || std::isspace((unsigned char)body[5]))) {
      auto w = words(body);
      if (w.size() != 2) throw ParseError(ln.no, "expected 'model angle|projective'");
      if (model) throw ParseError(ln.no, "model given twice");
      model = at_line(ln.no, [&] { return parse_model(w[1]); });
      continue;
    }
    ++position;
    std::string name;
    auto colon = body.find(':');
    if (colon != std::string::npos) {
      name = strip(body.substr(0, colon));
      body = strip(body.substr(colon + 1));
      static const std::regex ident(R"([A-Za-z_][A-Za-z0-9_]*)");
      if (!std::regex_match(name, ident)) throw ParseError(ln.no, "bad generator name '" + name + "'");
    } else {
      name = "g" + std::to_string(position);
    }
    auto w = words(body);
    if (w.empty()) throw ParseError(ln.no, "missing map after name");
    CircleHomeo map = at_line(ln.no, [&]() -> CircleHomeo {
      if (w[0] == "mobius") {
        if (w.size() != 5) throw std::invalid_argument("expected 'mobius a b c d'");
        Integer e[4];
        for (int i = 0; i < 4; ++i) {
          Rational r = parse_rational(w[i + 1]);
          if (r.get_den() != 1) throw std::invalid_argument("mobius entries must be integers");
          e[i] = r.get_num();
        }
        if (e[0] * e[3] - e[1] * e[2] <= 0) throw std::invalid_argument("mobius matrix needs positive determinant");
        return MobiusMap(e[0], e[1], e[2], e[3]);
      }
      if (w[0] == "pl") {
        std::string rest = no_space(body.substr(2));
        std::vector<PLHomeo::Point> pairs;
        for (const auto& g : paren_groups(rest)) {
          auto [x, y] = split_pair(g);
          pairs.emplace_back(parse_rational(x), parse_rational(y));
        }
        if (pairs.empty()) throw std::invalid_argument("pl map needs at least one breakpoint");
        return PLHomeo(pairs);
      }
      throw std::invalid_argument("unknown map kind '" + w[0] + "' (want mobius or pl)");
    });
    if (model && model_of(map) != *model) throw ParseError(ln.no, "generator does not match the declared model");
    if (!gens.empty() && model_of(map) != model_of(gens[0].map)) throw ParseError(ln.no, "mixing PL and Mobius maps");
    gens.push_back({name, map});
  }
  if (gens.empty()) {
    if (!model) throw ParseError(1, "no generators and no 'model' line");
    return MarkedGroup(*model);
  }
  Model m = model_of(gens[0].map);
  try {
    return MarkedGroup(m, gens);
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
}

std::string write_generators(const MarkedGroup& G) {
  std::string s;
  if (G.rank() == 0) return std::string("model ") + model_name(G.model()) + "\n";
  for (const auto& g : G.generators()) s += g.name + ": " + to_string(g.map) + "\n";
  return s;
}

PingPongTable parse_table(const std::string& text, Model m) {
  static const char* labels[4] = {"A+", "A-", "B+", "B-"};
  std::optional<OpenInterval> arcs[4];
  for (const auto& ln : content_lines(text)) {
    auto sp = ln.text.find_first_of(" \t");
    std::string label = ln.text.substr(0, sp);
    int k = -1;
    for (int i = 0; i < 4; ++i)
      if (label == labels[i]) k = i;
    if (k < 0) throw ParseError(ln.no, "expected a label A+, A-, B+ or B-, got '" + label + "'");
    if (arcs[k]) throw ParseError(ln.no, std::string("arc ") + labels[k] + " given twice");
    if (sp == std::string::npos) throw ParseError(ln.no, "missing interval");
    arcs[k] = at_line(ln.no, [&] { return parse_interval(ln.text.substr(sp), m); });
  }
  for (int i = 0; i < 4; ++i)
    if (!arcs[i]) throw ParseError(1, std::string("missing arc ") + labels[i]);
  return {*arcs[0], *arcs[1], *arcs[2], *arcs[3]};
}

std::string write_table(const PingPongTable& t) {
  return "A+ " + t.a_plus.str() + "\nA- " + t.a_minus.str() + "\nB+ " + t.b_plus.str() + "\nB- " + t.b_minus.str() + "\n";
}

FiniteSupportMeasure parse_measure(const std::string& text, std::optional<Model> fallback) {
  std::optional<Model> model;
  bool declared = false;
  std::map<CirclePoint, Rational> atoms;
  std::size_t last = 1;
  for (const auto& ln : content_lines(text)) {
    last = ln.no;
    auto w = words(ln.text);
    if (w[0] == "model") {
      if (declared) throw ParseError(ln.no, "model given twice");
      if (!atoms.empty()) throw ParseError(ln.no, "model line after atoms");
      if (w.size() != 2) throw ParseError(ln.no, "expected 'model angle|projective'");
      model = at_line(ln.no, [&] { return parse_model(w[1]); });
      declared = true;
    } else if (w[0] == "atom") {
      if (!model) model = fallback;
      if (!model) throw ParseError(ln.no, "atom before the model line");
      if (w.size() != 3) throw ParseError(ln.no, "expected 'atom p w'");
      CirclePoint p = at_line(ln.no, [&] { return parse_point(w[1], *model); });
      Rational r = at_line(ln.no, [&] { return parse_rational(w[2]); });
      if (atoms.count(p)) throw ParseError(ln.no, "repeated atom " + p.str());
      atoms.emplace(p, r);
    } else {
      throw ParseError(ln.no, "unknown directive '" + w[0] + "'");
    }
  }
  if (!model) model = fallback;
  if (!model) throw ParseError(1, "missing 'model' line");
  return at_line(last, [&] { return FiniteSupportMeasure(*model, atoms); });
}

std::string write_measure(const FiniteSupportMeasure& mu) {
  std::string s = std::string("model ") + model_name(mu.model()) + "\n";
  for (const auto& [p, w] : mu.atoms()) s += "atom " + p.str() + " " + to_string(w) + "\n";
  return s;
}

PlanarOrderTree parse_tree(const std::string& text) {
  PlanarOrderTree T;
  std::size_t last = 1;
  for (const auto& ln : content_lines(text)) {
    last = ln.no;
    auto w = words(ln.text);
    at_line(ln.no, [&] {
      if (w[0] == "vertex") {
        if (w.size() != 3) throw std::invalid_argument("expected 'vertex <id> <kind>'");
        T.add_vertex(w[1], parse_vertex_kind(w[2]));
      } else if (w[0] == "edge") {
        if (w.size() != 3) throw std::invalid_argument("expected 'edge <id> <id>'");
        T.add_edge(w[1], w[2]);
      } else if (w[0] == "cyclic" || w[0] == "linear") {
        if (w.size() < 2 || w[1].back() != ':') throw std::invalid_argument("expected '" + w[0] + " <id>: ...'");
        std::string v = w[1].substr(0, w[1].size() - 1);
        std::vector<std::string> order(w.begin() + 2, w.end());
        if (w[0] == "cyclic")
          T.set_cyclic(v, order);
        else
          T.set_linear(v, order);
      } else {
        throw std::invalid_argument("unknown directive '" + w[0] + "'");
      }
      return 0;
    });
  }
  at_line(last, [&] {
    T.finalize();
    return 0;
  });
  return T;
}

std::string write_tree(const PlanarOrderTree& T) {
  std::string s;
  for (std::size_t v = 0; v < T.size(); ++v) s += "vertex " + T.name(v) + " " + vertex_kind_name(T.kind(v)) + "\n";
  for (auto [a, b] : T.edges()) s += "edge " + T.name(a) + " " + T.name(b) + "\n";
  for (std::size_t v = 0; v < T.size(); ++v) {
    if (T.degree(v) < 3) continue;
    s += "cyclic " + T.name(v) + ":";
    for (auto w : T.cyclic(v)) s += " " + T.name(w);
    s += "\n";
  }
  for (std::size_t v = 0; v < T.size(); ++v) {
    if (T.kind(v) != VertexKind::Cataclysm || T.degree(v) < 2) continue;
    s += "linear " + T.name(v) + ":";
    for (auto w : T.linear(v)) s += " " + T.name(w);
    s += "\n";
  }
  return s;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

}  // namespace laminar
