#include "laminar/ordertree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace laminar {

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Ordinary: return "ordinary";
    case VertexKind::Singular: return "singular";
    case VertexKind::Cataclysm: return "cataclysm";
  }
  return "?";
}

VertexKind parse_vertex_kind(const std::string& s) {
  if (s == "ordinary") return VertexKind::Ordinary;
  if (s == "singular") return VertexKind::Singular;
  if (s == "cataclysm") return VertexKind::Cataclysm;
  throw std::invalid_argument("unknown vertex kind '" + s + "'");
}

void PlanarOrderTree::add_vertex(const std::string& id, VertexKind kind) {
  if (index_.count(id)) throw std::invalid_argument("duplicate vertex " + id);
  index_[id] = names_.size();
  names_.push_back(id);
  kind_.push_back(kind);
  adj_.emplace_back();
  cyclic_.emplace_back();
  linear_.emplace_back();
  finalized_ = false;
}

std::size_t PlanarOrderTree::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex " + name);
  return it->second;
}

void PlanarOrderTree::add_edge(const std::string& a, const std::string& b) {
  std::size_t x = id(a), y = id(b);
  if (x == y) throw std::invalid_argument("loop at " + a);
  if (std::find(adj_[x].begin(), adj_[x].end(), y) != adj_[x].end()) throw std::invalid_argument("repeated edge " + a + " " + b);
  adj_[x].push_back(y);
  adj_[y].push_back(x);
  finalized_ = false;
}

void PlanarOrderTree::set_cyclic(const std::string& v, const std::vector<std::string>& order) {
  std::size_t x = id(v);
  cyclic_[x].clear();
  for (const auto& n : order) cyclic_[x].push_back(id(n));
  finalized_ = false;
}

void PlanarOrderTree::set_linear(const std::string& v, const std::vector<std::string>& order) {
  std::size_t x = id(v);
  linear_[x].clear();
  for (const auto& n : order) linear_[x].push_back(id(n));
  finalized_ = false;
}

void PlanarOrderTree::finalize() {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("empty tree");
  std::size_t edge_count = 0;
  for (const auto& a : adj_) edge_count += a.size();
  if (edge_count / 2 != n - 1) throw std::invalid_argument("not a tree: wrong number of edges");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw std::invalid_argument("not a tree: disconnected");

  for (std::size_t v = 0; v < n; ++v) {
    if (cyclic_[v].empty()) {
      if (adj_[v].size() >= 3) throw std::invalid_argument("vertex " + names_[v] + " of degree >= 3 needs a cyclic order");
      cyclic_[v] = adj_[v];
    }
    std::vector<std::size_t> a = adj_[v], c = cyclic_[v];
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    if (a != c) throw std::invalid_argument("cyclic order at " + names_[v] + " is not a permutation of its neighbours");
    if (!linear_[v].empty()) {
      if (kind_[v] != VertexKind::Cataclysm) throw std::invalid_argument("linear order given at non-cataclysm vertex " + names_[v]);
      const auto& cy = cyclic_[v];
      const auto& li = linear_[v];
      if (li.size() != cy.size()) throw std::invalid_argument("linear order at " + names_[v] + " has the wrong size");
      auto start = std::find(cy.begin(), cy.end(), li[0]);
      if (start == cy.end()) throw std::invalid_argument("linear order at " + names_[v] + " names a non-neighbour");
      std::size_t s = std::size_t(start - cy.begin());
      for (std::size_t i = 0; i < li.size(); ++i)
        if (cy[(s + i) % cy.size()] != li[i])
          throw std::invalid_argument("linear order at " + names_[v] + " does not refine the cyclic order");
    } else if (kind_[v] == VertexKind::Cataclysm) {
      linear_[v] = cyclic_[v];
    }
  }
  finalized_ = true;
}

std::vector<std::size_t> PlanarOrderTree::ends() const {
  std::vector<std::size_t> e;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    if (adj_[v].size() == 1) e.push_back(v);
  return e;
}

std::vector<std::pair<std::size_t, std::size_t>> PlanarOrderTree::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    for (std::size_t w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// parent pointers and depths of a BFS from root
void bfs(const PlanarOrderTree& T, std::size_t root, std::vector<std::size_t>& parent, std::vector<std::size_t>& depth) {
  const std::size_t n = T.size();
  parent.assign(n, n);
  depth.assign(n, 0);
  std::queue<std::size_t> q;
  q.push(root);
  parent[root] = root;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : T.cyclic(v))
      if (parent[w] == n) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        q.push(w);
      }
  }
}

std::vector<std::size_t> path_from_root(const std::vector<std::size_t>& parent, std::size_t v) {
  std::vector<std::size_t> p{v};
  while (parent[v] != v) {
    v = parent[v];
    p.push_back(v);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

std::size_t common_prefix(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

int PlanarOrderTree::end_order_from(std::size_t basepoint, std::size_t e1, std::size_t e2, std::size_t e3) const {
  if (!finalized_) throw std::logic_error("tree not finalized");
  for (std::size_t e : {e1, e2, e3})
    if (e >= adj_.size() || adj_[e].size() != 1) throw std::invalid_argument("not an end");
  if (e1 == e2 || e2 == e3 || e1 == e3) throw std::invalid_argument("repeated end");
  std::vector<std::size_t> parent, depth;
  bfs(*this, basepoint, parent, depth);
  std::vector<std::size_t> r[3] = {path_from_root(parent, e1), path_from_root(parent, e2), path_from_root(parent, e3)};
  // the median is the deepest pairwise branching vertex
  std::size_t best = 0, m = basepoint;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::size_t k = common_prefix(r[i], r[j]);
      if (k > best) {
        best = k;
        m = r[i][k - 1];
      }
    }
  std::size_t germ[3];
  for (int i = 0; i < 3; ++i) {
    std::size_t at = best - 1;
    if (at < r[i].size() && r[i][at] == m && at + 1 < r[i].size())
      germ[i] = r[i][at + 1];
    else
      germ[i] = parent[m];  // this ray left before the median
  }
  const auto& cy = cyclic_[m];
  auto pos = [&](std::size_t w) { return std::size_t(std::find(cy.begin(), cy.end(), w) - cy.begin()); };
  std::size_t a = pos(germ[0]), b = pos(germ[1]), c = pos(germ[2]);
  if (a == b || b == c || a == c) throw std::logic_error("ends do not branch at the median");
  int ascents = (a < b) + (b < c) + (c < a);
  return ascents == 2 ? 1 : -1;
}

int end_cyclic_order(const PlanarOrderTree& T, std::size_t e1, std::size_t e2, std::size_t e3) {
  int x = T.end_order_from(0, e1, e2, e3);
  int y = T.end_order_from(e1, e1, e2, e3);
  if (x != y) throw std::logic_error("end orientation depends on the basepoint");
  return x;
}

std::vector<std::size_t> ends_in_cyclic_order(const PlanarOrderTree& T) {
  std::vector<std::size_t> e = T.ends();
  if (e.size() < 3) throw std::invalid_argument("need at least three ends for a cyclic order");
  std::vector<std::size_t> out{e[0]};
  // contour walk: leave each vertex by the germ after the one we came in on
  std::size_t prev = e[0], cur = T.cyclic(e[0])[0];
  while (cur != e[0]) {
    const auto& cy = T.cyclic(cur);
    if (cy.size() == 1) {
      out.push_back(cur);
      std::swap(prev, cur);
      continue;
    }
    std::size_t i = std::size_t(std::find(cy.begin(), cy.end(), prev) - cy.begin());
    prev = cur;
    cur = cy[(i + 1) % cy.size()];
  }
  return out;
}

std::map<std::size_t, CirclePoint> tree_to_circle(const PlanarOrderTree& T) {
  std::vector<std::size_t> order = ends_in_cyclic_order(T);
  std::map<std::size_t, CirclePoint> out;
  for (std::size_t k = 0; k < order.size(); ++k) out.emplace(order[k], CirclePoint::angle(ratio(k, order.size())));
  return out;
}

FiniteLamination lamination_from_tree(const PlanarOrderTree& T) {
  std::vector<std::size_t> order = ends_in_cyclic_order(T);
  const std::size_t n = order.size();
  bool any = false;
  for (std::size_t v = 0; v < T.size(); ++v)
    if (T.kind(v) == VertexKind::Singular && T.degree(v) >= 3) any = true;
  if (!any) throw std::invalid_argument("tree has no singular vertex of degree >= 3; the lamination would be empty");

  std::vector<std::vector<Rational>> sep(T.size());
  std::vector<std::size_t> parent, depth;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t x = order[k], y = order[(k + 1) % n];
    bfs(T, x, parent, depth);
    std::vector<std::size_t> path = path_from_root(parent, y);
    std::vector<std::size_t> hits;
    for (std::size_t v : path)
      if (T.kind(v) == VertexKind::Singular && T.degree(v) >= 2) hits.push_back(v);
    for (std::size_t i = 0; i < hits.size(); ++i) {
      Rational t = ratio(k, n) + ratio(1, n) * ratio(i + 1, hits.size() + 1);
      sep[hits[i]].push_back(t);
    }
  }
  std::vector<Leaf> leaves;
  for (std::size_t v = 0; v < T.size(); ++v) {
    const auto& q = sep[v];
    if (q.size() < 2) continue;
    for (std::size_t j = 0; j < q.size(); ++j)
      leaves.emplace_back(CirclePoint::angle(q[j]), CirclePoint::angle(q[(j + 1) % q.size()]));
  }
  return FiniteLamination(Model::Angle, leaves);
}

}  // namespace laminar
