#include "transfact/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "transfact/disjoint_set.hpp"
#include "transfact/error.hpp"

namespace transfact {

namespace {

// Nested child lists: node = children, colours alternate with depth.
struct Shape {
  std::vector<Shape> children;
};

std::vector<Shape> rooted_shapes(int edges, std::map<int, std::vector<Shape>>& memo) {
  if (auto it = memo.find(edges); it != memo.end()) return it->second;
  std::vector<Shape> out;
  if (edges == 0) {
    out.push_back({});
  } else {
    // The first child subtree uses `first` edges including the edge to it.
    for (int first = 1; first <= edges; ++first) {
      for (const auto& child : rooted_shapes(first - 1, memo)) {
        for (const auto& rest : rooted_shapes(edges - first, memo)) {
          Shape s;
          s.children.push_back(child);
          s.children.insert(s.children.end(), rest.children.begin(), rest.children.end());
          out.push_back(std::move(s));
        }
      }
    }
  }
  memo.emplace(edges, out);
  return out;
}

BicolouredPlaneTree build(const Shape& root) {
  BicolouredPlaneTree t;
  std::function<int(const Shape&, Colour, int)> rec = [&](const Shape& s, Colour c, int parent) {
    const int v = t.vertex_count();
    t.colours.push_back(c);
    t.adjacency.emplace_back();
    if (parent >= 0) {
      t.adjacency[static_cast<std::size_t>(v)].push_back(parent);
      t.adjacency[static_cast<std::size_t>(parent)].push_back(v);
    }
    const Colour next = c == Colour::black ? Colour::white : Colour::black;
    for (const auto& child : s.children) rec(child, next, v);
    return v;
  };
  rec(root, Colour::black, -1);
  return t;
}

void canonicalise_groups(std::vector<std::vector<int>>& groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
}

}  // namespace

int BicolouredPlaneTree::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& a : adjacency) degree_sum += a.size();
  return static_cast<int>(degree_sum / 2);
}

std::vector<std::pair<int, int>> BicolouredPlaneTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (colours[static_cast<std::size_t>(v)] != Colour::black) continue;
    for (int u : adjacency[static_cast<std::size_t>(v)]) out.emplace_back(v, u);
  }
  return out;
}

std::vector<int> BicolouredPlaneTree::vertices(Colour c) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (colours[static_cast<std::size_t>(v)] == c) out.push_back(v);
  }
  return out;
}

std::string BicolouredPlaneTree::code(int v, std::size_t start) const {
  std::function<void(int, int, std::string&)> rec = [&](int x, int parent, std::string& out) {
    const auto& nb = adjacency[static_cast<std::size_t>(x)];
    const auto at = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), parent) - nb.begin());
    out += '(';
    for (std::size_t s = 1; s < nb.size(); ++s) rec(nb[(at + s) % nb.size()], x, out);
    out += ')';
  };
  const auto& nb = adjacency[static_cast<std::size_t>(v)];
  std::string out = "[";
  for (std::size_t s = 0; s < nb.size(); ++s) rec(nb[(start + s) % nb.size()], v, out);
  out += ']';
  return out;
}

std::string BicolouredPlaneTree::canonical_code() const {
  std::string best;
  bool any = false;
  for (int v = 0; v < vertex_count(); ++v) {
    if (colours[static_cast<std::size_t>(v)] != Colour::black) continue;
    for (std::size_t s = 0; s < adjacency[static_cast<std::size_t>(v)].size(); ++s) {
      std::string c = code(v, s);
      if (!any || c < best) best = std::move(c);
      any = true;
    }
  }
  return any ? best : "B";
}

int BicolouredPlaneTree::rotation_count() const {
  const std::string best = canonical_code();
  if (best == "B") return 1;
  int count = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (colours[static_cast<std::size_t>(v)] != Colour::black) continue;
    for (std::size_t s = 0; s < adjacency[static_cast<std::size_t>(v)].size(); ++s) count += code(v, s) == best;
  }
  return count;
}

std::string BicolouredPlaneTree::bracket() const {
  int root = -1;
  std::size_t start = 0;
  const std::string best = canonical_code();
  for (int v = 0; v < vertex_count() && root < 0; ++v) {
    if (colours[static_cast<std::size_t>(v)] != Colour::black) continue;
    if (adjacency[static_cast<std::size_t>(v)].empty()) {
      root = v;
      break;
    }
    for (std::size_t s = 0; s < adjacency[static_cast<std::size_t>(v)].size(); ++s) {
      if (code(v, s) == best) {
        root = v;
        start = s;
        break;
      }
    }
  }
  if (root < 0) return "";
  std::function<std::string(int, int, std::size_t)> rec = [&](int x, int parent, std::size_t first) {
    std::string out = colours[static_cast<std::size_t>(x)] == Colour::black ? "B" : "W";
    const auto& nb = adjacency[static_cast<std::size_t>(x)];
    std::vector<std::string> kids;
    for (std::size_t s = 0; s < nb.size(); ++s) {
      const int u = nb[(first + s) % nb.size()];
      if (u == parent) continue;
      const auto& nu = adjacency[static_cast<std::size_t>(u)];
      const auto at = static_cast<std::size_t>(std::find(nu.begin(), nu.end(), x) - nu.begin());
      kids.push_back(rec(u, x, (at + 1) % nu.size()));
    }
    if (!kids.empty()) {
      out += '(';
      for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + kids[i];
      out += ')';
    }
    return out;
  };
  if (adjacency[static_cast<std::size_t>(root)].empty()) return "B";
  // Children of the root start at the canonical dart.
  return rec(root, -1, start);
}

bool BicolouredPlaneTree::valid() const {
  const int n = vertex_count();
  if (n == 0 || static_cast<int>(adjacency.size()) != n) return false;
  if (edge_count() != n - 1) return false;
  DisjointSet ds(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& nb = adjacency[static_cast<std::size_t>(v)];
    std::set<int> distinct(nb.begin(), nb.end());
    if (distinct.size() != nb.size()) return false;
    for (int u : nb) {
      if (u < 0 || u >= n || u == v) return false;
      if (colours[static_cast<std::size_t>(u)] == colours[static_cast<std::size_t>(v)]) return false;
      const auto& back = adjacency[static_cast<std::size_t>(u)];
      if (std::find(back.begin(), back.end(), v) == back.end()) return false;
      ds.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
  }
  return ds.components() == 1;
}

ReducedTree reduce(const BicolouredPlaneTree& t) {
  std::vector<int> keep_index(static_cast<std::size_t>(t.vertex_count()), -1);
  ReducedTree out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const bool leaf_white = t.colours[static_cast<std::size_t>(v)] == Colour::white &&
                            t.adjacency[static_cast<std::size_t>(v)].size() <= 1;
    if (leaf_white) continue;
    keep_index[static_cast<std::size_t>(v)] = out.tree.vertex_count();
    out.tree.colours.push_back(t.colours[static_cast<std::size_t>(v)]);
    out.tree.adjacency.emplace_back();
    out.deleted_leaves.push_back(0);
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    const int nv = keep_index[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    for (int u : t.adjacency[static_cast<std::size_t>(v)]) {
      const int nu = keep_index[static_cast<std::size_t>(u)];
      if (nu >= 0) out.tree.adjacency[static_cast<std::size_t>(nv)].push_back(nu);
      else ++out.deleted_leaves[static_cast<std::size_t>(nv)];
    }
  }
  return out;
}

int aut_size(const ReducedTree& reduced, int k) {
  if (reduced.isolated_black()) return k;
  return reduced.tree.rotation_count();
}

nlohmann::json TreeClass::to_json() const {
  return {{"tree", tree.bracket()},
          {"reduced", reduced.tree.bracket()},
          {"black_vertices", tree.vertices(Colour::black).size()},
          {"white_vertices", tree.vertices(Colour::white).size()},
          {"symmetry", symmetry},
          {"reduced_aut", reduced_aut}};
}

std::size_t rooted_tree_count(int k) {
  std::map<int, std::vector<Shape>> memo;
  return rooted_shapes(k, memo).size();
}

std::vector<TreeClass> gen_trees(int k, int max_edges) {
  if (k < 1) fail(ErrorCode::invalid_argument, "trees need at least one edge");
  if (k > max_edges) {
    fail(ErrorCode::guard_exceeded, "tree size " + std::to_string(k) + " exceeds the limit " + std::to_string(max_edges));
  }
  std::map<int, std::vector<Shape>> memo;
  std::map<std::string, TreeClass> classes;
  for (const auto& shape : rooted_shapes(k, memo)) {
    BicolouredPlaneTree t = build(shape);
    std::string code = t.canonical_code();
    if (classes.count(code)) continue;
    TreeClass c;
    c.reduced = reduce(t);
    c.reduced_aut = aut_size(c.reduced, k);
    c.symmetry = t.rotation_count();
    c.canonical = code;
    c.tree = std::move(t);
    classes.emplace(std::move(code), std::move(c));
  }
  std::vector<TreeClass> out;
  for (auto& [code, c] : classes) out.push_back(std::move(c));
  return out;
}

std::vector<ReducedTree> named_reduced_shapes() {
  auto path = [](int vertices) {
    BicolouredPlaneTree t;
    for (int v = 0; v < vertices; ++v) {
      t.colours.push_back(v % 2 ? Colour::white : Colour::black);
      t.adjacency.emplace_back();
      if (v) {
        t.adjacency[static_cast<std::size_t>(v)].push_back(v - 1);
        t.adjacency[static_cast<std::size_t>(v - 1)].push_back(v);
      }
    }
    return t;
  };
  BicolouredPlaneTree star;
  star.colours = {Colour::white, Colour::black, Colour::black, Colour::black};
  star.adjacency = {{1, 2, 3}, {0}, {0}, {0}};
  std::vector<ReducedTree> out;
  for (auto t : {path(1), path(3), star, path(5)}) {
    ReducedTree r;
    r.deleted_leaves.assign(static_cast<std::size_t>(t.vertex_count()), 0);
    r.tree = std::move(t);
    out.push_back(std::move(r));
  }
  return out;
}

std::string PdeTerm::to_string() const {
  auto index = [](const std::vector<int>& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "+i" : "i") + std::to_string(g[i]);
    return out;
  };
  std::ostringstream out;
  out << transfact::to_string(coefficient);
  for (const auto& g : white) out << " Phi_{" << index(g) << '}';
  for (const auto& g : black) out << " p_{" << index(g) << '}';
  return out.str();
}

std::vector<PdeTerm> collect_terms(const std::vector<PdeTerm>& terms, int k) {
  std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, Rational> merged;
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (const auto& t : terms) {
    std::iota(perm.begin(), perm.end(), 1);
    std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> best;
    bool first = true;
    do {
      auto relabel = [&](std::vector<std::vector<int>> groups) {
        for (auto& g : groups)
          for (auto& i : g) i = perm[static_cast<std::size_t>(i - 1)];
        canonicalise_groups(groups);
        return groups;
      };
      auto candidate = std::make_pair(relabel(t.black), relabel(t.white));
      if (first || candidate < best) best = std::move(candidate);
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    merged[best] += t.coefficient;
  }
  std::vector<PdeTerm> out;
  for (auto& [key, c] : merged) {
    if (c == 0) continue;
    out.push_back({c, key.first, key.second});
  }
  return out;
}

std::vector<PdeTerm> symbolic_pde_terms(int k) {
  std::vector<PdeTerm> raw;
  for (const auto& c : gen_trees(k)) {
    const auto edges = c.tree.edges();
    std::map<int, std::vector<int>> groups;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      groups[edges[e].first].push_back(static_cast<int>(e) + 1);
      groups[edges[e].second].push_back(static_cast<int>(e) + 1);
    }
    PdeTerm t;
    t.coefficient = Rational(1, c.symmetry);
    for (auto& [v, g] : groups) {
      (c.tree.colours[static_cast<std::size_t>(v)] == Colour::black ? t.black : t.white).push_back(g);
    }
    raw.push_back(std::move(t));
  }
  return collect_terms(raw, k);
}

std::vector<PdeTerm> two_edge_terms() {
  return collect_terms({{Rational(1, 2), {{1, 2}}, {{1}, {2}}}, {Rational(1, 2), {{1}, {2}}, {{1, 2}}}}, 2);
}

std::vector<PdeTerm> three_edge_terms() {
  return collect_terms({{Rational(1, 3), {{1, 2, 3}}, {{1}, {2}, {3}}},
                        {Rational(1, 3), {{1}, {2}, {3}}, {{1, 2, 3}}},
                        {Rational(1), {{1, 2}, {3}}, {{1}, {2, 3}}}},
                       3);
}

}  // namespace transfact
