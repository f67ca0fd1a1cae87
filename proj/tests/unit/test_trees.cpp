#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "transfact/error.hpp"
#include "transfact/permutation.hpp"
#include "transfact/trees.hpp"

using namespace transfact;

namespace {

// Plane trees with k edges as pairs (a, b) in S_k with a b = (1 2 ... k)
// and cycles(a) + cycles(b) = k + 1; rotating the long cycle acts by
// conjugation. Returns the stabiliser size of every orbit.
std::multiset<int> orbit_stabilisers(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % k;
  auto compose = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[static_cast<std::size_t>(y[i])];
    return r;
  };
  auto inverse = [](const std::vector<int>& x) {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(x[i])] = static_cast<int>(i);
    return r;
  };
  auto cycles = [](const std::vector<int>& x) {
    std::vector<bool> seen(x.size());
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (seen[i]) continue;
      ++n;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(x[j])) seen[j] = true;
    }
    return n;
  };
  std::vector<std::vector<int>> rotations;
  std::vector<int> r(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = i;
  for (int s = 0; s < k; ++s) {
    rotations.push_back(r);
    r = compose(c, r);
  }
  std::set<std::vector<int>> seen;
  std::multiset<int> out;
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = i;
  do {
    const auto b = compose(inverse(a), c);
    if (cycles(a) + cycles(b) != k + 1 || seen.count(a)) continue;
    int stab = 0;
    for (const auto& g : rotations) {
      const auto conj = compose(compose(g, a), inverse(g));
      seen.insert(conj);
      if (conj == a) ++stab;
    }
    out.insert(stab);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("tree classes agree with the permutation model") {
  for (int k = 1; k <= 6; ++k) {
    const auto classes = gen_trees(k);
    std::multiset<int> symmetries;
    for (const auto& t : classes) {
      CHECK(t.tree.valid());
      CHECK(t.tree.edge_count() == k);
      symmetries.insert(t.symmetry);
    }
    CHECK(symmetries == orbit_stabilisers(k));
    CHECK(rooted_tree_count(k) == static_cast<std::size_t>(catalan(k)));
  }
  CHECK(gen_trees(2).size() == 2);
  CHECK(gen_trees(3).size() == 3);
  CHECK(gen_trees(4).size() == 6);
  CHECK(gen_trees(5).size() == 10);
}

TEST_CASE("symmetry counts for small k") {
  auto sorted = [](int k) {
    std::vector<int> s;
    for (const auto& t : gen_trees(k)) s.push_back(t.symmetry);
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sorted(3) == std::vector<int>{1, 3, 3});
  CHECK(sorted(4) == std::vector<int>{1, 1, 2, 2, 4, 4});
}

TEST_CASE("canonical codes separate classes and ignore relabelling") {
  const auto classes = gen_trees(5);
  std::set<std::string> codes;
  for (const auto& t : classes) {
    codes.insert(t.canonical);
    // Rotate every neighbour list; the class must not change.
    BicolouredPlaneTree r = t.tree;
    for (auto& nb : r.adjacency) std::rotate(nb.begin(), nb.begin() + static_cast<long>(nb.size() / 2), nb.end());
    CHECK(r.canonical_code() == t.canonical);
    CHECK(r.rotation_count() == t.symmetry);
  }
  CHECK(codes.size() == classes.size());
}

TEST_CASE("reduction and automorphisms of named shapes") {
  const auto shapes = named_reduced_shapes();
  REQUIRE(shapes.size() == 4);
  const std::vector<int> expected_without_k{2, 3, 2};
  for (int k = 3; k <= 5; ++k) {
    CHECK(aut_size(shapes[0], k) == k);
    for (std::size_t i = 1; i < 4; ++i) CHECK(aut_size(shapes[i], k) == expected_without_k[i - 1]);
  }
  // Deleting the white leaves of a black star leaves one vertex.
  for (const auto& t : gen_trees(4)) {
    if (t.tree.vertices(Colour::white).size() == 1) CHECK_FALSE(t.reduced.isolated_black());
    if (t.tree.vertices(Colour::black).size() == 1) CHECK(t.reduced.isolated_black());
  }
}

TEST_CASE("bracket notation") {
  for (const auto& t : gen_trees(2)) {
    const auto b = t.tree.bracket();
    CHECK((b == "B(W,W)" || b == "B(W(B))"));
  }
}

TEST_CASE("symbolic terms match the written two- and three-edge forms") {
  const auto two = symbolic_pde_terms(2);
  const auto three = symbolic_pde_terms(3);
  CHECK(two.size() == two_edge_terms().size());
  CHECK(three.size() == three_edge_terms().size());
  for (std::size_t i = 0; i < two.size(); ++i) CHECK(two[i].to_string() == two_edge_terms()[i].to_string());
  for (std::size_t i = 0; i < three.size(); ++i) CHECK(three[i].to_string() == three_edge_terms()[i].to_string());
  for (int k = 2; k <= 6; ++k) {
    bool star = false;
    for (const auto& t : symbolic_pde_terms(k)) {
      if (t.black.size() == 1 && t.white.size() == static_cast<std::size_t>(k)) {
        star = true;
        CHECK(t.coefficient == Rational(1, k));
      }
    }
    CHECK(star);
  }
}

TEST_CASE("tree generation guard") {
  CHECK_THROWS_AS(gen_trees(kMaxTreeEdges + 1), Error);
  CHECK_NOTHROW(gen_trees(kMaxTreeEdges + 1, kMaxTreeEdges + 1));
}
