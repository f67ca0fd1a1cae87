#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "transfact/numeric.hpp"

namespace transfact {

enum class Colour { black, white };

/// Plane tree with properly two-coloured vertices; adjacency lists give the
/// cyclic (counter-clockwise) order of neighbours.
struct BicolouredPlaneTree {
  std::vector<Colour> colours;
  std::vector<std::vector<int>> adjacency;

  int vertex_count() const noexcept { return static_cast<int>(colours.size()); }
  int edge_count() const;
  /// (black, white) endpoint pairs in a fixed order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> vertices(Colour c) const;

  /// Serialisation read from the black dart (v, start); smaller is canonical.
  std::string code(int v, std::size_t start) const;
  /// Minimal code over all black darts, or "B" for a lone black vertex.
  std::string canonical_code() const;
  /// Rotations preserving colours and the cyclic orders: the number of black
  /// darts whose code is canonical. A lone black vertex counts 1.
  int rotation_count() const;
  /// Nested form from the canonical dart, e.g. "B(W,W(B))".
  std::string bracket() const;
  /// Tree, bipartite, cyclic orders consistent with the edge set.
  bool valid() const;
};

/// The tree with monovalent white vertices deleted.
struct ReducedTree {
  BicolouredPlaneTree tree;
  /// Deleted white leaves per remaining black vertex (indexed as in tree).
  std::vector<int> deleted_leaves;
  bool isolated_black() const { return tree.vertex_count() == 1; }
};

ReducedTree reduce(const BicolouredPlaneTree& t);

/// Rotational symmetries of a reduced tree; a lone black vertex counts k.
int aut_size(const ReducedTree& reduced, int k);

struct TreeClass {
  BicolouredPlaneTree tree;
  ReducedTree reduced;
  /// Symmetries of the whole tree; the weight of the class is 1/symmetry.
  int symmetry = 1;
  /// aut_size(reduced, k).
  int reduced_aut = 1;
  std::string canonical;

  nlohmann::json to_json() const;
};

inline constexpr int kMaxTreeEdges = 8;

/// One representative per plane isomorphism class with k edges.
std::vector<TreeClass> gen_trees(int k, int max_edges = kMaxTreeEdges);

/// Number of corner-rooted trees, i.e. with a distinguished black dart.
std::size_t rooted_tree_count(int k);

/// The reduced shapes named in the text: a lone black vertex, the path
/// black-white-black, a white centre with three black leaves, and the path
/// black-white-black-white-black.
std::vector<ReducedTree> named_reduced_shapes();

/// One left-hand-side term of the tree equation, with summation indices
/// i1..ik as edge labels 1..k: the coefficient times the product over black
/// groups of p_(sum of the group) and over white groups of Phi_(sum of the group).
struct PdeTerm {
  Rational coefficient;
  std::vector<std::vector<int>> black;
  std::vector<std::vector<int>> white;

  std::string to_string() const;
};

/// Terms from every tree class, merged when they agree up to renaming the
/// summation indices. Sorted by canonical form.
std::vector<PdeTerm> symbolic_pde_terms(int k);

/// The two-edge and three-edge equations written out by hand.
std::vector<PdeTerm> two_edge_terms();
std::vector<PdeTerm> three_edge_terms();

/// Canonical relabelling and merging, as used by symbolic_pde_terms.
std::vector<PdeTerm> collect_terms(const std::vector<PdeTerm>& terms, int k);

}  // namespace transfact
