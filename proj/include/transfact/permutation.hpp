#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "transfact/partition.hpp"

namespace transfact {

/// Bijection of a finite ground set. Points are indexed 0..n-1 internally;
/// each index carries a display label (1..n by default, the surviving original
/// labels after restriction). All fixed points are explicit.
///
/// Products follow one convention everywhere: the right factor acts first,
/// (a*b)(x) = a(b(x)). This is the convention under which the worked example
/// (247)(586)(479)(136)(235) = (1386)(254)(79) holds.
class Permutation {
 public:
  /// images[i] = image of index i. Labels default to 1..n.
  explicit Permutation(std::vector<int> images, std::vector<int> labels = {});

  static Permutation identity(int n);
  /// Builds from disjoint cycles written with labels 1..n.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Cycle notation such as "(247)(586)" or "(1,10,3)(2 4)"; degree given
  /// separately. An empty string or "()" is the identity.
  static Permutation parse(int n, const std::string& text);
  /// Canonical representative of C_alpha: cycles laid out left to right in
  /// decreasing length over 1..n, e.g. [3,2] -> (123)(45).
  static Permutation canonical(const Partition& alpha);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int index) const { return images_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  /// Index of a label; throws if absent.
  int index_of(int label) const;

  Permutation inverse() const;
  /// Cycles as index lists, each starting at its smallest index, ordered by
  /// first element. Fixed points included.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  /// kappa: number of cycles including fixed points.
  int cycle_count() const;
  bool is_identity() const;
  /// Indices moved by the permutation.
  std::vector<int> support() const;
  /// True iff exactly one nontrivial cycle, of length k.
  bool is_k_cycle(int k) const;

  /// g^{-1} * this * g
  Permutation conjugate_by(const Permutation& g) const;

  /// Deletes every point whose label is not in `keep_labels` from the cycles,
  /// preserving the cyclic order of survivors. The result is indexed over the
  /// kept labels in increasing order and retains them as display labels.
  Permutation restrict_to(std::span<const int> keep_labels) const;

  /// "(1386)(254)(79)"; fixed points omitted, identity prints "()". Elements
  /// are comma-separated when any label exceeds 9.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
  std::vector<int> labels_;
};

/// a*b with b acting first. Degrees and labels must agree.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Partition cycle_type(const Permutation& p);
Permutation restrict(const Permutation& p, std::span<const int> keep_labels);

/// All k-cycles of S_n, in a fixed order (by support, then arrangement).
std::vector<Permutation> all_k_cycles(int n, int k);

}  // namespace transfact
