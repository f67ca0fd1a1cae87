#pragma once

#include <string>
#include <vector>

#include "transfact/permutation.hpp"

namespace transfact {

/// Ordered tuple (sigma_1, ..., sigma_j) of k-cycles of S_n.
class FactorSequence {
 public:
  /// Every factor must be a k-cycle of degree n.
  FactorSequence(int n, int k, std::vector<Permutation> factors);

  int degree() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t length() const noexcept { return factors_.size(); }
  const std::vector<Permutation>& factors() const noexcept { return factors_; }
  const Permutation& operator[](std::size_t i) const { return factors_[i]; }

  /// sigma_1 * sigma_2 * ... * sigma_j (sigma_j acts first).
  Permutation product() const;

  /// j(k-1) == n - kappa(product): equality in the subadditivity bound.
  bool is_minimal() const;
  /// Transitive with length mu_k of the product's cycle type.
  bool is_minimal_transitive() const;

  /// "(247)(586)(479)(136)(235)" style, one parenthesised factor each.
  std::string to_string() const;

 private:
  int n_;
  int k_;
  std::vector<Permutation> factors_;
};

/// True iff the graph on {1..n} whose edges join consecutive elements of each
/// factor's cycle is connected, i.e. the factors generate a transitive group.
bool is_transitive(const FactorSequence& f);

}  // namespace transfact
