#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "transfact/factor_sequence.hpp"
#include "transfact/numeric.hpp"
#include "transfact/partition.hpp"
#include "transfact/permutation.hpp"

namespace transfact {

/// Walk counts in the class algebra of S_n: the number of j-tuples of
/// k-cycles whose product equals the canonical representative of C_beta.
/// Built from the transition table T[beta][gamma] = #{k-cycles s : class(pi_beta s) = gamma},
/// one row per class; rows may be computed on several threads.
class ClassWalk {
 public:
  ClassWalk(int n, int k, int jobs = 1);

  int degree() const noexcept { return n_; }
  const std::vector<Partition>& classes() const noexcept { return classes_; }
  std::size_t class_index(const Partition& beta) const;

  /// Extends the table to length j on demand.
  const BigInt& count(const Partition& beta, int j);

 private:
  int n_;
  int k_;
  std::vector<Partition> classes_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, long>>> transitions_;
  std::vector<std::vector<BigInt>> levels_;
};

/// Exact factorisation counts for one k, memoised across calls. Transitive
/// counts come from all-factorisation counts by inclusion-exclusion over the
/// ways the cycles of pi split into orbits: fixing the block containing the
/// first cycle, A(S, j) = sum_B sum_i C(j, i) T(B, i) A(S \ B, j - i).
class FactorisationCounter {
 public:
  explicit FactorisationCounter(int k, int jobs = 1);

  int k() const noexcept { return k_; }

  /// Ordered j-tuples of k-cycles with product equal to a fixed pi in C_alpha.
  BigInt all(const Partition& alpha, int j);
  /// As all(), restricted to transitive tuples.
  BigInt transitive(const Partition& alpha, int j);
  /// c_k(alpha); zero when mu_k(alpha) is undefined.
  BigInt minimal_transitive(const Partition& alpha);

 private:
  ClassWalk& walk(int n);
  BigInt all_multiset(const std::vector<int>& cycles, int j);
  BigInt transitive_multiset(const std::vector<int>& cycles, int j);

  int k_;
  int jobs_;
  std::map<int, std::unique_ptr<ClassWalk>> walks_;
  std::map<std::pair<std::vector<int>, int>, BigInt> transitive_memo_;
};

BigInt count_all_factorisations(const Partition& alpha, int k, int j, int jobs = 1);
BigInt count_minimal_transitive(const Partition& alpha, int k, int jobs = 1);

/// c_2(alpha) = n^{l-3} (n+l-2)! prod_j alpha_j^{alpha_j} / (alpha_j - 1)!,
/// evaluated over the rationals and required to be integral.
BigInt hurwitz_count(const Partition& alpha);

inline constexpr int kDefaultDfsMaxDegree = 7;

/// Depth-first search for minimal transitive factorisations of a fixed pi into
/// k-cycles. A prefix sigma_1..sigma_t is extended only while the remainder
/// R = (sigma_1...sigma_t)^{-1} pi can still be reached, (k-1)(j-t) >= n - kappa(R),
/// and while the components of (cycles of pi + prefix factors) can still be
/// joined, (k-1)(j-t) >= components - 1.
class MinimalTransitiveSearch {
 public:
  /// Throws guard_exceeded when pi.degree() > max_degree.
  MinimalTransitiveSearch(const Permutation& pi, int k, int max_degree = kDefaultDfsMaxDegree);

  /// Visitor receives indices into factors(); return false to stop.
  using Visitor = std::function<bool(std::span<const std::size_t>)>;

  const std::vector<Permutation>& factors() const noexcept { return cycles_; }
  /// Empty when mu_k is undefined for the type of pi.
  std::optional<int> length() const noexcept { return length_; }

  /// Number of top-level branches (choices of sigma_1); 1 when length is 0.
  std::size_t branch_count() const;
  /// Runs the subtree whose first factor is factors()[branch].
  void run_branch(std::size_t branch, const Visitor& visit) const;
  void run(const Visitor& visit) const;

  FactorSequence materialise(std::span<const std::size_t> ids) const;

 private:
  void descend(int depth, std::vector<int>& remainder, std::vector<int>& parent,
               std::vector<std::size_t>& chosen, const Visitor& visit, bool& stop) const;
  int components(std::vector<int>& parent) const;

  Permutation pi_;
  int k_;
  int n_;
  std::optional<int> length_;
  std::vector<Permutation> cycles_;
  std::vector<std::vector<int>> inverse_images_;
  std::vector<std::vector<int>> supports_;
};

std::vector<FactorSequence> enumerate_minimal_transitive(
    const Permutation& pi, int k, std::size_t limit = std::numeric_limits<std::size_t>::max(),
    int max_degree = kDefaultDfsMaxDegree);

/// Counts by the search above; first-factor branches run concurrently.
BigInt count_minimal_transitive_dfs(const Permutation& pi, int k, int jobs = 1,
                                    int max_degree = kDefaultDfsMaxDegree);

/// Structure of a minimal transitive factorisation relative to its first factor.
struct Lemma22Report {
  /// V_1..V_l: components of the graph of sigma_2..sigma_j, as sorted labels,
  /// ordered by smallest element.
  std::vector<std::vector<int>> components;
  /// alpha_i: 1-based positions of the factors lying in V_i.
  std::vector<std::vector<int>> factor_positions;
  /// pi_i restricted to V_i.
  std::vector<Permutation> component_products;
  /// U: labels moved by sigma_1.
  std::vector<int> first_support;
  std::optional<Permutation> gamma;
  std::optional<Permutation> tau;
  std::optional<Permutation> rho;

  bool product_decomposes = false;         // pi = sigma_1 pi_1 ... pi_l
  bool meets_every_component = false;      // part 1
  bool single_cycle_per_component = false; // part 2
  bool minimal_on_first_support = false;   // part 3, with kappa(gamma)=1, kappa(rho)=l
  bool tree_encoding = false;              // each cycle of rho is U meet V_i, one per component

  bool all_hold() const {
    return product_decomposes && meets_every_component && single_cycle_per_component &&
           minimal_on_first_support && tree_encoding;
  }
};

/// Caller guarantees f is a minimal transitive factorisation with j >= 1.
Lemma22Report lemma22_check(const FactorSequence& f);

enum class CountMethod { dfs, dp };

const char* to_string(CountMethod method);

/// c_k(alpha) for a set of partitions; absent entries with mu_k undefined are
/// known zeros.
struct CountTable {
  int k = 2;
  CountMethod method = CountMethod::dp;
  std::map<Partition, BigInt> entries;

  /// Throws missing_counts when alpha is absent and mu_k(alpha) is defined.
  BigInt lookup(const Partition& alpha) const;
  bool covers(const Partition& alpha) const;
};

/// Tabulates every alpha with |alpha| <= n_max (and filter(alpha), when
/// given) whose mu_k is defined.
CountTable tabulate_counts(int k, int n_max, CountMethod method = CountMethod::dp, int jobs = 1,
                           const std::function<bool(const Partition&)>& filter = {});

}  // namespace transfact
