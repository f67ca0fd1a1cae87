#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transfact/numeric.hpp"

namespace transfact {

/// Integer partition alpha of n: weakly decreasing positive parts. Indexes the
/// conjugacy classes of S_n by cycle type.
class Partition {
 public:
  /// Sorts the parts into weakly decreasing order; rejects empty input and
  /// non-positive parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// [1^n]
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity m_i of part i.
  int multiplicity(int part) const;

  /// "4,3,2"
  std::string to_string() const;
  /// Parses "4,3,2" (any order, whitespace allowed).
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

/// |C_alpha| = n! / prod_i (i^{m_i} m_i!).
BigInt class_size(const Partition& alpha);

/// Minimal number of k-cycle factors in a transitive factorisation of a
/// permutation of type alpha: (n + l(alpha) - 2)/(k - 1). Empty when k-1 does
/// not divide n + l - 2, in which case no such factorisation exists.
std::optional<int> mu_k(const Partition& alpha, int k);

}  // namespace transfact
