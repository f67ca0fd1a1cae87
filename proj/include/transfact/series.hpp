#pragma once

#include <climits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "transfact/numeric.hpp"

namespace transfact {

/// Variables of a series ring with their grading weights and the truncation
/// bound on weighted total degree. kUnbounded turns the ring into a
/// polynomial ring. A weight of 0 leaves a variable out of the grading.
struct SeriesRing {
  static constexpr int kUnbounded = INT_MAX;

  std::vector<std::string> names;
  std::vector<int> weights;
  int max_degree = kUnbounded;

  static std::shared_ptr<const SeriesRing> make(std::vector<std::string> names, int max_degree,
                                                std::vector<int> weights = {});

  std::size_t size() const noexcept { return names.size(); }
  std::size_t index(const std::string& name) const;
  bool truncated() const noexcept { return max_degree != kUnbounded; }
  bool operator==(const SeriesRing&) const = default;
};

using RingPtr = std::shared_ptr<const SeriesRing>;
using Exponents = std::vector<int>;

/// Truncated multivariate power series with exact rational coefficients.
/// No stored monomial exceeds the ring's degree bound, and no stored
/// coefficient is zero.
class ExactSeries {
 public:
  explicit ExactSeries(RingPtr ring);

  static ExactSeries constant(RingPtr ring, const Rational& c);
  static ExactSeries variable(RingPtr ring, std::size_t index);
  static ExactSeries variable(RingPtr ring, const std::string& name);
  static ExactSeries monomial(RingPtr ring, Exponents exps, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  int max_degree() const noexcept { return ring_->max_degree; }

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree_of(const Exponents& exps) const;
  /// Smallest weighted degree present; kUnbounded for zero.
  int valuation() const;
  /// Largest weighted degree present; -1 for zero.
  int top_degree() const;

  /// Adds c to the coefficient of x^exps; ignores monomials above the bound.
  void add_term(const Exponents& exps, const Rational& c);

  ExactSeries operator-() const;
  ExactSeries& operator+=(const ExactSeries& other);
  ExactSeries& operator-=(const ExactSeries& other);
  ExactSeries& operator*=(const Rational& c);
  friend ExactSeries operator+(ExactSeries a, const ExactSeries& b) { return a += b; }
  friend ExactSeries operator-(ExactSeries a, const ExactSeries& b) { return a -= b; }
  friend ExactSeries operator*(ExactSeries a, const Rational& c) { return a *= c; }
  friend ExactSeries operator*(const Rational& c, ExactSeries a) { return a *= c; }
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);

  ExactSeries pow(unsigned exponent) const;
  ExactSeries derivative(std::size_t index) const;
  /// x_i d/dx_i
  ExactSeries euler(std::size_t index) const;
  /// Multiplies by x^exps.
  ExactSeries shift(const Exponents& exps) const;
  /// Divides each weighted-degree-d part by d^power (d = 0 must be absent when power > 0).
  ExactSeries scale_by_degree(int power) const;

  /// Requires constant term 1, the rest of positive valuation, and a truncated ring.
  ExactSeries log() const;
  /// Requires positive valuation and a truncated ring.
  ExactSeries exp() const;
  /// 1/(1 - g) for g of positive valuation, truncated ring.
  ExactSeries geometric() const;

  /// Replaces variable i by images[i], all in one target ring. When this
  /// series is truncated each image must have valuation at least the weight
  /// of the variable it replaces; the result is truncated at
  /// min(target bound, this bound).
  ExactSeries evaluate(const std::vector<ExactSeries>& images) const;
  /// Copies into `target`, sending variable i to the target variable named
  /// target_names[i].
  ExactSeries embed(const RingPtr& target, const std::vector<std::string>& target_names) const;
  /// Same coefficients with a lower bound.
  ExactSeries truncate(int max_degree) const;
  /// Same coefficients with a different bound; exceeding monomials dropped.
  ExactSeries with_ring(const RingPtr& ring) const;

  /// Swaps variables i and j.
  ExactSeries swap_variables(std::size_t i, std::size_t j) const;

  bool operator==(const ExactSeries& other) const;

  /// "coeff * x1^a x2^b" terms joined by " + ", sorted by degree then exponents.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void require_same_ring(const ExactSeries& other) const;

  RingPtr ring_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace transfact
