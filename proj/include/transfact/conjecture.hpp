#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "transfact/enumerator.hpp"
#include "transfact/series.hpp"

namespace transfact {

/// Ring x1..xm truncated at total degree n_max.
RingPtr x_ring(int m, int n_max);
/// Polynomial ring w1..wm.
RingPtr w_ring(int m);

/// P_k^(m): sum over alpha with m parts and |alpha| <= n_max of
/// c_k(alpha) |C_alpha| / (mu! n!) times the sum over all m! orderings of the
/// parts as exponents (repeated orderings kept).
ExactSeries p_from_counts(const CountTable& counts, int m, int n_max);

/// The symmetric polynomial S_k^(m) in w1..wm for m <= 3:
///   m=1: 1
///   m=2: (k-1) q(w1,w2)^2 with q = (w1^{k-1} - w2^{k-1})/(w1 - w2)
///   m=3: (G/V)^2
/// Throws unsupported for m > 3.
ExactSeries s_poly(int k, int m);
/// As s_poly, but m=2 without the factor k-1, i.e. q(w1,w2)^2 alone.
ExactSeries s_poly_uncorrected(int k, int m);
/// The antisymmetric G for m=3.
ExactSeries g_poly(int k);

/// S(w(x1),...,w(xm)) prod_i x_i w'(x_i), truncated at n_max.
ExactSeries rhs_series(int k, const ExactSeries& s, int n_max);
/// (sum_i x_i d/dx_i)^(3-m) P; negative powers divide each degree-d part by d^(m-3).
ExactSeries lhs_series(const ExactSeries& p, int m);

struct Mismatch {
  Exponents exponents;
  Rational lhs;
  Rational rhs;
};

struct ConjectureReport {
  std::string check;
  int k = 0;
  int m = 0;
  int n_max = 0;
  std::string form;
  bool pass = false;
  std::size_t compared_terms = 0;
  std::vector<Mismatch> mismatches;
  /// Variable names of the compared ring; omitted from JSON when empty.
  std::vector<std::string> variables;

  nlohmann::json to_json() const;
};

/// Coefficientwise comparison; fills mismatches (first `limit` recorded).
ConjectureReport compare_series(std::string check, int k, int m, int n_max, const ExactSeries& lhs,
                                const ExactSeries& rhs, std::size_t limit = 20);

enum class SForm { closed_form, uncorrected, unit };

/// Compares lhs_series(P from counts) with rhs_series(S). SForm::unit uses
/// S = 1 (valid for k = 2 and any m); the others need m <= 3.
ConjectureReport check_conjecture(const CountTable& counts, int m, int n_max, SForm form = SForm::closed_form);

/// log((w1 - w2)/(x1 - x2)) - (w1^k - w2^k)/(w1 - w2), constant term
/// removed, against P^(2) from counts.
ConjectureReport p2_closed_form_check(const CountTable& counts, int n_max);

/// Constant term of the two-point closed form before normalisation.
Rational p2_closed_form_constant(int k, int n_max);

}  // namespace transfact
