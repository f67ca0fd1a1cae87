#pragma once

#include <cstddef>
#include <vector>

#include "transfact/series.hpp"

namespace transfact {

/// Univariate ring in `name` truncated at degree n_max.
RingPtr univariate_ring(int n_max, const std::string& name = "x");

/// The solution of w = x exp(w^{k-1}), by fixed-point iteration; throws
/// internal if it disagrees with the Lagrange coefficients.
ExactSeries w_series(int k, int n_max);
/// sum_m (1 + (k-1)m)^{m-1} / m! x^{1+(k-1)m}
ExactSeries w_closed_form(int k, int n_max);

/// x dw/dx, termwise and as w / (1 - (k-1) w^{k-1}); throws internal if
/// the two differ.
ExactSeries x_dw_dx(int k, int n_max);

/// f(x_var) for univariate f, as a series in `ring`.
ExactSeries substitute_univariate(const ExactSeries& f, const RingPtr& ring, std::size_t var);

/// Sum of x^e over exponents e >= 1 on `vars` with |e| = degree; h+_0 is 1.
ExactSeries h_plus(int degree, const RingPtr& ring, const std::vector<std::size_t>& vars);

/// sum_i f_i h+_i(vars). Throws precondition when f has a constant term and
/// there are two or more variables.
ExactSeries umbral_h_plus(const ExactSeries& f, const RingPtr& ring, const std::vector<std::size_t>& vars);

/// sum_i f(x_i) prod_{p != i} x_p / (x_i - x_p), cleared of denominators and
/// divided exactly by the Vandermonde product. Same precondition.
ExactSeries umbral_h_plus_closed_form(const ExactSeries& f, const RingPtr& ring,
                                      const std::vector<std::size_t>& vars);

/// sum_{s<j} a^s b^{j-1-s}
ExactSeries power_difference_quotient(const ExactSeries& a, const ExactSeries& b, int j);

/// (f(x_a) - f(x_b)) / (x_a - x_b) expanded termwise. Exact up to the ring
/// bound when f is known to one degree beyond it.
ExactSeries divided_difference(const ExactSeries& f, const RingPtr& ring, std::size_t a, std::size_t b);

/// Exact quotient by (x_a - x_b); throws precondition on a nonzero remainder.
/// The quotient is exact up to (bound - weight).
ExactSeries divide_by_difference(const ExactSeries& g, std::size_t a, std::size_t b);

/// prod_{i<j} (x_{vars[i]} - x_{vars[j]})
ExactSeries vandermonde(const RingPtr& ring, const std::vector<std::size_t>& vars);

/// Exact quotient by vandermonde(vars), by one linear factor at a time.
ExactSeries divide_by_vandermonde(const ExactSeries& g, const std::vector<std::size_t>& vars);

/// Sum of all monomials of total degree d in vars.
ExactSeries complete_homogeneous(int d, const RingPtr& ring, const std::vector<std::size_t>& vars);

/// h_d evaluated at the given series.
ExactSeries complete_homogeneous_of(int d, const std::vector<ExactSeries>& values);

}  // namespace transfact
