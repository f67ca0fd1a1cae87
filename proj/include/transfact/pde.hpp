#pragma once

#include "transfact/conjecture.hpp"
#include "transfact/enumerator.hpp"
#include "transfact/series.hpp"
#include "transfact/trees.hpp"

namespace transfact {

/// Variables u, z, p1..pN graded by the z-degree alone, truncated at N.
RingPtr phi_ring(int n_max);

/// sum_alpha c_k(alpha) |C_alpha| p_alpha u^mu / mu! z^n / n! over |alpha| <= n_max.
ExactSeries phi_from_counts(const CountTable& counts, int n_max);

/// Left side of the tree equation: every tree class, every edge index
/// assignment i >= 1 with sum <= n_max, weight 1/(symmetries of the tree),
/// p_(omega) per black vertex and omega dPhi/dp_(omega) per white vertex.
ExactSeries phi_pde_lhs(int k, const ExactSeries& phi, int n_max, int jobs = 1);

/// Left side minus dPhi/du.
ExactSeries assemble_phi_pde(int k, const ExactSeries& phi, int n_max, int jobs = 1);

/// Residual report for the tree equation with Phi built from counts.
ConjectureReport check_phi_pde(const CountTable& counts, int n_max, int jobs = 1);

/// Symbolic left side compared with the written-out forms for k = 2, 3.
bool pde_matches_written_form(int k);

/// The symmetrised equations for m = 1, 2, 3 with enumerated P^(1..m):
///   m=1: (1/k) f^k = (1/(k-1)) (x d/dx - 1) P1, f = x P1'
///   m=2: f1^{k-1} x1 P2_1 + f2^{k-1} x2 P2_2 + U q(f1, f2) = (1/(k-1)) E P2
///        with U = sum_i f_i h+_i(x1, x2), q the (k-1) power difference quotient
///   m=3: the six-term form, and separately the form in A_ij;
///        see check_three_point_aij.
ConjectureReport check_symmetrised(const CountTable& counts, int m, int n_max);

/// (1/(k-1)) (sum_i w_i d/dw_i + 1) P3 against the A_ij expression, both
/// cleared of the denominators (1 - (k-1) w_i^{k-1})^2 and compared as
/// series in x.
ConjectureReport check_three_point_aij(const CountTable& counts, int n_max);

}  // namespace transfact
