#include "transfact/pde.hpp"

#include <algorithm>
#include <functional>

#include "transfact/analytic.hpp"
#include "transfact/error.hpp"
#include "transfact/parallel.hpp"

namespace transfact {

namespace {

constexpr std::size_t kU = 0;
constexpr std::size_t kZ = 1;
std::size_t p_index(int j) { return static_cast<std::size_t>(j) + 1; }

// Calls visit(idx) for every k-tuple of positive integers with sum <= bound.
void index_tuples(int k, int bound, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k), 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == idx.size()) {
      visit(idx);
      return;
    }
    const int reserve = static_cast<int>(idx.size() - pos - 1);
    for (int i = 1; i <= left - reserve; ++i) {
      idx[pos] = i;
      rec(pos + 1, left - i);
    }
  };
  rec(0, bound);
}

ExactSeries x_poly(const RingPtr& ring, std::size_t var, const ExactSeries& f) {
  return substitute_univariate(f, ring, var);
}

// f(x) = x P1'(x) from counts, univariate.
ExactSeries one_point_f(const CountTable& counts, int n_max) {
  return p_from_counts(counts, 1, n_max).euler(0).embed(univariate_ring(n_max, "t"), {"t"});
}

ExactSeries pair_embed(const ExactSeries& p2, const RingPtr& ring, std::size_t a, std::size_t b) {
  return p2.embed(ring, {ring->names[a], ring->names[b]});
}

// Sum over i of coefficient_i(t) h+_i(x_a, x_b), where the coefficients of
// t^i of `g` (a series in t and x_c) are read off in place.
ExactSeries umbral_in_first(const ExactSeries& g, const RingPtr& ring, std::size_t a, std::size_t b,
                            std::size_t c) {
  ExactSeries out(ring);
  std::map<int, ExactSeries> by_power;
  for (const auto& [e, coef] : g.terms()) {
    Exponents rest(ring->size(), 0);
    rest[c] = e[1];
    auto it = by_power.emplace(e[0], ExactSeries(ring)).first;
    it->second.add_term(rest, coef);
  }
  for (const auto& [i, coef] : by_power) out += coef * h_plus(i, ring, {a, b});
  return out;
}

ExactSeries derivative_poly(const ExactSeries& poly, std::size_t var) { return poly.derivative(var); }

}  // namespace

RingPtr phi_ring(int n_max) {
  std::vector<std::string> names{"u", "z"};
  std::vector<int> weights{0, 1};
  for (int j = 1; j <= n_max; ++j) {
    names.push_back("p" + std::to_string(j));
    weights.push_back(0);
  }
  return SeriesRing::make(std::move(names), n_max, std::move(weights));
}

ExactSeries phi_from_counts(const CountTable& counts, int n_max) {
  const RingPtr ring = phi_ring(n_max);
  ExactSeries phi(ring);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      const auto len = mu_k(alpha, counts.k);
      if (!len) continue;
      const BigInt c = counts.lookup(alpha);
      if (c == 0) continue;
      Exponents e(ring->size(), 0);
      e[kU] = *len;
      e[kZ] = n;
      for (int part : alpha.parts()) ++e[p_index(part)];
      phi.add_term(e, Rational(c * class_size(alpha), factorial(static_cast<unsigned>(*len)) *
                                                          factorial(static_cast<unsigned>(n))));
    }
  }
  return phi;
}

ExactSeries phi_pde_lhs(int k, const ExactSeries& phi, int n_max, int jobs) {
  const RingPtr& ring = phi.ring();
  if (static_cast<int>(ring->size()) < n_max + 2) fail(ErrorCode::invalid_argument, "Phi ring has too few p variables");
  const auto classes = gen_trees(k);
  std::vector<ExactSeries> marked;  // j dPhi/dp_j
  marked.push_back(ExactSeries(ring));
  for (int j = 1; j <= n_max; ++j) marked.push_back(phi.derivative(p_index(j)) * Rational(j));

  std::vector<ExactSeries> per_class(classes.size(), ExactSeries(ring));
  parallel_for(classes.size(), jobs, [&](std::size_t ci) {
    const auto& cls = classes[ci];
    const auto edges = cls.tree.edges();
    const auto blacks = cls.tree.vertices(Colour::black);
    const auto whites = cls.tree.vertices(Colour::white);
    std::map<std::vector<int>, ExactSeries> white_products;
    ExactSeries total(ring);
    index_tuples(k, n_max, [&](const std::vector<int>& idx) {
      std::vector<int> omega(static_cast<std::size_t>(cls.tree.vertex_count()), 0);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        omega[static_cast<std::size_t>(edges[e].first)] += idx[e];
        omega[static_cast<std::size_t>(edges[e].second)] += idx[e];
      }
      std::vector<int> key;
      for (int w : whites) key.push_back(omega[static_cast<std::size_t>(w)]);
      std::sort(key.begin(), key.end());
      auto it = white_products.find(key);
      if (it == white_products.end()) {
        ExactSeries prod = ExactSeries::constant(ring, 1);
        for (int om : key) {
          prod = prod * marked[static_cast<std::size_t>(om)];
          if (prod.is_zero()) break;
        }
        it = white_products.emplace(key, std::move(prod)).first;
      }
      if (it->second.is_zero()) return;
      Exponents shift(ring->size(), 0);
      for (int b : blacks) ++shift[p_index(omega[static_cast<std::size_t>(b)])];
      total += it->second.shift(shift);
    });
    per_class[ci] = total * Rational(1, cls.symmetry);
  });
  ExactSeries lhs(ring);
  for (const auto& part : per_class) lhs += part;
  return lhs;
}

ExactSeries assemble_phi_pde(int k, const ExactSeries& phi, int n_max, int jobs) {
  return phi_pde_lhs(k, phi, n_max, jobs) - phi.derivative(kU);
}

ConjectureReport check_phi_pde(const CountTable& counts, int n_max, int jobs) {
  const ExactSeries phi = phi_from_counts(counts, n_max);
  auto report = compare_series("pde", counts.k, 0, n_max, phi_pde_lhs(counts.k, phi, n_max, jobs), phi.derivative(kU));
  report.form = "trees";
  report.variables = phi.ring()->names;
  return report;
}

bool pde_matches_written_form(int k) {
  std::vector<PdeTerm> written;
  if (k == 2) written = two_edge_terms();
  else if (k == 3) written = three_edge_terms();
  else fail(ErrorCode::unsupported, "no written form for k=" + std::to_string(k));
  const auto assembled = symbolic_pde_terms(k);
  if (assembled.size() != written.size()) return false;
  for (std::size_t i = 0; i < assembled.size(); ++i) {
    if (assembled[i].coefficient != written[i].coefficient || assembled[i].black != written[i].black ||
        assembled[i].white != written[i].white) {
      return false;
    }
  }
  return true;
}

ConjectureReport check_symmetrised(const CountTable& counts, int m, int n_max) {
  const int k = counts.k;
  const unsigned km1 = static_cast<unsigned>(k - 1);
  const ExactSeries f = one_point_f(counts, n_max);
  if (m == 1) {
    const ExactSeries p1 = p_from_counts(counts, 1, n_max);
    const ExactSeries fx = p1.euler(0);
    const ExactSeries lhs = fx.pow(static_cast<unsigned>(k)) * Rational(1, k);
    const ExactSeries rhs = (fx - p1) * Rational(1, k - 1);
    auto r = compare_series("symmetrised", k, 1, n_max, lhs, rhs);
    r.form = "one_point";
    return r;
  }
  const RingPtr ring = x_ring(m, n_max);
  std::vector<ExactSeries> fs;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) fs.push_back(x_poly(ring, i, f));
  const ExactSeries p2 = p_from_counts(counts, 2, n_max);
  auto pair_w = [&](std::vector<std::size_t> vars) { return umbral_h_plus(f, ring, vars); };

  if (m == 2) {
    const ExactSeries lhs = fs[0].pow(km1) * p2.euler(0) + fs[1].pow(km1) * p2.euler(1) +
                            pair_w({0, 1}) * power_difference_quotient(fs[0], fs[1], k - 1);
    const ExactSeries rhs = (p2.euler(0) + p2.euler(1)) * Rational(1, k - 1);
    auto r = compare_series("symmetrised", k, 2, n_max, lhs, rhs);
    r.form = "two_point";
    return r;
  }
  if (m != 3) fail(ErrorCode::unsupported, "symmetrised equations are written out only for m <= 3");

  const ExactSeries p3 = p_from_counts(counts, 3, n_max);
  const std::vector<std::size_t> idx{0, 1, 2};
  auto others = [](std::size_t i) {
    std::vector<std::size_t> o;
    for (std::size_t x = 0; x < 3; ++x)
      if (x != i) o.push_back(x);
    return o;
  };
  // Polynomials in two and three placeholder variables, evaluated at f values.
  const RingPtr two = w_ring(2);
  const RingPtr three = w_ring(3);
  const ExactSeries q = power_difference_quotient(ExactSeries::variable(two, 0), ExactSeries::variable(two, 1), k - 1);
  const ExactSeries dq = derivative_poly(q, 0);
  const ExactSeries h3 = complete_homogeneous(k - 3, three, idx);
  const ExactSeries dh3 = derivative_poly(h3, 1);

  ExactSeries e1(ring), e2(ring), e3(ring), e4(ring), e5(ring), e6(ring);
  for (std::size_t i : idx) e1 += fs[i].pow(km1) * p3.euler(i);
  for (std::size_t i : idx) {
    const auto o = others(i);
    e2 += fs[i].pow(static_cast<unsigned>(k - 2)) * Rational(k - 1) * pair_embed(p2, ring, i, o[0]).euler(i) *
          pair_embed(p2, ring, i, o[1]).euler(i);
  }
  std::vector<std::size_t> order{0, 1, 2};
  do {
    const std::size_t a = order[0], b = order[1], c = order[2];
    e3 += dq.evaluate({fs[a], fs[b]}) * pair_embed(p2, ring, a, c).euler(a) * pair_w({a, b});
  } while (std::next_permutation(order.begin(), order.end()));
  for (std::size_t c : idx) {
    const auto o = others(c);
    e4 += q.evaluate({fs[o[0]], fs[o[1]]}) * umbral_in_first(p2.euler(0), ring, o[0], o[1], c);
  }
  if (k >= 3) e5 = h3.evaluate(fs) * Rational(2) * pair_w({0, 1, 2});
  if (k >= 4) {
    for (std::size_t b : idx) {
      const auto o = others(b);
      e6 += dh3.evaluate({fs[o[0]], fs[b], fs[o[1]]}) * pair_w({o[0], b}) * pair_w({b, o[1]});
    }
  }
  const ExactSeries lhs = e1 + e2 + e3 + e4 + e5 + e6;
  ExactSeries euler(ring);
  for (std::size_t i : idx) euler += p3.euler(i);
  const ExactSeries rhs = (euler + p3) * Rational(1, k - 1);
  auto r = compare_series("symmetrised", k, 3, n_max, lhs, rhs);
  r.form = "six_term";
  return r;
}

ConjectureReport check_three_point_aij(const CountTable& counts, int n_max) {
  const int k = counts.k;
  const RingPtr wr = w_ring(3);
  std::vector<ExactSeries> w;
  std::vector<ExactSeries> d;
  for (std::size_t i = 0; i < 3; ++i) {
    w.push_back(ExactSeries::variable(wr, i));
    d.push_back(ExactSeries::constant(wr, 1) - w[i].pow(static_cast<unsigned>(k - 1)) * Rational(k - 1));
  }
  const ExactSeries v = vandermonde(wr, {0, 1, 2});
  const ExactSeries v2 = v * v;
  auto q = [&](std::size_t i, std::size_t j) { return power_difference_quotient(w[i], w[j], k - 1); };
  // V^2 / ((w_i - w_j)(w_i - w_l)) and friends, by exact division.
  auto cleared = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
    return divide_by_difference(divide_by_difference(v2, i, j), a, b);
  };
  auto dd = [&](std::size_t i) { return d[i] * d[i]; };

  // First group: (k-1) w_i^{k-2} A_ij A_il times prod D^2 V^2.
  ExactSeries numerator(wr);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, l = (i + 2) % 3;
    numerator += w[i].pow(static_cast<unsigned>(k)) * w[j] * w[l] * q(i, j) * q(i, l) * dd(j) * dd(l) *
                 cleared(i, j, i, l) * Rational(k - 1);
  }
  // Second group: q_ab/(w_a - w_b) (w_b A_ac - w_a A_bc) for three orderings.
  const std::size_t triples[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& t : triples) {
    const std::size_t a = t[0], b = t[1], c = t[2];
    const ExactSeries common = q(a, b) * w[a] * w[b] * w[c];
    numerator += common * (q(a, c) * d[a] * dd(b) * dd(c) * cleared(a, b, a, c) -
                           q(b, c) * dd(a) * d[b] * dd(c) * cleared(a, b, b, c));
  }
  const ExactSeries rhs_poly = divide_by_vandermonde(divide_by_vandermonde(numerator, {0, 1, 2}), {0, 1, 2});

  const RingPtr ring = x_ring(3, n_max);
  const ExactSeries wx = w_series(k, n_max);
  std::vector<ExactSeries> wxs, dx;
  for (std::size_t i = 0; i < 3; ++i) {
    wxs.push_back(substitute_univariate(wx, ring, i));
    dx.push_back(ExactSeries::constant(ring, 1) - wxs[i].pow(static_cast<unsigned>(k - 1)) * Rational(k - 1));
  }
  const ExactSeries p3 = p_from_counts(counts, 3, n_max);
  ExactSeries lhs = p3;
  for (std::size_t i = 0; i < 3; ++i) lhs += dx[i] * p3.euler(i);
  lhs *= Rational(1, k - 1);
  for (std::size_t i = 0; i < 3; ++i) lhs = lhs * dx[i] * dx[i];
  auto r = compare_series("symmetrised", k, 3, n_max, lhs, rhs_poly.evaluate(wxs));
  r.form = "aij";
  return r;
}

}  // namespace transfact
