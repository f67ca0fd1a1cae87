#include "transfact/analytic.hpp"

#include <functional>

#include "transfact/error.hpp"

namespace transfact {

namespace {

void require_univariate(const ExactSeries& f) {
  if (f.ring()->size() != 1) fail(ErrorCode::invalid_argument, "expected a univariate series");
}

void require_k(int k) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
}

// Calls visit(e) for every e >= lower on `slots` entries with sum = total.
void compositions(int total, std::size_t slots, int lower, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(slots, lower);
  const int spare = total - static_cast<int>(slots) * lower;
  if (spare < 0) return;
  if (slots == 0) {
    if (total == 0) visit(parts);
    return;
  }
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == slots) {
      parts[i] = lower + left;
      visit(parts);
      return;
    }
    for (int take = left; take >= 0; --take) {
      parts[i] = lower + take;
      rec(i + 1, left - take);
    }
  };
  rec(0, spare);
}

}  // namespace

RingPtr univariate_ring(int n_max, const std::string& name) { return SeriesRing::make({name}, n_max); }

ExactSeries w_closed_form(int k, int n_max) {
  require_k(k);
  ExactSeries w(univariate_ring(n_max));
  for (int m = 0; 1 + (k - 1) * m <= n_max; ++m) {
    const int base = 1 + (k - 1) * m;
    w.add_term({base}, power(Rational(base), m - 1) / Rational(factorial(static_cast<unsigned>(m))));
  }
  return w;
}

ExactSeries w_series(int k, int n_max) {
  require_k(k);
  const RingPtr ring = univariate_ring(n_max);
  const ExactSeries x = ExactSeries::variable(ring, 0);
  ExactSeries w = x.truncate(n_max);
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass <= n_max + 1; ++pass) {
    ExactSeries next = x * w.pow(static_cast<unsigned>(k - 1)).exp();
    if (next == w) break;
    w = std::move(next);
  }
  if (!(w == w_closed_form(k, n_max))) fail(ErrorCode::internal, "iterated w disagrees with the Lagrange coefficients");
  return w;
}

ExactSeries x_dw_dx(int k, int n_max) {
  const ExactSeries w = w_series(k, n_max);
  const ExactSeries termwise = w.euler(0);
  const ExactSeries rational = w * (w.pow(static_cast<unsigned>(k - 1)) * Rational(k - 1)).geometric();
  if (!(termwise == rational)) fail(ErrorCode::internal, "x dw/dx forms disagree");
  return termwise;
}

ExactSeries substitute_univariate(const ExactSeries& f, const RingPtr& ring, std::size_t var) {
  require_univariate(f);
  ExactSeries out(ring);
  for (const auto& [e, c] : f.terms()) {
    Exponents t(ring->size(), 0);
    t[var] = e[0];
    out.add_term(t, c);
  }
  return out;
}

ExactSeries h_plus(int degree, const RingPtr& ring, const std::vector<std::size_t>& vars) {
  ExactSeries out(ring);
  if (vars.empty()) fail(ErrorCode::invalid_argument, "h+ needs at least one variable");
  if (degree == 0) return ExactSeries::constant(ring, 1);
  compositions(degree, vars.size(), 1, [&](const std::vector<int>& parts) {
    Exponents e(ring->size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] += parts[i];
    out.add_term(e, 1);
  });
  return out;
}

ExactSeries umbral_h_plus(const ExactSeries& f, const RingPtr& ring, const std::vector<std::size_t>& vars) {
  require_univariate(f);
  if (vars.size() >= 2 && f.constant_term() != 0) {
    fail(ErrorCode::precondition, "umbral composition with two or more variables needs zero constant term");
  }
  ExactSeries out(ring);
  for (const auto& [e, c] : f.terms()) out += h_plus(e[0], ring, vars) * c;
  return out;
}

ExactSeries umbral_h_plus_closed_form(const ExactSeries& f, const RingPtr& ring,
                                      const std::vector<std::size_t>& vars) {
  require_univariate(f);
  if (vars.empty()) fail(ErrorCode::invalid_argument, "h+ needs at least one variable");
  if (vars.size() >= 2 && f.constant_term() != 0) {
    fail(ErrorCode::precondition, "umbral composition with two or more variables needs zero constant term");
  }
  // Work with f as a polynomial so the cleared numerator is exact.
  auto poly_ring = std::make_shared<SeriesRing>(*ring);
  poly_ring->max_degree = SeriesRing::kUnbounded;
  ExactSeries numerator(poly_ring);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<std::size_t> others;
    Exponents lift(ring->size(), 0);
    for (std::size_t p = 0; p < vars.size(); ++p) {
      if (p == i) continue;
      others.push_back(vars[p]);
      ++lift[vars[p]];
    }
    ExactSeries term = substitute_univariate(f, poly_ring, vars[i]).shift(lift) * vandermonde(poly_ring, others);
    numerator += i % 2 ? -term : term;
  }
  return divide_by_vandermonde(numerator, vars).with_ring(ring);
}

ExactSeries power_difference_quotient(const ExactSeries& a, const ExactSeries& b, int j) {
  if (j < 1) fail(ErrorCode::invalid_argument, "difference quotient needs j >= 1");
  ExactSeries out(a.ring());
  for (int s = 0; s < j; ++s) out += a.pow(static_cast<unsigned>(s)) * b.pow(static_cast<unsigned>(j - 1 - s));
  return out;
}

ExactSeries divided_difference(const ExactSeries& f, const RingPtr& ring, std::size_t a, std::size_t b) {
  require_univariate(f);
  ExactSeries out(ring);
  for (const auto& [e, c] : f.terms()) {
    for (int s = 0; s < e[0]; ++s) {
      Exponents t(ring->size(), 0);
      t[a] += s;
      t[b] += e[0] - 1 - s;
      out.add_term(t, c);
    }
  }
  return out;
}

ExactSeries divide_by_difference(const ExactSeries& g, std::size_t a, std::size_t b) {
  const RingPtr& ring = g.ring();
  if (a == b || a >= ring->size() || b >= ring->size()) fail(ErrorCode::invalid_argument, "bad variable pair");
  if (ring->weights[a] != ring->weights[b]) fail(ErrorCode::invalid_argument, "variables must share a weight");
  // g = g(x_a -> x_b) + (x_a - x_b) * sum c M / x_a^e (x_a^e - x_b^e)/(x_a - x_b)
  ExactSeries remainder(ring);
  auto out_ring = ring;
  if (ring->truncated()) {
    auto lowered = std::make_shared<SeriesRing>(*ring);
    lowered->max_degree = std::max(0, ring->max_degree - ring->weights[a]);
    out_ring = lowered;
  }
  ExactSeries quotient(out_ring);
  for (const auto& [e, c] : g.terms()) {
    Exponents r = e;
    r[b] += r[a];
    r[a] = 0;
    remainder.add_term(r, c);
    for (int s = 0; s < e[a]; ++s) {
      Exponents q = e;
      q[a] = s;
      q[b] = e[b] + e[a] - 1 - s;
      quotient.add_term(q, c);
    }
  }
  if (!remainder.is_zero()) fail(ErrorCode::precondition, "polynomial is not divisible by the difference");
  return quotient;
}

ExactSeries vandermonde(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  ExactSeries out = ExactSeries::constant(ring, 1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      out = out * (ExactSeries::variable(ring, vars[i]) - ExactSeries::variable(ring, vars[j]));
    }
  }
  return out;
}

ExactSeries divide_by_vandermonde(const ExactSeries& g, const std::vector<std::size_t>& vars) {
  ExactSeries out = g;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) out = divide_by_difference(out, vars[i], vars[j]);
  }
  return out;
}

ExactSeries complete_homogeneous(int d, const RingPtr& ring, const std::vector<std::size_t>& vars) {
  ExactSeries out(ring);
  if (d < 0) return out;
  compositions(d, vars.size(), 0, [&](const std::vector<int>& parts) {
    Exponents e(ring->size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] += parts[i];
    out.add_term(e, 1);
  });
  return out;
}

ExactSeries complete_homogeneous_of(int d, const std::vector<ExactSeries>& values) {
  if (values.empty()) fail(ErrorCode::invalid_argument, "h_d needs at least one argument");
  ExactSeries out(values.front().ring());
  if (d < 0) return out;
  compositions(d, values.size(), 0, [&](const std::vector<int>& parts) {
    ExactSeries term = ExactSeries::constant(out.ring(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (parts[i]) term = term * values[i].pow(static_cast<unsigned>(parts[i]));
    }
    out += term;
  });
  return out;
}

}  // namespace transfact
