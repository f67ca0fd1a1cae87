#include "transfact/conjecture.hpp"

#include <algorithm>
#include <numeric>

#include "transfact/analytic.hpp"
#include "transfact/error.hpp"

namespace transfact {

namespace {

std::vector<std::string> names(const std::string& stem, int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

const char* form_name(SForm form) {
  switch (form) {
    case SForm::closed_form: return "closed_form";
    case SForm::uncorrected: return "uncorrected";
    case SForm::unit: return "unit";
  }
  return "?";
}

ExactSeries closed_form_two_point(int k, int n_max) {
  const RingPtr ring = x_ring(2, n_max);
  const ExactSeries w_next = w_series(k, n_max + 1);
  const ExactSeries w = w_next.truncate(n_max);
  const ExactSeries log_part = divided_difference(w_next, ring, 0, 1).log();
  const ExactSeries w1 = substitute_univariate(w, ring, 0);
  const ExactSeries w2 = substitute_univariate(w, ring, 1);
  return log_part - power_difference_quotient(w1, w2, k);
}

}  // namespace

RingPtr x_ring(int m, int n_max) { return SeriesRing::make(names("x", m), n_max); }
RingPtr w_ring(int m) { return SeriesRing::make(names("w", m), SeriesRing::kUnbounded); }

ExactSeries p_from_counts(const CountTable& counts, int m, int n_max) {
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  ExactSeries p(x_ring(m, n_max));
  for (int n = m; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      if (alpha.length() != m) continue;
      const auto len = mu_k(alpha, counts.k);
      if (!len) continue;
      const BigInt c = counts.lookup(alpha);
      if (c == 0) continue;
      const Rational coef(c * class_size(alpha),
                          factorial(static_cast<unsigned>(*len)) * factorial(static_cast<unsigned>(n)));
      std::vector<int> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      do {
        Exponents e(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = alpha[static_cast<std::size_t>(order[i])];
        p.add_term(e, coef);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return p;
}

ExactSeries g_poly(int k) {
  const RingPtr ring = w_ring(3);
  std::vector<ExactSeries> w;
  for (std::size_t i = 0; i < 3; ++i) w.push_back(ExactSeries::variable(ring, i));
  const auto one = ExactSeries::constant(ring, 1);
  const unsigned e = static_cast<unsigned>(k - 1);
  auto part = [&](std::size_t a, std::size_t b, std::size_t c) {
    return w[a] * (one - w[a].pow(e) * Rational(k - 1)) * (w[b].pow(e) - w[c].pow(e));
  };
  return part(0, 2, 1) + part(1, 0, 2) + part(2, 1, 0);
}

ExactSeries s_poly_uncorrected(int k, int m) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  const RingPtr ring = w_ring(m);
  switch (m) {
    case 1: return ExactSeries::constant(ring, 1);
    case 2: {
      const auto q = power_difference_quotient(ExactSeries::variable(ring, 0), ExactSeries::variable(ring, 1), k - 1);
      return q * q;
    }
    case 3: {
      const auto q = divide_by_vandermonde(g_poly(k), {0, 1, 2});
      return q * q;
    }
    default: fail(ErrorCode::unsupported, "no closed form for m=" + std::to_string(m));
  }
}

ExactSeries s_poly(int k, int m) {
  ExactSeries s = s_poly_uncorrected(k, m);
  if (m == 2) s *= Rational(k - 1);
  return s;
}

ExactSeries rhs_series(int k, const ExactSeries& s, int n_max) {
  const int m = static_cast<int>(s.ring()->size());
  const RingPtr ring = x_ring(m, n_max);
  const ExactSeries w = w_series(k, n_max);
  const ExactSeries dw = x_dw_dx(k, n_max);
  std::vector<ExactSeries> images;
  ExactSeries product = ExactSeries::constant(ring, 1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    images.push_back(substitute_univariate(w, ring, i));
    product = product * substitute_univariate(dw, ring, i);
  }
  return s.evaluate(images) * product;
}

ExactSeries lhs_series(const ExactSeries& p, int m) {
  const int power = 3 - m;
  if (power < 0) return p.scale_by_degree(-power);
  ExactSeries out = p;
  for (int r = 0; r < power; ++r) {
    ExactSeries next(out.ring());
    for (std::size_t i = 0; i < out.ring()->size(); ++i) next += out.euler(i);
    out = std::move(next);
  }
  return out;
}

ConjectureReport compare_series(std::string check, int k, int m, int n_max, const ExactSeries& lhs,
                                const ExactSeries& rhs, std::size_t limit) {
  ConjectureReport report;
  report.check = std::move(check);
  report.k = k;
  report.m = m;
  report.n_max = n_max;
  const ExactSeries diff = lhs - rhs;
  std::map<Exponents, bool> seen;
  for (const auto& t : lhs.terms()) seen[t.first] = true;
  for (const auto& t : rhs.terms()) seen[t.first] = true;
  report.compared_terms = seen.size();
  std::size_t total = 0;
  for (const auto& [e, c] : diff.terms()) {
    ++total;
    if (report.mismatches.size() < limit) report.mismatches.push_back({e, lhs.coefficient(e), rhs.coefficient(e)});
  }
  report.pass = total == 0;
  return report;
}

ConjectureReport check_conjecture(const CountTable& counts, int m, int n_max, SForm form) {
  const int k = counts.k;
  ExactSeries s(w_ring(m));
  switch (form) {
    case SForm::unit:
      if (k != 2) fail(ErrorCode::unsupported, "S = 1 holds only for k = 2");
      s = ExactSeries::constant(w_ring(m), 1);
      break;
    case SForm::closed_form: s = s_poly(k, m); break;
    case SForm::uncorrected: s = s_poly_uncorrected(k, m); break;
  }
  const ExactSeries lhs = lhs_series(p_from_counts(counts, m, n_max), m);
  const ExactSeries rhs = rhs_series(k, s, n_max);
  auto report = compare_series("conjecture", k, m, n_max, lhs, rhs);
  report.form = form_name(form);
  return report;
}

Rational p2_closed_form_constant(int k, int n_max) { return closed_form_two_point(k, n_max).constant_term(); }

ConjectureReport p2_closed_form_check(const CountTable& counts, int n_max) {
  ExactSeries closed = closed_form_two_point(counts.k, n_max);
  closed -= ExactSeries::constant(closed.ring(), closed.constant_term());
  auto report = compare_series("p2_closed_form", counts.k, 2, n_max, closed, p_from_counts(counts, 2, n_max));
  report.form = "closed_form";
  return report;
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json mm = nlohmann::json::array();
  for (const auto& x : mismatches) {
    mm.push_back({{"exponents", x.exponents}, {"lhs", to_string(x.lhs)}, {"rhs", to_string(x.rhs)}});
  }
  nlohmann::json out = {{"check", check}, {"k", k},           {"m", m},
                        {"nmax", n_max},  {"form", form},     {"pass", pass},
                        {"compared_terms", compared_terms},   {"mismatches", std::move(mm)}};
  if (!variables.empty()) out["variables"] = variables;
  return out;
}

}  // namespace transfact
