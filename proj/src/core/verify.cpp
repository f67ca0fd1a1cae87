#include "transfact/verify.hpp"

#include <algorithm>
#include <mutex>

#include "transfact/analytic.hpp"
#include "transfact/error.hpp"
#include "transfact/parallel.hpp"
#include "transfact/pde.hpp"
#include "transfact/trees.hpp"

namespace transfact {

namespace {

SuiteItem from_report(std::string name, const ConjectureReport& r) { return {std::move(name), r.pass, r.to_json()}; }

SuiteItem hurwitz_item(CountCache& cache, int n_max) {
  nlohmann::json bad = nlohmann::json::array();
  std::size_t checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      const BigInt c = cache.count(2, alpha);
      const BigInt h = hurwitz_count(alpha);
      ++checked;
      if (c != h) bad.push_back({{"alpha", alpha.parts()}, {"count", to_decimal(c)}, {"formula", to_decimal(h)}});
    }
  }
  return {"hurwitz_formula", bad.empty(), {{"nmax", n_max}, {"checked", checked}, {"mismatches", bad}}};
}

SuiteItem search_item(CountCache& cache, int n_max) {
  nlohmann::json bad = nlohmann::json::array();
  std::size_t checked = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& alpha : partitions_of(n)) {
        if (!mu_k(alpha, k)) continue;
        const BigInt a = cache.count(k, alpha, CountMethod::dfs);
        const BigInt b = cache.count(k, alpha, CountMethod::dp);
        ++checked;
        if (a != b) bad.push_back({{"k", k}, {"alpha", alpha.parts()}, {"dfs", to_decimal(a)}, {"dp", to_decimal(b)}});
      }
    }
  }
  return {"search_vs_class_walk", bad.empty(), {{"nmax", n_max}, {"checked", checked}, {"mismatches", bad}}};
}

SuiteItem one_part_item(CountCache& cache, int n_max) {
  const std::pair<int, int> cases[] = {{2, 4}, {3, 3}, {3, 5}, {3, 7}, {4, 4}, {4, 7}, {5, 5}};
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (auto [k, n] : cases) {
    if (n > n_max) continue;
    const Partition alpha({n});
    const auto len = mu_k(alpha, k);
    const BigInt expected = power(BigInt(n), static_cast<unsigned>(*len - 1));
    const BigInt dp = cache.count(k, alpha, CountMethod::dp);
    const BigInt dfs = n <= kDefaultDfsMaxDegree ? cache.count(k, alpha, CountMethod::dfs) : dp;
    const bool pass = dp == expected && dfs == expected;
    ok = ok && pass;
    rows.push_back({{"k", k}, {"n", n}, {"expected", to_decimal(expected)}, {"dp", to_decimal(dp)},
                    {"dfs", to_decimal(dfs)}, {"pass", pass}});
  }
  return {"one_part_law", ok && !rows.empty(), {{"cases", rows}}};
}

SuiteItem w_series_item() {
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (int k = 2; k <= 5; ++k) {
    const int degree = 1 + 7 * (k - 1);
    bool pass = true;
    try {
      pass = w_series(k, degree) == w_closed_form(k, degree);
      x_dw_dx(k, 16);
    } catch (const Error&) {
      pass = false;
    }
    ok = ok && pass;
    rows.push_back({{"k", k}, {"degree", degree}, {"pass", pass}});
  }
  return {"w_series", ok, {{"cases", rows}}};
}

SuiteItem umbral_item() {
  const int bound = 12;
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (int vars = 1; vars <= 3; ++vars) {
    const RingPtr uni = univariate_ring(bound, "t");
    ExactSeries f(uni);
    for (int d = 1; d <= bound; ++d) f.add_term({d}, Rational(d * d - 3 * d + 5, d + 1));
    std::vector<std::string> names;
    std::vector<std::size_t> idx;
    for (int i = 0; i < vars; ++i) {
      names.push_back("x" + std::to_string(i + 1));
      idx.push_back(static_cast<std::size_t>(i));
    }
    const RingPtr ring = SeriesRing::make(names, bound);
    const bool pass = umbral_h_plus(f, ring, idx) == umbral_h_plus_closed_form(f, ring, idx);
    ok = ok && pass;
    rows.push_back({{"variables", vars}, {"pass", pass}});
  }
  // f = 1 with two variables: h+_0 = 1 by definition; the closed form
  // x2/(x1 - x2) + x1/(x2 - x1), cleared to x2 - x1, gives -1.
  const RingPtr poly = SeriesRing::make({"x1", "x2"}, SeriesRing::kUnbounded);
  const ExactSeries definitional = h_plus(0, poly, {0, 1});
  const ExactSeries closed =
      divide_by_vandermonde(ExactSeries::variable(poly, 1) - ExactSeries::variable(poly, 0), {0, 1});
  const bool caveat = definitional == ExactSeries::constant(poly, 1) && closed == ExactSeries::constant(poly, -1);
  ok = ok && caveat;
  return {"umbral_identity", ok, {{"cases", rows}, {"constant_counterexample_disagrees", caveat}}};
}

SuiteItem aut_item() {
  const auto shapes = named_reduced_shapes();
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (int k = 3; k <= 5; ++k) {
    std::vector<int> got;
    for (const auto& s : shapes) got.push_back(aut_size(s, k));
    const bool pass = got == std::vector<int>{k, 2, 3, 2};
    ok = ok && pass;
    rows.push_back({{"k", k}, {"aut", got}, {"pass", pass}});
  }
  return {"reduced_tree_aut", ok, {{"cases", rows}}};
}

SuiteItem worked_example_item() {
  std::vector<Permutation> factors;
  for (const char* s : {"(247)", "(586)", "(479)", "(136)", "(235)"}) factors.push_back(Permutation::parse(9, s));
  const FactorSequence f(9, 3, factors);
  const Permutation product = f.product();
  const auto report = lemma22_check(f);
  const bool pass = product == Permutation::parse(9, "(1386)(254)(79)") &&
                    product.cycle_type() == Partition({4, 3, 2}) && mu_k(Partition({4, 3, 2}), 3) == 5 &&
                    f.is_minimal_transitive() && report.components.size() == 2 &&
                    report.components[0] == std::vector<int>{1, 2, 3, 5, 6, 8} &&
                    report.components[1] == std::vector<int>{4, 7, 9} &&
                    report.component_products[0].to_string() == "(1386)(25)" &&
                    report.component_products[1].to_string() == "(479)" && report.all_hold();
  std::vector<std::string> products;
  for (const auto& p : report.component_products) products.push_back(p.to_string());
  return {"worked_factorisation", pass,
          {{"product", product.to_string()}, {"components", report.components}, {"component_products", products}}};
}

}  // namespace

nlohmann::json Lemma22Verification::to_json() const {
  return {{"check", "lemma22"}, {"k", k},           {"nmax", n_max},    {"factorisations", factorisations},
          {"failures", failures}, {"failing", failing}, {"pass", pass()}};
}

Lemma22Verification verify_lemma22(int k, int n_max, int jobs) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  if (n_max < 1) fail(ErrorCode::invalid_argument, "nmax must be at least 1");
  if (n_max > kDefaultDfsMaxDegree) {
    fail(ErrorCode::guard_exceeded, "lemma22 enumeration is limited to nmax <= " + std::to_string(kDefaultDfsMaxDegree));
  }
  std::vector<Partition> work;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      if (mu_k(alpha, k).value_or(0) >= 1) work.push_back(alpha);
    }
  }
  struct Partial {
    std::size_t total = 0;
    std::size_t bad = 0;
    std::vector<std::string> failing;
  };
  std::vector<Partial> parts(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
    const Permutation pi = Permutation::canonical(work[i]);
    MinimalTransitiveSearch search(pi, k);
    search.run([&](std::span<const std::size_t> ids) {
      const FactorSequence f = search.materialise(ids);
      ++parts[i].total;
      const auto r = lemma22_check(f);
      if (!r.all_hold() || !(*r.tau == *r.gamma * *r.rho)) {
        ++parts[i].bad;
        if (parts[i].failing.size() < 10) parts[i].failing.push_back(f.to_string());
      }
      return true;
    });
  });
  Lemma22Verification out;
  out.k = k;
  out.n_max = n_max;
  for (auto& p : parts) {
    out.factorisations += p.total;
    out.failures += p.bad;
    for (auto& s : p.failing) {
      if (out.failing.size() < 10) out.failing.push_back(std::move(s));
    }
  }
  return out;
}

bool PdeVerification::pass() const {
  if (!tree.pass || written_form == 0) return false;
  return std::all_of(symmetrised.begin(), symmetrised.end(), [](const auto& r) { return r.pass; });
}

nlohmann::json PdeVerification::to_json() const {
  nlohmann::json sym = nlohmann::json::array();
  for (const auto& r : symmetrised) sym.push_back(r.to_json());
  nlohmann::json out = {{"check", "pde"}, {"k", k},           {"nmax", n_max},
                        {"tree", tree.to_json()}, {"symmetrised", sym}, {"pass", pass()}};
  out["written_form"] = written_form < 0 ? nlohmann::json(nullptr) : nlohmann::json(written_form == 1);
  return out;
}

PdeVerification verify_pde(CountCache& cache, int k, int n_max, int jobs) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  if (n_max < 1) fail(ErrorCode::invalid_argument, "nmax must be at least 1");
  const CountTable table = cache.table(k, n_max);
  PdeVerification out;
  out.k = k;
  out.n_max = n_max;
  out.tree = check_phi_pde(table, n_max, jobs);
  if (k <= 3) out.written_form = pde_matches_written_form(k) ? 1 : 0;
  for (int m = 1; m <= 3; ++m) out.symmetrised.push_back(check_symmetrised(table, m, n_max));
  out.symmetrised.push_back(check_three_point_aij(table, n_max));
  return out;
}

ConjectureReport verify_conjecture(CountCache& cache, int k, int m, int n_max, bool uncorrected) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  if (n_max < 1) fail(ErrorCode::invalid_argument, "nmax must be at least 1");
  SForm form = uncorrected ? SForm::uncorrected : SForm::closed_form;
  if (m > 3) {
    if (k != 2) fail(ErrorCode::unsupported, "no closed form is known for m > 3 with k > 2");
    form = SForm::unit;
  }
  return check_conjecture(cache.table(k, n_max), m, n_max, form);
}

bool SuiteReport::pass() const {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const auto& i) { return i.pass; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& i : items) list.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  return {{"check", "all"}, {"nmax", n_max}, {"items", list}, {"pass", pass()}};
}

SuiteReport run_verification_suite(CountCache& cache, int n_max, int jobs) {
  if (n_max < 1) fail(ErrorCode::invalid_argument, "nmax must be at least 1");
  SuiteReport out;
  out.n_max = n_max;
  out.items.push_back(hurwitz_item(cache, std::min(n_max, 8)));
  out.items.push_back(search_item(cache, std::min(n_max, 5)));
  out.items.push_back(one_part_item(cache, n_max));
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 3; ++m) {
      out.items.push_back(from_report("conjecture_k" + std::to_string(k) + "_m" + std::to_string(m),
                                      verify_conjecture(cache, k, m, n_max)));
    }
  }
  out.items.push_back(from_report("conjecture_k2_m4", verify_conjecture(cache, 2, 4, std::min(n_max, 8))));
  for (int k = 2; k <= 4; ++k) {
    const auto pde = verify_pde(cache, k, std::min(n_max, 7), jobs);
    out.items.push_back({"pde_k" + std::to_string(k), pde.pass(), pde.to_json()});
  }
  out.items.push_back(worked_example_item());
  out.items.push_back(w_series_item());
  out.items.push_back(umbral_item());
  out.items.push_back(aut_item());
  for (int k = 2; k <= 3; ++k) {
    const auto l = verify_lemma22(k, std::min(n_max, 5), jobs);
    out.items.push_back({"lemma22_k" + std::to_string(k), l.pass(), l.to_json()});
  }
  return out;
}

}  // namespace transfact
