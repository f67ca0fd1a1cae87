// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "transfact/analytic.hpp"
#include "transfact/conjecture.hpp"
#include "transfact/enumerator.hpp"
#include "transfact/error.hpp"
#include "transfact/pde.hpp"
#include "transfact/trees.hpp"

using namespace transfact;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// ---- independent oracles -------------------------------------------------

// n^{l-3} (n+l-2)! prod a^a / (a-1)!
Rational hurwitz_oracle(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  const int l = static_cast<int>(parts.size());
  mpq_class v = 1;
  for (int i = 0; i < n + l - 2; ++i) v *= i + 1;
  for (int i = 0; i < l - 3; ++i) v *= n;
  for (int i = 0; i < 3 - l; ++i) v /= n;
  for (int a : parts) {
    mpz_class num = 1, den = 1;
    for (int i = 0; i < a; ++i) num *= a;
    for (int i = 1; i < a; ++i) den *= i;
    v *= mpq_class(num, den);
  }
  v.canonicalize();
  return v;
}

BigInt int_power(long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  }
  return out;
}

// Right-first composition on 0-based image arrays.
std::vector<int> after(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

std::vector<int> perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

int cycles_on(const std::vector<int>& p, const std::vector<int>& points) {
  std::set<int> seen;
  int count = 0;
  for (int x : points) {
    if (seen.count(x)) continue;
    ++count;
    for (int y = x; !seen.count(y); y = p[static_cast<std::size_t>(y)]) seen.insert(y);
  }
  return count;
}

// The three parts of the first-factor structure, from scratch.
bool first_factor_structure(const std::vector<std::vector<int>>& factors, int n, int k) {
  const std::size_t j = factors.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = root(parent[static_cast<std::size_t>(x)]);
  };
  for (std::size_t f = 1; f < j; ++f) {
    for (int x = 0; x < n; ++x) parent[static_cast<std::size_t>(root(x))] = root(factors[f][static_cast<std::size_t>(x)]);
  }
  std::map<int, std::vector<int>> comps;
  for (int x = 0; x < n; ++x) comps[root(x)].push_back(x);
  std::vector<int> u;
  for (int x = 0; x < n; ++x)
    if (factors[0][static_cast<std::size_t>(x)] != x) u.push_back(x);
  const std::set<int> uset(u.begin(), u.end());

  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  for (const auto& f : factors) pi = after(pi, f);

  for (const auto& [r, members] : comps) {
    std::vector<int> meet;
    for (int x : members)
      if (uset.count(x)) meet.push_back(x);
    if (meet.empty()) return false;  // part 1
    std::vector<int> pi_i(static_cast<std::size_t>(n));
    std::iota(pi_i.begin(), pi_i.end(), 0);
    for (std::size_t f = 1; f < j; ++f) {
      if (root(factors[f][static_cast<std::size_t>(members.front())]) != r) continue;
      bool inside = false;
      for (int x : members) inside = inside || factors[f][static_cast<std::size_t>(x)] != x;
      if (inside) pi_i = after(pi_i, factors[f]);
    }
    std::set<int> orbit;
    for (int y = meet.front(); !orbit.count(y); y = pi_i[static_cast<std::size_t>(y)]) orbit.insert(y);
    for (int x : meet)
      if (!orbit.count(x)) return false;  // part 2
  }
  // part 3 on U
  std::vector<int> tau(static_cast<std::size_t>(n)), gamma_inv(static_cast<std::size_t>(n));
  std::iota(tau.begin(), tau.end(), 0);
  std::iota(gamma_inv.begin(), gamma_inv.end(), 0);
  for (int x : u) {
    int y = pi[static_cast<std::size_t>(x)];
    while (!uset.count(y)) y = pi[static_cast<std::size_t>(y)];
    tau[static_cast<std::size_t>(x)] = y;
    gamma_inv[static_cast<std::size_t>(factors[0][static_cast<std::size_t>(x)])] = x;
  }
  const auto rho = after(gamma_inv, tau);
  const int l = static_cast<int>(comps.size());
  const int kg = cycles_on(factors[0], u), kt = cycles_on(tau, u), kr = cycles_on(rho, u);
  return static_cast<int>(u.size()) == k && kg == 1 && kr == l && (k - kt) + (k - kr) == k - kg;
}

// Term key invariant under renaming indices: minimum over relabelings.
std::string term_key(const std::string& coef, std::vector<std::vector<int>> black,
                     std::vector<std::vector<int>> white, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::string best;
  do {
    auto show = [&](std::vector<std::vector<int>> groups) {
      for (auto& g : groups) {
        for (auto& i : g) i = perm[static_cast<std::size_t>(i - 1)];
        std::sort(g.begin(), g.end());
      }
      std::sort(groups.begin(), groups.end());
      std::ostringstream s;
      for (const auto& g : groups) {
        s << '{';
        for (int i : g) s << i << ' ';
        s << '}';
      }
      return s.str();
    };
    const std::string key = coef + "|" + show(black) + "|" + show(white);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BicolouredPlaneTree path_tree(int vertices) {
  BicolouredPlaneTree t;
  for (int v = 0; v < vertices; ++v) {
    t.colours.push_back(v % 2 == 0 ? Colour::black : Colour::white);
    t.adjacency.emplace_back();
    if (v > 0) {
      t.adjacency[static_cast<std::size_t>(v)].push_back(v - 1);
      t.adjacency[static_cast<std::size_t>(v - 1)].push_back(v);
    }
  }
  return t;
}

// ---- criteria --------------------------------------------------------------

Outcome a1() {
  Outcome o;
  FactorisationCounter counter(2, 4);
  int checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& parts : partitions(n, n)) {
      const Partition alpha(parts);
      const Rational expected = hurwitz_oracle(parts);
      const BigInt c = counter.minimal_transitive(alpha);
      ++checked;
      if (Rational(c) != expected || Rational(hurwitz_count(alpha)) != expected) {
        o.pass = false;
        o.detail = "alpha=" + alpha.to_string();
        return o;
      }
    }
  }
  o.detail = std::to_string(checked) + " types";
  return o;
}

Outcome a2() {
  Outcome o;
  int checked = 0;
  for (int k = 2; k <= 4; ++k) {
    FactorisationCounter counter(k, 4);
    for (int n = 1; n <= 5; ++n) {
      for (const auto& parts : partitions(n, n)) {
        const Partition alpha(parts);
        const BigInt dfs = count_minimal_transitive_dfs(Permutation::canonical(alpha), k, 4);
        const BigInt dp = counter.minimal_transitive(alpha);
        ++checked;
        if (dfs != dp) {
          o.pass = false;
          o.detail = "k=" + std::to_string(k) + " alpha=" + alpha.to_string();
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(checked) + " (k, alpha) pairs";
  return o;
}

Outcome a3() {
  Outcome o;
  const std::pair<int, int> cases[] = {{2, 4}, {3, 3}, {3, 5}, {3, 7}, {4, 4}, {4, 7}, {5, 5}};
  for (auto [k, n] : cases) {
    const int m = (n - 1) / (k - 1);
    const BigInt expected = int_power(n, m - 1);
    const BigInt dp = FactorisationCounter(k, 4).minimal_transitive(Partition({n}));
    const BigInt dfs = count_minimal_transitive_dfs(Permutation::canonical(Partition({n})), k, 4);
    if (dp != expected || dfs != expected) {
      o.pass = false;
      o.detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = "7 cases";
  return o;
}

const CountTable& table(int k) {
  static std::map<int, CountTable> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, tabulate_counts(k, 10, CountMethod::dp, 4)).first;
  return it->second;
}

Outcome a4() {
  Outcome o;
  std::size_t terms = 0;
  for (int k = 2; k <= 4; ++k) {
    const int n = k == 4 ? 10 : 9;
    for (int m = 1; m <= 3; ++m) {
      const auto r = check_conjecture(table(k), m, n, SForm::closed_form);
      terms += r.compared_terms;
      if (!r.pass || r.compared_terms == 0) {
        o.pass = false;
        o.detail = "k=" + std::to_string(k) + " m=" + std::to_string(m);
        return o;
      }
    }
  }
  o.detail = std::to_string(terms) + " coefficients";
  return o;
}

Outcome a5() {
  const auto r = check_conjecture(table(2), 4, 8, SForm::unit);
  return {r.pass && r.compared_terms > 0, std::to_string(r.compared_terms) + " coefficients"};
}

Outcome a6() {
  Outcome o;
  for (int k = 2; k <= 4; ++k) {
    const auto phi = phi_from_counts(table(k), 7);
    const auto residual = assemble_phi_pde(k, phi, 7, 4);
    if (!residual.is_zero() || phi.is_zero()) {
      o.pass = false;
      o.detail = "residual nonzero for k=" + std::to_string(k);
      return o;
    }
  }
  // Hand-written two- and three-edge equations, term by term.
  using Groups = std::vector<std::vector<int>>;
  struct Lit {
    std::string coef;
    Groups black;
    Groups white;
  };
  const std::map<int, std::vector<Lit>> written = {
      {2, {{"1/2", {{1, 2}}, {{1}, {2}}}, {"1/2", {{1}, {2}}, {{1, 2}}}}},
      {3,
       {{"1/3", {{1, 2, 3}}, {{1}, {2}, {3}}},
        {"1/3", {{1}, {2}, {3}}, {{1, 2, 3}}},
        {"1", {{1, 2}, {3}}, {{1}, {2, 3}}}}}};
  for (const auto& [k, lits] : written) {
    std::multiset<std::string> want, got;
    for (const auto& l : lits) want.insert(term_key(l.coef, l.black, l.white, k));
    for (const auto& t : symbolic_pde_terms(k)) got.insert(term_key(to_string(t.coefficient), t.black, t.white, k));
    if (want != got) {
      o.pass = false;
      o.detail = "assembled k=" + std::to_string(k) + " terms differ from the written form";
      return o;
    }
  }
  o.detail = "residual 0 for k=2,3,4; written forms match";
  return o;
}

Outcome a7() {
  Outcome o;
  const std::vector<std::vector<std::vector<int>>> cyc = {{{2, 4, 7}}, {{5, 8, 6}}, {{4, 7, 9}}, {{1, 3, 6}}, {{2, 3, 5}}};
  std::vector<int> p(9);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> factors;
  for (const auto& c : cyc) {
    p = after(p, perm_from_cycles(9, c));
    factors.push_back(Permutation::from_cycles(9, c));
  }
  const auto target = perm_from_cycles(9, {{1, 3, 8, 6}, {2, 5, 4}, {7, 9}});
  const FactorSequence f(9, 3, factors);
  const auto product = f.product();
  const bool product_ok = p == target && product.images() == target && product.cycle_type() == Partition({4, 3, 2});
  const int mu = (9 + 3 - 2) / (3 - 1);
  const bool mu_ok = mu == 5 && mu_k(Partition({4, 3, 2}), 3) == 5 && f.length() == 5;
  // With (568) in place of (586) the product changes.
  std::vector<int> q(9);
  std::iota(q.begin(), q.end(), 0);
  for (const auto& c : {std::vector<std::vector<int>>{{2, 4, 7}}, std::vector<std::vector<int>>{{5, 6, 8}},
                        std::vector<std::vector<int>>{{4, 7, 9}}, std::vector<std::vector<int>>{{1, 3, 6}},
                        std::vector<std::vector<int>>{{2, 3, 5}}}) {
    q = after(q, perm_from_cycles(9, c));
  }
  const bool alternative_differs = q != target;
  const auto r = lemma22_check(f);
  const bool structure_ok = r.components == std::vector<std::vector<int>>{{1, 2, 3, 5, 6, 8}, {4, 7, 9}} &&
                            r.component_products.size() == 2 &&
                            r.component_products[0].to_string() == "(1386)(25)" &&
                            r.component_products[1].to_string() == "(479)" && r.all_hold() &&
                            first_factor_structure([&] {
                              std::vector<std::vector<int>> raw;
                              for (const auto& s : factors) raw.push_back(s.images());
                              return raw;
                            }(), 9, 3);
  o.pass = product_ok && mu_ok && alternative_differs && structure_ok;
  o.detail = "product " + product.to_string() + ", mu 5, V1={1,2,3,5,6,8}, V2={4,7,9}";
  if (!o.pass) {
    o.detail = std::string("product ") + (product_ok ? "ok" : "wrong") + ", mu " + (mu_ok ? "ok" : "wrong") +
               ", (568) variant " + (alternative_differs ? "differs" : "agrees") + ", structure " +
               (structure_ok ? "ok" : "wrong");
  }
  return o;
}

Outcome a8() {
  Outcome o;
  for (int k = 2; k <= 5; ++k) {
    const int top = 1 + 7 * (k - 1);
    const auto w = w_series(k, top);
    int nonzero = 0;
    for (int d = 0; d <= top; ++d) {
      Rational expected = 0;
      if (d >= 1 && (d - 1) % (k - 1) == 0) {
        const int m = (d - 1) / (k - 1);
        mpq_class v = 1;
        const long b = 1 + static_cast<long>(k - 1) * m;
        for (int i = 0; i < m - 1; ++i) v *= b;
        for (int i = 0; i < 1 - m; ++i) v /= b;
        for (int i = 1; i <= m; ++i) v /= i;
        v.canonicalize();
        expected = v;
        ++nonzero;
      }
      if (w.coefficient({d}) != expected) {
        o.pass = false;
        o.detail = "k=" + std::to_string(k) + " degree " + std::to_string(d);
        return o;
      }
    }
    if (nonzero != 8) {
      o.pass = false;
      o.detail = "expected 8 nonzero coefficients";
      return o;
    }
    // (1 - (k-1) w^{k-1}) x w' = w to degree 16
    const auto w16 = w_series(k, 16);
    const auto lhs = (ExactSeries::constant(w16.ring(), 1) - w16.pow(static_cast<unsigned>(k - 1)) * Rational(k - 1)) *
                     w16.euler(0);
    if (!(lhs == w16)) {
      o.pass = false;
      o.detail = "x dw/dx identity fails for k=" + std::to_string(k);
      return o;
    }
    try {
      x_dw_dx(k, 16);
    } catch (const Error& e) {
      o.pass = false;
      o.detail = e.what();
      return o;
    }
  }
  o.detail = "k=2..5";
  return o;
}

Outcome a9() {
  Outcome o;
  const int bound = 12;
  const RingPtr t = univariate_ring(bound, "t");
  std::vector<ExactSeries> fs;
  for (int k = 2; k <= 4; ++k) fs.push_back(w_series(k, bound).embed(t, {"t"}));
  ExactSeries g(t);
  for (int d = 1; d <= bound; ++d) g.add_term({d}, Rational(2 * d - 7, d * d + 1));
  fs.push_back(g);
  fs.push_back(g * g);
  const RingPtr ring = SeriesRing::make({"x1", "x2", "x3"}, bound);
  for (std::size_t vars = 1; vars <= 3; ++vars) {
    std::vector<std::size_t> idx(vars);
    std::iota(idx.begin(), idx.end(), 0);
    for (const auto& f : fs) {
      // sum_i f_i * (sum of monomials of degree i with every exponent >= 1)
      ExactSeries definitional(ring);
      for (int i = static_cast<int>(vars); i <= bound; ++i) {
        const Rational c = f.coefficient({i});
        if (c == 0) continue;
        std::function<void(std::size_t, int, std::vector<int>&)> rec = [&](std::size_t pos, int left,
                                                                          std::vector<int>& e) {
          if (pos + 1 == vars) {
            e[pos] = left;
            definitional.add_term(e, c);
            return;
          }
          for (int a = 1; a <= left - static_cast<int>(vars - pos - 1); ++a) {
            e[pos] = a;
            rec(pos + 1, left - a, e);
          }
        };
        std::vector<int> e(3, 0);
        rec(0, i, e);
      }
      const auto lib = umbral_h_plus(f, ring, idx);
      const auto closed = umbral_h_plus_closed_form(f, ring, idx);
      if (!(lib == definitional) || !(closed == definitional)) {
        o.pass = false;
        o.detail = "disagreement with " + std::to_string(vars) + " variables";
        return o;
      }
    }
  }
  // f = 1, two variables: 1 by definition; x2/(x1-x2) + x1/(x2-x1) = -1.
  const RingPtr poly = SeriesRing::make({"x1", "x2"}, SeriesRing::kUnbounded);
  const auto definitional = h_plus(0, poly, {0, 1});
  const auto closed = divide_by_vandermonde(ExactSeries::variable(poly, 1) - ExactSeries::variable(poly, 0), {0, 1});
  bool refused = false;
  try {
    umbral_h_plus(ExactSeries::constant(t, 1), poly, {0, 1});
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::precondition;
  }
  const bool disagree = definitional == ExactSeries::constant(poly, 1) && closed == ExactSeries::constant(poly, -1);
  o.pass = disagree && refused;
  o.detail = disagree ? "agree for 1-3 variables; constant f: 1 vs -1" : "constant counterexample did not disagree";
  return o;
}

Outcome a10() {
  Outcome o;
  BicolouredPlaneTree star;
  star.colours = {Colour::white, Colour::black, Colour::black, Colour::black};
  star.adjacency = {{1, 2, 3}, {0}, {0}, {0}};
  std::vector<ReducedTree> shapes;
  for (auto tree : {path_tree(1), path_tree(3), star, path_tree(5)}) {
    ReducedTree r;
    r.deleted_leaves.assign(static_cast<std::size_t>(tree.vertex_count()), 0);
    r.tree = tree;
    shapes.push_back(r);
  }
  for (int k = 3; k <= 5; ++k) {
    std::vector<int> got;
    for (const auto& s : shapes) got.push_back(aut_size(s, k));
    if (got != std::vector<int>{k, 2, 3, 2}) {
      o.pass = false;
      o.detail = "k=" + std::to_string(k);
      return o;
    }
  }
  o.detail = "(k,2,3,2) for k=3,4,5";
  return o;
}

Outcome a11() {
  Outcome o;
  std::size_t checked = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& parts : partitions(n, n)) {
        const Partition alpha(parts);
        const auto all = enumerate_minimal_transitive(Permutation::canonical(alpha), k);
        if (BigInt(static_cast<unsigned long>(all.size())) != FactorisationCounter(k).minimal_transitive(alpha)) {
          o.pass = false;
          o.detail = "enumeration incomplete for " + alpha.to_string();
          return o;
        }
        for (const auto& f : all) {
          if (f.length() == 0) continue;
          std::vector<std::vector<int>> raw;
          for (const auto& s : f.factors()) raw.push_back(s.images());
          ++checked;
          if (!first_factor_structure(raw, n, k) || !lemma22_check(f).all_hold()) {
            o.pass = false;
            o.detail = f.to_string();
            return o;
          }
        }
      }
    }
  }
  o.detail = std::to_string(checked) + " factorisations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"A1", "transposition counts match the closed form, n <= 8", 120, a1},
      {"A2", "search count equals class-walk count, n <= 5, k = 2..4", 120, a2},
      {"A3", "one-part counts n^(m-1)", 60, a3},
      {"A4", "generating series equal the closed forms, k = 2..4, m = 1..3", 300, a4},
      {"A5", "four-part series for k = 2 with S = 1", 120, a5},
      {"A6", "tree equation residual zero, written two- and three-edge forms", 180, a6},
      {"A7", "worked factorisation and its first-factor structure", 1, a7},
      {"A8", "w series coefficients and x dw/dx", 10, a8},
      {"A9", "umbral identity and its constant-term caveat", 30, a9},
      {"A10", "reduced-tree automorphism counts", 1, a10},
      {"A11", "first-factor structure on every factorisation, n <= 5, k = 2, 3", 120, a11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_seconds);
    std::cout << c.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail << "; " << timing
              << (in_time ? "" : ", over budget") << "]\n";
  }
  // The two-point polynomial without the factor k-1, against the counts.
  for (int k = 3; k <= 4; ++k) {
    const auto r = check_conjecture(table(k), 2, 8, SForm::uncorrected);
    std::string ratio = "n/a";
    if (!r.mismatches.empty() && r.mismatches.front().rhs != 0) {
      ratio = to_string(Rational(r.mismatches.front().lhs / r.mismatches.front().rhs));
    }
    std::cout << "NOTE k=" << k << ": two-point polynomial without the factor k-1 "
              << (r.pass ? "agrees" : "disagrees") << "; enumerated/uncorrected = " << ratio << '\n';
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (11 - failed) << "/11\n";
  return failed ? 1 : 0;
}
