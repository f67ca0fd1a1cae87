#include <algorithm>
#include <map>

#include "transfact/disjoint_set.hpp"
#include "transfact/enumerator.hpp"
#include "transfact/error.hpp"

namespace transfact {

Lemma22Report lemma22_check(const FactorSequence& f) {
  if (f.length() == 0) fail(ErrorCode::precondition, "factorisation has no factors");
  const int n = f.degree();
  const int k = f.k();
  Lemma22Report report;

  DisjointSet later(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < f.length(); ++i) {
    const auto support = f[i].support();
    for (std::size_t s = 1; s < support.size(); ++s) {
      later.unite(static_cast<std::size_t>(support[0]), static_cast<std::size_t>(support[s]));
    }
  }
  // Components ordered by smallest element, since indices are scanned upwards.
  std::map<std::size_t, std::size_t> component_of_root;
  std::vector<std::size_t> component_of(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const std::size_t root = later.find(static_cast<std::size_t>(x));
    auto [it, fresh] = component_of_root.emplace(root, report.components.size());
    if (fresh) report.components.emplace_back();
    report.components[it->second].push_back(x + 1);
    component_of[static_cast<std::size_t>(x)] = it->second;
  }
  const std::size_t l = report.components.size();

  report.factor_positions.resize(l);
  for (std::size_t i = 1; i < f.length(); ++i) {
    const auto support = f[i].support();
    report.factor_positions[component_of[static_cast<std::size_t>(support[0])]].push_back(static_cast<int>(i) + 1);
  }

  std::vector<Permutation> full_products;
  Permutation assembled = f[0];
  for (std::size_t c = 0; c < l; ++c) {
    Permutation p = Permutation::identity(n);
    for (int pos : report.factor_positions[c]) p = p * f[static_cast<std::size_t>(pos - 1)];
    assembled = assembled * p;
    report.component_products.push_back(p.restrict_to(report.components[c]));
    full_products.push_back(std::move(p));
  }
  const Permutation pi = f.product();
  report.product_decomposes = assembled == pi;

  const auto moved = f[0].support();
  for (int x : moved) report.first_support.push_back(x + 1);

  std::vector<char> met(l, 0);
  for (int x : moved) met[component_of[static_cast<std::size_t>(x)]] = 1;
  report.meets_every_component = std::all_of(met.begin(), met.end(), [](char m) { return m != 0; });

  report.single_cycle_per_component = true;
  for (std::size_t c = 0; c < l; ++c) {
    std::vector<int> cycle_id(static_cast<std::size_t>(n), -1);
    const auto cycles = full_products[c].cycles();
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      for (int x : cycles[ci]) cycle_id[static_cast<std::size_t>(x)] = static_cast<int>(ci);
    }
    int seen = -1;
    for (int x : moved) {
      if (component_of[static_cast<std::size_t>(x)] != c) continue;
      const int id = cycle_id[static_cast<std::size_t>(x)];
      if (seen >= 0 && id != seen) report.single_cycle_per_component = false;
      seen = id;
    }
  }

  const Permutation gamma = f[0].restrict_to(report.first_support);
  const Permutation tau = pi.restrict_to(report.first_support);
  const Permutation rho = gamma.inverse() * tau;
  const int kg = gamma.cycle_count();
  const int kt = tau.cycle_count();
  const int kr = rho.cycle_count();
  report.minimal_on_first_support =
      (k - kt) + (k - kr) == k - kg && kg == 1 && kr == static_cast<int>(l);

  // Each cycle of rho should be exactly the part of U inside one component.
  bool encoding = kr == static_cast<int>(l);
  std::vector<char> used(l, 0);
  for (const auto& cyc : rho.cycles()) {
    const std::size_t c = component_of[static_cast<std::size_t>(rho.label(cyc[0]) - 1)];
    std::size_t inside = 0;
    for (int x : cyc) encoding = encoding && component_of[static_cast<std::size_t>(rho.label(x) - 1)] == c;
    for (int x : moved) inside += component_of[static_cast<std::size_t>(x)] == c;
    encoding = encoding && !used[c] && inside == cyc.size();
    used[c] = 1;
  }
  report.tree_encoding = encoding;

  report.gamma = gamma;
  report.tau = tau;
  report.rho = rho;
  return report;
}

}  // namespace transfact
