#include <algorithm>
#include <functional>

#include "transfact/enumerator.hpp"
#include "transfact/error.hpp"
#include "transfact/parallel.hpp"

namespace transfact {

ClassWalk::ClassWalk(int n, int k, int jobs) : n_(n), k_(k), classes_(partitions_of(n)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i], i);
  const std::vector<Permutation> kcycles = all_k_cycles(n, k);
  transitions_.resize(classes_.size());
  parallel_for(classes_.size(), jobs, [&](std::size_t row) {
    const Permutation rep = Permutation::canonical(classes_[row]);
    std::map<std::size_t, long> tally;
    for (const auto& s : kcycles) ++tally[index_.at(compose(rep, s).cycle_type())];
    transitions_[row].assign(tally.begin(), tally.end());
  });
  std::vector<BigInt> level0(classes_.size(), 0);
  level0[index_.at(Partition::ones(n))] = 1;
  levels_.push_back(std::move(level0));
}

std::size_t ClassWalk::class_index(const Partition& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) fail(ErrorCode::invalid_argument, "partition " + beta.to_string() + " is not of n=" + std::to_string(n_));
  return it->second;
}

const BigInt& ClassWalk::count(const Partition& beta, int j) {
  if (j < 0) fail(ErrorCode::invalid_argument, "factor count must be non-negative");
  const std::size_t row = class_index(beta);
  while (levels_.size() <= static_cast<std::size_t>(j)) {
    const auto& prev = levels_.back();
    std::vector<BigInt> next(classes_.size(), 0);
    for (std::size_t b = 0; b < classes_.size(); ++b) {
      for (auto [g, weight] : transitions_[b]) next[b] += prev[g] * weight;
    }
    levels_.push_back(std::move(next));
  }
  return levels_[static_cast<std::size_t>(j)][row];
}

FactorisationCounter::FactorisationCounter(int k, int jobs) : k_(k), jobs_(jobs) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
}

ClassWalk& FactorisationCounter::walk(int n) {
  auto it = walks_.find(n);
  if (it == walks_.end()) it = walks_.emplace(n, std::make_unique<ClassWalk>(n, k_, jobs_)).first;
  return *it->second;
}

BigInt FactorisationCounter::all_multiset(const std::vector<int>& cycles, int j) {
  if (cycles.empty()) return j == 0 ? 1 : 0;
  Partition beta(cycles);
  return walk(beta.n()).count(beta, j);
}

BigInt FactorisationCounter::transitive_multiset(const std::vector<int>& cycles, int j) {
  int n = 0;
  for (int c : cycles) n += c;
  // Joining n points needs at least n-1 merges; a k-cycle performs at most k-1.
  if ((k_ - 1) * j < n - 1) return 0;

  const auto key = std::make_pair(cycles, j);
  if (auto it = transitive_memo_.find(key); it != transitive_memo_.end()) return it->second;

  BigInt total = all_multiset(cycles, j);
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const std::size_t r = rest.size();
  const std::size_t full = (std::size_t{1} << r) - 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    std::vector<int> block{cycles[0]};
    std::vector<int> others;
    for (std::size_t i = 0; i < r; ++i) ((mask >> i) & 1 ? block : others).push_back(rest[i]);
    std::sort(block.begin(), block.end(), std::greater<>());
    for (int head = 0; head <= j; ++head) {
      const BigInt t = transitive_multiset(block, head);
      if (t == 0) continue;
      const BigInt a = all_multiset(others, j - head);
      if (a == 0) continue;
      total -= binomial(static_cast<unsigned>(j), static_cast<unsigned>(head)) * t * a;
    }
  }
  transitive_memo_.emplace(key, total);
  return total;
}

BigInt FactorisationCounter::all(const Partition& alpha, int j) {
  if (j < 0) fail(ErrorCode::invalid_argument, "factor count must be non-negative");
  return all_multiset(alpha.parts(), j);
}

BigInt FactorisationCounter::transitive(const Partition& alpha, int j) {
  if (j < 0) fail(ErrorCode::invalid_argument, "factor count must be non-negative");
  return transitive_multiset(alpha.parts(), j);
}

BigInt FactorisationCounter::minimal_transitive(const Partition& alpha) {
  const auto length = mu_k(alpha, k_);
  if (!length) return 0;
  return transitive(alpha, *length);
}

BigInt count_all_factorisations(const Partition& alpha, int k, int j, int jobs) {
  return FactorisationCounter(k, jobs).all(alpha, j);
}

BigInt count_minimal_transitive(const Partition& alpha, int k, int jobs) {
  return FactorisationCounter(k, jobs).minimal_transitive(alpha);
}

BigInt hurwitz_count(const Partition& alpha) {
  const int n = alpha.n();
  const int l = alpha.length();
  Rational value = power(Rational(n), l - 3) * Rational(factorial(static_cast<unsigned>(n + l - 2)));
  for (int a : alpha.parts()) {
    value *= Rational(power(BigInt(a), static_cast<unsigned>(a)), factorial(static_cast<unsigned>(a - 1)));
  }
  value.canonicalize();
  if (value.get_den() != 1) {
    fail(ErrorCode::internal, "Hurwitz formula gave a non-integer for " + alpha.to_string());
  }
  return BigInt(value.get_num());
}

const char* to_string(CountMethod method) {
  return method == CountMethod::dfs ? "dfs" : "dp";
}

BigInt CountTable::lookup(const Partition& alpha) const {
  if (auto it = entries.find(alpha); it != entries.end()) return it->second;
  if (!mu_k(alpha, k)) return 0;
  fail(ErrorCode::missing_counts,
       "no count for alpha=" + alpha.to_string() + ", k=" + std::to_string(k));
}

bool CountTable::covers(const Partition& alpha) const {
  return entries.count(alpha) > 0 || !mu_k(alpha, k);
}

CountTable tabulate_counts(int k, int n_max, CountMethod method, int jobs,
                           const std::function<bool(const Partition&)>& filter) {
  CountTable table;
  table.k = k;
  table.method = method;
  FactorisationCounter counter(k, jobs);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      if (filter && !filter(alpha)) continue;
      if (!mu_k(alpha, k)) continue;
      if (method == CountMethod::dp) {
        table.entries.emplace(alpha, counter.minimal_transitive(alpha));
      } else {
        table.entries.emplace(alpha, count_minimal_transitive_dfs(Permutation::canonical(alpha), k, jobs));
      }
    }
  }
  return table;
}

}  // namespace transfact
