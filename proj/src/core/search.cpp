#include <atomic>
#include <numeric>

#include "transfact/enumerator.hpp"
#include "transfact/error.hpp"
#include "transfact/parallel.hpp"

namespace transfact {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

void join(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

int count_cycles(const std::vector<int>& images, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(images[x])) seen[x] = 1;
  }
  return cycles;
}

}  // namespace

MinimalTransitiveSearch::MinimalTransitiveSearch(const Permutation& pi, int k, int max_degree)
    : pi_(pi), k_(k), n_(pi.degree()) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  if (n_ > max_degree) {
    fail(ErrorCode::guard_exceeded, "search degree " + std::to_string(n_) + " exceeds the limit " +
                                        std::to_string(max_degree));
  }
  length_ = mu_k(pi.cycle_type(), k);
  if (!length_) return;
  cycles_ = all_k_cycles(n_, k);
  for (const auto& c : cycles_) {
    inverse_images_.push_back(c.inverse().images());
    supports_.push_back(c.support());
  }
}

std::size_t MinimalTransitiveSearch::branch_count() const {
  if (!length_) return 0;
  if (*length_ == 0) return 1;
  return cycles_.size();
}

int MinimalTransitiveSearch::components(std::vector<int>& parent) const {
  int roots = 0;
  for (int x = 0; x < n_; ++x) roots += find_root(parent, x) == x;
  return roots;
}

void MinimalTransitiveSearch::descend(int depth, std::vector<int>& remainder,
                                      std::vector<int>& parent, std::vector<std::size_t>& chosen,
                                      const Visitor& visit, bool& stop) const {
  const int left = *length_ - depth;
  if (left == 0) {
    if (std::all_of(remainder.begin(), remainder.end(),
                    [i = 0](int x) mutable { return x == i++; })) {
      if (!visit(chosen)) stop = true;
    }
    return;
  }
  const int budget = (k_ - 1) * (left - 1);
  std::vector<int> next_remainder(remainder.size());
  std::vector<int> next_parent(parent.size());
  std::vector<char> seen(remainder.size());
  for (std::size_t f = 0; f < cycles_.size() && !stop; ++f) {
    const auto& inv = inverse_images_[f];
    for (std::size_t x = 0; x < remainder.size(); ++x) {
      next_remainder[x] = inv[static_cast<std::size_t>(remainder[x])];
    }
    if (budget < n_ - count_cycles(next_remainder, seen)) continue;
    next_parent = parent;
    const auto& support = supports_[f];
    for (std::size_t s = 1; s < support.size(); ++s) join(next_parent, support[0], support[s]);
    if (components(next_parent) - 1 > budget) continue;
    chosen.push_back(f);
    descend(depth + 1, next_remainder, next_parent, chosen, visit, stop);
    chosen.pop_back();
  }
}

void MinimalTransitiveSearch::run_branch(std::size_t branch, const Visitor& visit) const {
  if (!length_) return;
  if (*length_ == 0) {
    if (branch == 0 && pi_.is_identity()) visit({});
    return;
  }
  if (branch >= cycles_.size()) fail(ErrorCode::invalid_argument, "branch out of range");

  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& cyc : pi_.cycles()) {
    for (std::size_t s = 1; s < cyc.size(); ++s) join(parent, cyc[0], cyc[s]);
  }
  std::vector<int> remainder = pi_.images();
  std::vector<int> next_remainder(remainder.size());
  const auto& inv = inverse_images_[branch];
  for (std::size_t x = 0; x < remainder.size(); ++x) {
    next_remainder[x] = inv[static_cast<std::size_t>(remainder[x])];
  }
  std::vector<char> seen(remainder.size());
  const int budget = (k_ - 1) * (*length_ - 1);
  if (budget < n_ - count_cycles(next_remainder, seen)) return;
  const auto& support = supports_[branch];
  for (std::size_t s = 1; s < support.size(); ++s) join(parent, support[0], support[s]);
  if (components(parent) - 1 > budget) return;

  std::vector<std::size_t> chosen{branch};
  bool stop = false;
  descend(1, next_remainder, parent, chosen, visit, stop);
}

void MinimalTransitiveSearch::run(const Visitor& visit) const {
  bool stop = false;
  const Visitor guarded = [&](std::span<const std::size_t> ids) {
    if (!visit(ids)) stop = true;
    return !stop;
  };
  for (std::size_t b = 0; b < branch_count() && !stop; ++b) run_branch(b, guarded);
}

FactorSequence MinimalTransitiveSearch::materialise(std::span<const std::size_t> ids) const {
  std::vector<Permutation> factors;
  factors.reserve(ids.size());
  for (auto id : ids) factors.push_back(cycles_.at(id));
  return FactorSequence(n_, k_, std::move(factors));
}

std::vector<FactorSequence> enumerate_minimal_transitive(const Permutation& pi, int k,
                                                         std::size_t limit, int max_degree) {
  MinimalTransitiveSearch search(pi, k, max_degree);
  std::vector<FactorSequence> out;
  if (limit == 0) return out;
  search.run([&](std::span<const std::size_t> ids) {
    out.push_back(search.materialise(ids));
    return out.size() < limit;
  });
  return out;
}

BigInt count_minimal_transitive_dfs(const Permutation& pi, int k, int jobs, int max_degree) {
  MinimalTransitiveSearch search(pi, k, max_degree);
  std::vector<unsigned long long> per_branch(search.branch_count(), 0);
  parallel_for(per_branch.size(), jobs, [&](std::size_t b) {
    unsigned long long found = 0;
    search.run_branch(b, [&](std::span<const std::size_t>) {
      ++found;
      return true;
    });
    per_branch[b] = found;
  });
  BigInt total = 0;
  for (auto c : per_branch) total += static_cast<unsigned long>(c);
  return total;
}

}  // namespace transfact
