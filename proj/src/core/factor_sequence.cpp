#include "transfact/factor_sequence.hpp"

#include "transfact/disjoint_set.hpp"
#include "transfact/error.hpp"

namespace transfact {

FactorSequence::FactorSequence(int n, int k, std::vector<Permutation> factors)
    : n_(n), k_(k), factors_(std::move(factors)) {
  if (n < 1) fail(ErrorCode::invalid_argument, "factor sequence degree must be at least 1");
  if (k < 2) fail(ErrorCode::invalid_argument, "factors must be k-cycles with k >= 2");
  for (const auto& f : factors_) {
    if (f.degree() != n) fail(ErrorCode::degree_mismatch, "factor degree differs from sequence degree");
    if (!f.is_k_cycle(k)) {
      fail(ErrorCode::invalid_argument, "factor " + f.to_string() + " is not a " + std::to_string(k) + "-cycle");
    }
  }
}

Permutation FactorSequence::product() const {
  Permutation out = Permutation::identity(n_);
  for (const auto& f : factors_) out = compose(out, f);
  return out;
}

bool FactorSequence::is_minimal() const {
  const Permutation p = product();
  return static_cast<int>(factors_.size()) * (k_ - 1) == n_ - p.cycle_count();
}

bool FactorSequence::is_minimal_transitive() const {
  const auto length = mu_k(product().cycle_type(), k_);
  return length && *length == static_cast<int>(factors_.size()) && is_transitive(*this);
}

std::string FactorSequence::to_string() const {
  std::string out;
  for (const auto& f : factors_) out += f.to_string();
  return out.empty() ? "()" : out;
}

bool is_transitive(const FactorSequence& f) {
  DisjointSet dsu(static_cast<std::size_t>(f.degree()));
  for (const auto& factor : f.factors()) {
    const auto support = factor.support();
    for (std::size_t i = 1; i < support.size(); ++i) {
      dsu.unite(static_cast<std::size_t>(support[0]), static_cast<std::size_t>(support[i]));
    }
  }
  return dsu.components() == 1;
}

}  // namespace transfact
