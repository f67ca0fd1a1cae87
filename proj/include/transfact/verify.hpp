#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "transfact/cache.hpp"
#include "transfact/conjecture.hpp"

namespace transfact {

/// First-factor structure checked on every minimal transitive factorisation of
/// the canonical representative of each alpha with |alpha| <= n_max.
struct Lemma22Verification {
  int k = 0;
  int n_max = 0;
  std::size_t factorisations = 0;
  std::size_t failures = 0;
  /// Up to ten failing factorisations in cycle notation.
  std::vector<std::string> failing;

  bool pass() const { return failures == 0 && factorisations > 0; }
  nlohmann::json to_json() const;
};

Lemma22Verification verify_lemma22(int k, int n_max, int jobs = 1);

/// Tree equation, the written two- and three-edge forms when k <= 3, and the
/// symmetrised one-, two- and three-point equations (three-point in both forms).
struct PdeVerification {
  int k = 0;
  int n_max = 0;
  ConjectureReport tree;
  /// -1 when there is no written form for this k.
  int written_form = -1;
  std::vector<ConjectureReport> symmetrised;

  bool pass() const;
  nlohmann::json to_json() const;
};

PdeVerification verify_pde(CountCache& cache, int k, int n_max, int jobs = 1);

/// k = 2 and m > 3 use S = 1; otherwise the closed forms, the two-point one
/// without the factor k-1 when `uncorrected`.
ConjectureReport verify_conjecture(CountCache& cache, int k, int m, int n_max, bool uncorrected = false);

struct SuiteItem {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

struct SuiteReport {
  int n_max = 0;
  std::vector<SuiteItem> items;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Every check above at sizes capped by n_max, plus the closed-form Hurwitz
/// counts, search against class walk, one-part law, w-series, umbral
/// identity, reduced-tree automorphisms and the worked factorisation.
SuiteReport run_verification_suite(CountCache& cache, int n_max, int jobs = 1);

}  // namespace transfact
