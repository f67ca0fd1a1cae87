#include "transfact/transfact.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "transfact/analytic.hpp"
#include "transfact/cache.hpp"
#include "transfact/error.hpp"
#include "transfact/trees.hpp"
#include "transfact/verify.hpp"

struct tf_context {
  int jobs = 1;
  std::optional<std::filesystem::path> cache_path = transfact::default_cache_path();
  std::unique_ptr<transfact::CountCache> cache;
  std::string last_error;
  std::string pending_warnings;

  transfact::CountCache& counts() {
    if (!cache) cache = std::make_unique<transfact::CountCache>(cache_path, jobs);
    return *cache;
  }
  void collect_warnings() {
    if (!cache) return;
    for (const auto& w : cache->take_warnings()) pending_warnings += w + "\n";
  }
};

namespace {

using transfact::ErrorCode;
using json = nlohmann::json;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return TF_INVALID_ARGUMENT;
    case ErrorCode::degree_mismatch: return TF_DEGREE_MISMATCH;
    case ErrorCode::parse: return TF_PARSE_ERROR;
    case ErrorCode::guard_exceeded: return TF_GUARD_EXCEEDED;
    case ErrorCode::precondition: return TF_PRECONDITION;
    case ErrorCode::unsupported: return TF_UNSUPPORTED;
    case ErrorCode::missing_counts: return TF_MISSING_COUNTS;
    case ErrorCode::io: return TF_IO_ERROR;
    case ErrorCode::internal: return TF_INTERNAL;
  }
  return TF_INTERNAL;
}

// Runs body, which returns the payload; stores it in *out.
template <class Body>
tf_status guarded(tf_context* ctx, char** out, Body&& body) {
  if (!ctx) return TF_INVALID_ARGUMENT;
  ctx->last_error.clear();
  if (!out) {
    ctx->last_error = "output pointer is null";
    return TF_INVALID_ARGUMENT;
  }
  *out = nullptr;
  tf_status status = TF_OK;
  try {
    *out = duplicate(body());
    if (!*out) {
      ctx->last_error = "out of memory";
      status = TF_INTERNAL;
    }
  } catch (const transfact::Error& e) {
    ctx->last_error = e.what();
    status = status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    status = TF_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    status = TF_INTERNAL;
  }
  ctx->collect_warnings();
  return status;
}

transfact::Partition partition_from(const int* alpha, std::size_t parts) {
  if (!alpha || parts == 0) transfact::fail(ErrorCode::invalid_argument, "alpha must have at least one part");
  return transfact::Partition(std::vector<int>(alpha, alpha + parts));
}

void require_passed(int* passed) {
  if (!passed) transfact::fail(ErrorCode::invalid_argument, "passed pointer is null");
}

std::string dump(const json& j) { return j.dump(2); }

transfact::CountMethod method_of(int use_search) {
  return use_search ? transfact::CountMethod::dfs : transfact::CountMethod::dp;
}

}  // namespace

extern "C" {

const char* tf_version(void) { return "1.0.0"; }

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "ok";
    case TF_INVALID_ARGUMENT: return "invalid_argument";
    case TF_DEGREE_MISMATCH: return "degree_mismatch";
    case TF_PARSE_ERROR: return "parse_error";
    case TF_GUARD_EXCEEDED: return "guard_exceeded";
    case TF_PRECONDITION: return "precondition";
    case TF_UNSUPPORTED: return "unsupported";
    case TF_MISSING_COUNTS: return "missing_counts";
    case TF_IO_ERROR: return "io_error";
    case TF_INTERNAL: return "internal";
  }
  return "unknown";
}

tf_context* tf_context_create(void) {
  try {
    return new tf_context();
  } catch (...) {
    return nullptr;
  }
}

void tf_context_destroy(tf_context* ctx) {
  if (!ctx) return;
  try {
    if (ctx->cache) ctx->cache->flush();
  } catch (...) {
  }
  delete ctx;
}

tf_status tf_context_set_jobs(tf_context* ctx, int jobs) {
  if (!ctx) return TF_INVALID_ARGUMENT;
  if (jobs < 1) {
    ctx->last_error = "jobs must be at least 1";
    return TF_INVALID_ARGUMENT;
  }
  ctx->last_error.clear();
  ctx->jobs = jobs;
  ctx->cache.reset();
  return TF_OK;
}

tf_status tf_context_set_cache(tf_context* ctx, const char* path) {
  if (!ctx) return TF_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    if (ctx->cache) ctx->cache->flush();
    ctx->cache.reset();
    ctx->cache_path = path ? std::optional<std::filesystem::path>(path) : transfact::default_cache_path();
  } catch (const transfact::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return TF_INTERNAL;
  }
  return TF_OK;
}

const char* tf_context_last_error(const tf_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

tf_status tf_context_take_warnings(tf_context* ctx, char** out) {
  return guarded(ctx, out, [&] {
    std::string w;
    w.swap(ctx->pending_warnings);
    return w;
  });
}

tf_status tf_count(tf_context* ctx, int k, const int* alpha, size_t parts, int use_search, char** out) {
  return guarded(ctx, out, [&] {
    const auto a = partition_from(alpha, parts);
    if (k < 2) transfact::fail(ErrorCode::invalid_argument, "k must be at least 2");
    const auto mu = transfact::mu_k(a, k);
    const auto c = ctx->counts().count(k, a, method_of(use_search));
    return dump({{"k", k},
                 {"alpha", a.parts()},
                 {"mu", mu ? json(*mu) : json(nullptr)},
                 {"method", transfact::to_string(method_of(use_search))},
                 {"count", transfact::to_decimal(c)}});
  });
}

tf_status tf_hurwitz(tf_context* ctx, const int* alpha, size_t parts, char** out) {
  return guarded(ctx, out, [&] {
    const auto a = partition_from(alpha, parts);
    return dump({{"alpha", a.parts()}, {"count", transfact::to_decimal(transfact::hurwitz_count(a))}});
  });
}

tf_status tf_wseries(tf_context* ctx, int k, int order, char** out) {
  return guarded(ctx, out, [&] {
    if (k < 2) transfact::fail(ErrorCode::invalid_argument, "k must be at least 2");
    if (order < 1) transfact::fail(ErrorCode::invalid_argument, "order must be at least 1");
    const auto w = transfact::w_series(k, order);
    json coeffs = json::array();
    for (const auto& [e, c] : w.terms()) {
      coeffs.push_back({{"degree", e[0]}, {"coefficient", transfact::to_string(c)}});
    }
    return dump({{"k", k}, {"order", order}, {"series", w.to_string()}, {"coefficients", coeffs}});
  });
}

tf_status tf_trees(tf_context* ctx, int k, char** out) {
  return guarded(ctx, out, [&] {
    if (k < 1) transfact::fail(ErrorCode::invalid_argument, "k must be at least 1");
    json list = json::array();
    for (const auto& t : transfact::gen_trees(k)) list.push_back(t.to_json());
    return dump({{"k", k}, {"count", list.size()}, {"trees", list}});
  });
}

tf_status tf_verify_conjecture(tf_context* ctx, int k, int m, int nmax, int uncorrected, int* passed, char** out) {
  return guarded(ctx, out, [&] {
    require_passed(passed);
    const auto r = transfact::verify_conjecture(ctx->counts(), k, m, nmax, uncorrected != 0);
    *passed = r.pass ? 1 : 0;
    return dump(r.to_json());
  });
}

tf_status tf_verify_pde(tf_context* ctx, int k, int nmax, int* passed, char** out) {
  return guarded(ctx, out, [&] {
    require_passed(passed);
    const auto r = transfact::verify_pde(ctx->counts(), k, nmax, ctx->jobs);
    *passed = r.pass() ? 1 : 0;
    return dump(r.to_json());
  });
}

tf_status tf_verify_lemma22(tf_context* ctx, int k, int nmax, int* passed, char** out) {
  return guarded(ctx, out, [&] {
    require_passed(passed);
    const auto r = transfact::verify_lemma22(k, nmax, ctx->jobs);
    *passed = r.pass() ? 1 : 0;
    return dump(r.to_json());
  });
}

tf_status tf_verify_all(tf_context* ctx, int nmax, int* passed, char** out) {
  return guarded(ctx, out, [&] {
    require_passed(passed);
    const auto r = transfact::run_verification_suite(ctx->counts(), nmax, ctx->jobs);
    *passed = r.pass() ? 1 : 0;
    return dump(r.to_json());
  });
}

tf_status tf_count_table_csv(tf_context* ctx, int k, int nmax, int use_search, char** out) {
  return guarded(ctx, out, [&] {
    const auto table = ctx->counts().table(k, nmax, method_of(use_search));
    std::ostringstream csv;
    csv << "alpha,n,l,mu,count\n";
    for (int n = 1; n <= nmax; ++n) {
      for (const auto& alpha : transfact::partitions_of(n)) {
        auto it = table.entries.find(alpha);
        if (it == table.entries.end()) continue;
        csv << '"' << alpha.to_string() << "\"," << alpha.n() << ',' << alpha.length() << ','
            << *transfact::mu_k(alpha, k) << ',' << transfact::to_decimal(it->second) << '\n';
      }
    }
    return csv.str();
  });
}

tf_status tf_count_table_json(tf_context* ctx, int k, int nmax, int use_search, char** out) {
  return guarded(ctx, out, [&] { return dump(transfact::count_table_to_json(ctx->counts().table(k, nmax, method_of(use_search)))); });
}

tf_status tf_enumerate(tf_context* ctx, int k, int degree, const char* permutation, size_t limit, char** out) {
  return guarded(ctx, out, [&] {
    if (!permutation) transfact::fail(ErrorCode::invalid_argument, "permutation is null");
    if (k < 2) transfact::fail(ErrorCode::invalid_argument, "k must be at least 2");
    const auto pi = transfact::Permutation::parse(degree, permutation);
    const auto mu = transfact::mu_k(pi.cycle_type(), k);
    const std::size_t cap = limit == 0 ? std::numeric_limits<std::size_t>::max() : limit;
    json list = json::array();
    if (mu) {
      for (const auto& f : transfact::enumerate_minimal_transitive(pi, k, cap)) {
        json factors = json::array();
        for (const auto& s : f.factors()) factors.push_back(s.to_string());
        list.push_back(std::move(factors));
      }
    }
    return dump({{"k", k},
                 {"degree", degree},
                 {"permutation", pi.to_string()},
                 {"type", pi.cycle_type().parts()},
                 {"mu", mu ? json(*mu) : json(nullptr)},
                 {"limit", limit},
                 {"count", list.size()},
                 {"factorisations", list}});
  });
}

tf_status tf_multiply(tf_context* ctx, int degree, const char* const* factors, size_t count, char** out) {
  return guarded(ctx, out, [&] {
    if (!factors || count == 0) transfact::fail(ErrorCode::invalid_argument, "no factors given");
    auto product = transfact::Permutation::identity(degree);
    json listed = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      if (!factors[i]) transfact::fail(ErrorCode::invalid_argument, "null factor");
      const auto f = transfact::Permutation::parse(degree, factors[i]);
      listed.push_back(f.to_string());
      product = product * f;
    }
    return dump({{"degree", degree},
                 {"factors", listed},
                 {"product", product.to_string()},
                 {"type", product.cycle_type().parts()}});
  });
}

void tf_string_free(char* s) { std::free(s); }

}  // extern "C"
