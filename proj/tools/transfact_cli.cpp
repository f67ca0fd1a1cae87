#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "transfact/transfact.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ContextDeleter {
  void operator()(tf_context* c) const { tf_context_destroy(c); }
};
using Context = std::unique_ptr<tf_context, ContextDeleter>;

struct Owned {
  char* text = nullptr;
  ~Owned() { tf_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

void flush_warnings(tf_context* ctx) {
  Owned w;
  if (tf_context_take_warnings(ctx, &w.text) == TF_OK && !w.str().empty()) std::cerr << "warning: " << w.str();
}

int error_exit(tf_context* ctx, tf_status status) {
  flush_warnings(ctx);
  std::cerr << "error (" << tf_status_name(status) << "): " << tf_context_last_error(ctx) << '\n';
  switch (status) {
    case TF_IO_ERROR:
    case TF_INTERNAL:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

std::vector<int> parse_alpha(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--alpha", "bad part '" + token + "'");
    }
    if (used != token.size() || v < 1) throw CLI::ValidationError("--alpha", "bad part '" + token + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw CLI::ValidationError("--alpha", "no parts given");
  return parts;
}

std::string summary(const json& r) {
  std::string s = r.value("pass", false) ? "PASS " : "FAIL ";
  s += r.value("check", std::string("check"));
  for (const char* key : {"k", "m", "nmax"}) {
    if (r.contains(key)) s += std::string(" ") + key + "=" + r[key].dump();
  }
  if (r.contains("form") && !r["form"].get<std::string>().empty()) s += " form=" + r["form"].get<std::string>();
  if (r.contains("compared_terms")) s += " terms=" + r["compared_terms"].dump();
  if (r.contains("mismatches")) s += " mismatches=" + std::to_string(r["mismatches"].size());
  if (r.contains("factorisations")) s += " factorisations=" + r["factorisations"].dump();
  if (r.contains("failures")) s += " failures=" + r["failures"].dump();
  if (r.contains("items")) {
    std::size_t failed = 0;
    for (const auto& i : r["items"]) failed += i.value("pass", false) ? 0 : 1;
    s += " items=" + std::to_string(r["items"].size()) + " failed=" + std::to_string(failed);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal transitive factorisations into k-cycles: counts, series and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string cache_file;
  int jobs = 1;
  app.add_flag("--json", as_json, "Print machine-readable JSON");
  app.add_option("--cache", cache_file, "Count cache file (default $TRANSFACT_CACHE_DIR/counts.json)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  int k = 2;
  std::string alpha;
  std::string method = "dp";
  auto* count = app.add_subcommand("count", "Count minimal transitive factorisations of a fixed permutation of type alpha");
  count->add_option("--k", k, "Cycle length of the factors")->required()->check(CLI::Range(2, 64));
  count->add_option("--alpha", alpha, "Cycle type, comma separated")->required();
  count->add_option("--method", method, "dp (class walk) or dfs (search)")->check(CLI::IsMember({"dp", "dfs"}));

  auto* hurwitz = app.add_subcommand("hurwitz", "Closed-form count for transpositions");
  hurwitz->add_option("--alpha", alpha, "Cycle type, comma separated")->required();

  int order = 10;
  auto* wseries = app.add_subcommand("wseries", "Series solution of w = x exp(w^(k-1))");
  wseries->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  wseries->add_option("--order", order, "Highest degree")->required()->check(CLI::Range(1, 200));

  auto* trees = app.add_subcommand("trees", "Bicoloured plane trees with k edges and their symmetries");
  trees->add_option("--k", k)->required()->check(CLI::Range(1, 64));

  int m = 1;
  int nmax = 9;
  bool uncorrected = false;
  auto* verify = app.add_subcommand("verify", "Coefficientwise verification suites");
  verify->require_subcommand(1);
  auto* v_conj = verify->add_subcommand("conjecture", "Generating series of m-part counts against closed forms");
  v_conj->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  v_conj->add_option("--m", m)->required()->check(CLI::Range(1, 16));
  v_conj->add_option("--nmax", nmax)->required()->check(CLI::Range(1, 16));
  v_conj->add_flag("--uncorrected", uncorrected, "Use the two-point polynomial without the factor k-1");
  auto* v_pde = verify->add_subcommand("pde", "Tree equation and symmetrised equations");
  v_pde->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  v_pde->add_option("--nmax", nmax)->required()->check(CLI::Range(1, 16));
  auto* v_lemma = verify->add_subcommand("lemma22", "First-factor structure of every enumerated factorisation");
  v_lemma->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  v_lemma->add_option("--nmax", nmax)->required()->check(CLI::Range(1, 16));
  auto* v_all = verify->add_subcommand("all", "Every suite at sizes capped by nmax");
  v_all->add_option("--nmax", nmax, "Largest degree")->check(CLI::Range(1, 16));

  auto* table = app.add_subcommand("table", "Count table as CSV (alpha,n,l,mu,count)");
  table->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  table->add_option("--nmax", nmax)->required()->check(CLI::Range(1, 16));
  table->add_option("--method", method, "dp or dfs")->check(CLI::IsMember({"dp", "dfs"}));

  std::string perm;
  int degree = 0;
  std::size_t limit = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List minimal transitive factorisations");
  enumerate->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  enumerate->add_option("--perm", perm, "Target in cycle notation, e.g. (123)(45)")->required();
  enumerate->add_option("--degree", degree, "Degree n")->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--limit", limit, "Stop after this many (0: all)");

  std::vector<std::string> factors;
  auto* multiply = app.add_subcommand("multiply", "Product of permutations, rightmost applied first");
  multiply->add_option("--degree", degree, "Degree n")->required()->check(CLI::Range(1, 64));
  multiply->add_option("factors", factors, "Factors in cycle notation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  Context ctx(tf_context_create());
  if (!ctx) {
    std::cerr << "error: cannot create context\n";
    return kExitFailed;
  }
  tf_status st = tf_context_set_jobs(ctx.get(), jobs);
  if (st == TF_OK) st = tf_context_set_cache(ctx.get(), cache_file.empty() ? nullptr : cache_file.c_str());
  if (st != TF_OK) return error_exit(ctx.get(), st);

  Owned out;
  const bool search = method == "dfs";
  std::vector<int> parts;
  try {
    if (*count || *hurwitz) parts = parse_alpha(alpha);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  if (*count || *hurwitz || *wseries || *trees || *enumerate || *multiply) {
    if (*count) st = tf_count(ctx.get(), k, parts.data(), parts.size(), search ? 1 : 0, &out.text);
    if (*hurwitz) st = tf_hurwitz(ctx.get(), parts.data(), parts.size(), &out.text);
    if (*wseries) st = tf_wseries(ctx.get(), k, order, &out.text);
    if (*trees) st = tf_trees(ctx.get(), k, &out.text);
    if (*enumerate) st = tf_enumerate(ctx.get(), k, degree, perm.c_str(), limit, &out.text);
    if (*multiply) {
      std::vector<const char*> raw;
      for (const auto& f : factors) raw.push_back(f.c_str());
      st = tf_multiply(ctx.get(), degree, raw.data(), raw.size(), &out.text);
    }
    if (st != TF_OK) return error_exit(ctx.get(), st);
    flush_warnings(ctx.get());
    if (as_json) {
      std::cout << out.str() << '\n';
      return kExitOk;
    }
    const json r = json::parse(out.str());
    if (*count || *hurwitz) std::cout << r["count"].get<std::string>() << '\n';
    if (*wseries) std::cout << r["series"].get<std::string>() << '\n';
    if (*trees) {
      for (const auto& t : r["trees"]) {
        std::cout << t["tree"].get<std::string>() << " symmetry=" << t["symmetry"] << " reduced="
                  << t["reduced"].get<std::string>() << " aut=" << t["reduced_aut"] << '\n';
      }
    }
    if (*enumerate) {
      for (const auto& f : r["factorisations"]) {
        std::string line;
        for (const auto& s : f) line += (line.empty() ? "" : " ") + s.get<std::string>();
        std::cout << (line.empty() ? "()" : line) << '\n';
      }
    }
    if (*multiply) {
      const auto p = r["product"].get<std::string>();
      std::cout << (p.empty() ? "()" : p) << '\n';
    }
    return kExitOk;
  }

  if (*table) {
    st = as_json ? tf_count_table_json(ctx.get(), k, nmax, search ? 1 : 0, &out.text)
                 : tf_count_table_csv(ctx.get(), k, nmax, search ? 1 : 0, &out.text);
    if (st != TF_OK) return error_exit(ctx.get(), st);
    flush_warnings(ctx.get());
    std::cout << out.str();
    if (as_json) std::cout << '\n';
    return kExitOk;
  }

  int passed = 0;
  if (*v_conj) st = tf_verify_conjecture(ctx.get(), k, m, nmax, uncorrected ? 1 : 0, &passed, &out.text);
  if (*v_pde) st = tf_verify_pde(ctx.get(), k, nmax, &passed, &out.text);
  if (*v_lemma) st = tf_verify_lemma22(ctx.get(), k, nmax, &passed, &out.text);
  if (*v_all) st = tf_verify_all(ctx.get(), nmax, &passed, &out.text);
  if (st != TF_OK) return error_exit(ctx.get(), st);
  flush_warnings(ctx.get());
  const json r = json::parse(out.str());
  if (as_json) {
    std::cerr << summary(r) << '\n';
    std::cout << out.str() << '\n';
  } else {
    std::cout << summary(r) << '\n';
    if (r.contains("items")) {
      for (const auto& i : r["items"]) {
        std::cout << "  " << (i.value("pass", false) ? "PASS " : "FAIL ") << i["name"].get<std::string>() << '\n';
      }
    }
  }
  return passed ? kExitOk : kExitFailed;
}
