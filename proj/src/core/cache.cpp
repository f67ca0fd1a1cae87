#include "transfact/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "transfact/error.hpp"

namespace transfact {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CountMethod method_from_string(const std::string& s) {
  if (s == "dp") return CountMethod::dp;
  if (s == "dfs") return CountMethod::dfs;
  fail(ErrorCode::parse, "unknown count method '" + s + "'");
}

}  // namespace

nlohmann::json count_table_to_json(const CountTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [alpha, count] : table.entries) {
    entries.push_back({{"alpha", alpha.parts()}, {"count", to_decimal(count)}});
  }
  return {{"k", table.k}, {"method", to_string(table.method)}, {"entries", std::move(entries)}};
}

CountTable count_table_from_json(const nlohmann::json& j) {
  try {
    CountTable table;
    table.k = j.at("k").get<int>();
    if (table.k < 2) fail(ErrorCode::parse, "cache table with k < 2");
    table.method = method_from_string(j.at("method").get<std::string>());
    for (const auto& e : j.at("entries")) {
      Partition alpha(e.at("alpha").get<std::vector<int>>());
      if (!table.entries.emplace(alpha, from_decimal(e.at("count").get<std::string>())).second) {
        fail(ErrorCode::parse, "duplicate cache entry for " + alpha.to_string());
      }
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed count table: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    fail(ErrorCode::parse, std::string("malformed count table: ") + e.what());
  }
}

nlohmann::json CacheFile::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& table : tables) t.push_back(count_table_to_json(table));
  return {{"format", kCacheFormat}, {"version", kCacheVersion}, {"created", created}, {"tables", std::move(t)}};
}

CacheFile CacheFile::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != kCacheFormat) fail(ErrorCode::parse, "not a count cache file");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kCacheVersion) {
    fail(ErrorCode::parse, "unsupported cache version");
  }
  CacheFile file;
  file.created = j.value("created", "");
  if (!j.contains("tables") || !j["tables"].is_array()) fail(ErrorCode::parse, "cache file without tables");
  for (const auto& t : j["tables"]) file.tables.push_back(count_table_from_json(t));
  return file;
}

std::optional<std::filesystem::path> default_cache_path() {
  const char* dir = std::getenv(kCacheDirVariable);
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "counts.json";
}

CountCache::CountCache(std::optional<std::filesystem::path> path, int jobs) : path_(std::move(path)), jobs_(jobs) {
  if (path_) load();
  if (created_.empty()) created_ = utc_now();
}

CountCache::~CountCache() {
  try {
    flush();
  } catch (...) {
  }
}

void CountCache::load() {
  std::ifstream in(*path_);
  if (!in) return;
  CacheFile file;
  try {
    file = CacheFile::from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    warnings_.push_back("cache " + path_->string() + " unreadable (" + e.what() + "); recomputing");
    dirty_ = true;
    return;
  }
  for (const auto& table : file.tables) {
    if (!spot_check(table)) {
      warnings_.push_back("cache " + path_->string() + " failed a spot check for k=" + std::to_string(table.k) +
                          "; recomputing");
      tables_.clear();
      dirty_ = true;
      return;
    }
    const auto key = std::make_pair(table.k, table.method);
    if (!tables_.emplace(key, table).second) {
      warnings_.push_back("cache " + path_->string() + " has a duplicate table; recomputing");
      tables_.clear();
      dirty_ = true;
      return;
    }
  }
  created_ = file.created;
}

bool CountCache::spot_check(const CountTable& table) {
  if (table.entries.empty()) return true;
  std::vector<const std::pair<const Partition, BigInt>*> flat;
  for (const auto& e : table.entries) flat.push_back(&e);
  std::mt19937 rng(kSpotCheckSeed + static_cast<unsigned>(table.k));
  std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
  const std::size_t draws = std::min(kSpotCheckEntries, flat.size());
  for (std::size_t i = 0; i < draws; ++i) {
    const auto& [alpha, count] = *flat[pick(rng)];
    ++spot_checks_;
    try {
      if (compute(table.k, alpha, CountMethod::dp) != count) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

BigInt CountCache::compute(int k, const Partition& alpha, CountMethod method) {
  if (method == CountMethod::dfs) return count_minimal_transitive_dfs(Permutation::canonical(alpha), k, jobs_);
  auto it = counters_.find(k);
  if (it == counters_.end()) it = counters_.emplace(k, std::make_unique<FactorisationCounter>(k, jobs_)).first;
  return it->second->minimal_transitive(alpha);
}

CountTable& CountCache::slot(int k, CountMethod method) {
  auto it = tables_.find({k, method});
  if (it == tables_.end()) {
    CountTable t;
    t.k = k;
    t.method = method;
    it = tables_.emplace(std::make_pair(k, method), std::move(t)).first;
  }
  return it->second;
}

BigInt CountCache::count(int k, const Partition& alpha, CountMethod method) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  CountTable& t = slot(k, method);
  if (auto it = t.entries.find(alpha); it != t.entries.end()) return it->second;
  if (!mu_k(alpha, k)) return 0;
  BigInt c = compute(k, alpha, method);
  ++computed_;
  t.entries.emplace(alpha, c);
  dirty_ = true;
  flush();
  return c;
}

CountTable CountCache::table(int k, int n_max, CountMethod method) {
  if (k < 2) fail(ErrorCode::invalid_argument, "k must be at least 2");
  if (n_max < 1) fail(ErrorCode::invalid_argument, "n_max must be at least 1");
  CountTable& t = slot(k, method);
  CountTable out;
  out.k = k;
  out.method = method;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      if (!mu_k(alpha, k)) continue;
      auto it = t.entries.find(alpha);
      if (it == t.entries.end()) {
        it = t.entries.emplace(alpha, compute(k, alpha, method)).first;
        ++computed_;
        dirty_ = true;
      }
      out.entries.emplace(alpha, it->second);
    }
  }
  flush();
  return out;
}

void CountCache::flush() {
  if (!dirty_ || !path_) return;
  CacheFile file;
  file.created = created_;
  for (const auto& [key, table] : tables_) {
    if (!table.entries.empty()) file.tables.push_back(table);
  }
  if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path());
  const auto tmp = std::filesystem::path(path_->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot write " + tmp.string());
    out << file.to_json().dump(1) << '\n';
    if (!out) fail(ErrorCode::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *path_, ec);
  if (ec) fail(ErrorCode::io, "cannot replace " + path_->string() + ": " + ec.message());
  dirty_ = false;
}

std::vector<std::string> CountCache::take_warnings() {
  std::vector<std::string> out;
  out.swap(warnings_);
  return out;
}

}  // namespace transfact
