#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "transfact/enumerator.hpp"

namespace transfact {

inline constexpr const char* kCacheFormat = "transfact-count-cache";
inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheDirVariable = "TRANSFACT_CACHE_DIR";
inline constexpr unsigned kSpotCheckSeed = 20240229u;
inline constexpr std::size_t kSpotCheckEntries = 3;

/// {"k": K, "method": "dp"|"dfs", "entries": [{"alpha": [..], "count": "decimal"}]}
nlohmann::json count_table_to_json(const CountTable& table);
CountTable count_table_from_json(const nlohmann::json& j);

/// {"format": ..., "version": 1, "created": ISO-8601, "tables": [...]}
struct CacheFile {
  std::string created;
  std::vector<CountTable> tables;

  nlohmann::json to_json() const;
  /// Throws parse on a wrong format tag, version or shape.
  static CacheFile from_json(const nlohmann::json& j);
};

/// $TRANSFACT_CACHE_DIR/counts.json when the variable is set and nonempty.
std::optional<std::filesystem::path> default_cache_path();

/// Count tables backed by an optional JSON file. A loaded file is trusted
/// only after kSpotCheckEntries entries per table, drawn with a fixed seed,
/// agree with a fresh class-walk count; otherwise (or on a parse or
/// version failure) the file is discarded with a warning and rewritten.
class CountCache {
 public:
  explicit CountCache(std::optional<std::filesystem::path> path = std::nullopt, int jobs = 1);
  ~CountCache();

  CountCache(const CountCache&) = delete;
  CountCache& operator=(const CountCache&) = delete;

  BigInt count(int k, const Partition& alpha, CountMethod method = CountMethod::dp);
  /// Every alpha with |alpha| <= n_max and mu_k defined.
  CountTable table(int k, int n_max, CountMethod method = CountMethod::dp);

  /// Writes the file when entries were added since the last write.
  void flush();

  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }
  /// Entries computed (not served from the file), spot checks excluded.
  std::size_t computed() const noexcept { return computed_; }
  std::size_t spot_checks() const noexcept { return spot_checks_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  std::vector<std::string> take_warnings();

 private:
  void load();
  bool spot_check(const CountTable& table);
  BigInt compute(int k, const Partition& alpha, CountMethod method);
  CountTable& slot(int k, CountMethod method);

  std::optional<std::filesystem::path> path_;
  int jobs_;
  std::string created_;
  std::map<std::pair<int, CountMethod>, CountTable> tables_;
  std::map<int, std::unique_ptr<FactorisationCounter>> counters_;
  bool dirty_ = false;
  std::size_t computed_ = 0;
  std::size_t spot_checks_ = 0;
  std::vector<std::string> warnings_;
};

}  // namespace transfact
