#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace polyzeta {

inline constexpr const char* kToolVersion = "0.1.0";

/// One cached computation.  A record is only ever served for the exact
/// (method, input, point, digits) key it was stored under, so a request for
/// more digits than certified is a miss by construction.
struct CacheRecord {
  std::string method;
  std::string input;
  std::string point;
  unsigned digits = 0;
  std::string value;
  std::string error_bound;
  std::string created_at;
  std::string tool_version;
};

/// Append-only line-delimited JSON store.  Corrupt lines are skipped with a
/// warning; on duplicate keys the last-written record wins.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  /// MZV_CACHE_DIR if set, else the user cache directory.
  static std::filesystem::path default_dir();

  const std::filesystem::path& file() const { return file_; }

  std::optional<CacheRecord> get(const std::string& method, const std::string& input,
                                 const std::string& point, unsigned digits) const;
  void put(const CacheRecord& rec) const;

private:
  std::filesystem::path file_;
};

}  // namespace polyzeta
