#include "polyzeta/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace polyzeta {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "cache.jsonl";
}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("MZV_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "mzv";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "mzv";
  return std::filesystem::temp_directory_path() / "mzv-cache";
}

std::optional<CacheRecord> ResultCache::get(const std::string& method,
                                            const std::string& input,
                                            const std::string& point,
                                            unsigned digits) const {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  std::optional<CacheRecord> found;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      std::cerr << "mzv: warning: skipping corrupt cache line " << lineno << "\n";
      continue;
    }
    try {
      if (j.at("method") != method || j.at("input") != input || j.at("point") != point ||
          j.at("digits").get<unsigned>() != digits)
        continue;
      CacheRecord rec;
      rec.method = method;
      rec.input = input;
      rec.point = point;
      rec.digits = digits;
      rec.value = j.at("value").get<std::string>();
      rec.error_bound = j.at("error_bound").get<std::string>();
      rec.created_at = j.value("created_at", "");
      rec.tool_version = j.value("tool_version", "");
      found = rec;  // keep scanning: last one wins
    } catch (const json::exception&) {
      std::cerr << "mzv: warning: skipping malformed cache line " << lineno << "\n";
    }
  }
  return found;
}

void ResultCache::put(const CacheRecord& rec) const {
  json j{{"method", rec.method},       {"input", rec.input},
         {"point", rec.point},         {"digits", rec.digits},
         {"value", rec.value},         {"error_bound", rec.error_bound},
         {"created_at", rec.created_at}, {"tool_version", rec.tool_version}};
  std::string line = j.dump();
  line.push_back('\n');
  // one write with O_APPEND semantics keeps concurrent writers line-atomic
  std::FILE* f = std::fopen(file_.c_str(), "a");
  if (!f) {
    std::cerr << "mzv: warning: cannot open cache for writing\n";
    return;
  }
  std::fwrite(line.data(), 1, line.size(), f);
  std::fclose(f);
}

}  // namespace polyzeta
