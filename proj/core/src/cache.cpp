#include "itlog/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "itlog/seriesio.hpp"

namespace itlog {

namespace {

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::filesystem::path SeriesCache::resolve_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ITLOG_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "itlog";
  return std::filesystem::temp_directory_path() / "itlog-cache";
}

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string SeriesCache::key(const std::string& normalized_expr, const std::string& op,
                             int order) {
  return fnv1a64_hex(normalized_expr + "\x1f" + op + "\x1f" + std::to_string(order));
}

std::optional<RSeries> SeriesCache::load(
    const std::string& key, const std::function<bool(const RSeries&)>& verify) const {
  std::filesystem::path file = dir_ / (key + ".series");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    RSeries s = read_rseries(in);
    if (verify && !verify(s)) {
      std::filesystem::remove(file);
      return std::nullopt;
    }
    return s;
  } catch (const Error&) {
    std::filesystem::remove(file);
    return std::nullopt;
  }
}

void SeriesCache::store(const std::string& key, const RSeries& payload,
                        const std::string& normalized_expr, const std::string& op,
                        int order) const {
  {
    std::ofstream out(dir_ / (key + ".series"));
    write_series(out, payload);
  }
  auto now = std::chrono::system_clock::now().time_since_epoch();
  std::ofstream meta(dir_ / (key + ".json"));
  meta << "{\"schema\": 1, \"expr\": \"" << normalized_expr << "\", \"op\": \"" << op
       << "\", \"order\": " << order << ", \"created_at\": "
       << std::chrono::duration_cast<std::chrono::seconds>(now).count() << "}\n";
}

}  // namespace itlog
