#ifndef ITLOG_CACHE_HPP
#define ITLOG_CACHE_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "itlog/series.hpp"

namespace itlog {

// Content-addressed series cache. Keys hash (normalized expression,
// operation, order); payloads use the series text format. Entries are
// re-verified on load by a caller-supplied oracle and dropped on failure.
class SeriesCache {
 public:
  // Resolution order: explicit dir flag, then ITLOG_CACHE_DIR, then a
  // user-level default.
  static std::filesystem::path resolve_dir(const std::string& flag_value);

  explicit SeriesCache(std::filesystem::path dir);

  static std::string key(const std::string& normalized_expr, const std::string& op,
                         int order);

  std::optional<RSeries> load(const std::string& key,
                              const std::function<bool(const RSeries&)>& verify) const;

  void store(const std::string& key, const RSeries& payload,
             const std::string& normalized_expr, const std::string& op, int order) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace itlog

#endif
