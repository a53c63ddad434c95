#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace kschur::cli {

/// 64-bit FNV-1a of (operation, canonical inputs, engine version), as 16 hex digits.
std::string cache_key(const std::string& op, const std::string& canonical_inputs, const std::string& version);

/// Append-only result store: `results.log` holds one JSON record per line,
/// `results.idx` maps keys to byte offsets. Writers take an exclusive flock
/// on `lock`; readers take a shared one.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// KSCHUR_CACHE_DIR, else `flag_dir` when non-empty, else ./.kschur-cache.
  static std::filesystem::path resolve_dir(const std::string& flag_dir);

  std::optional<std::string> get(const std::string& key);
  void put(const std::string& key, const std::string& value);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::optional<std::string> read_record(const std::string& key, std::uint64_t offset);
  void rebuild_index();

  std::filesystem::path dir_;
};

}  // namespace kschur::cli
