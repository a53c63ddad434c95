#include "result_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kschur::cli {

namespace fs = std::filesystem;

std::string cache_key(const std::string& op, const std::string& canonical_inputs, const std::string& version) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(op);
  feed(canonical_inputs);
  feed(version);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class FileLock {
 public:
  FileLock(const fs::path& path, int mode) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open cache lock " + path.string());
    if (::flock(fd_, mode) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path ResultCache::resolve_dir(const std::string& flag_dir) {
  if (const char* env = std::getenv("KSCHUR_CACHE_DIR"); env && *env) return env;
  if (!flag_dir.empty()) return flag_dir;
  return fs::path(".kschur-cache");
}

std::optional<std::string> ResultCache::read_record(const std::string& key, std::uint64_t offset) {
  std::ifstream log(dir_ / "results.log", std::ios::binary);
  if (!log) return std::nullopt;
  log.seekg(static_cast<std::streamoff>(offset));
  std::string line;
  if (!std::getline(log, line)) return std::nullopt;
  const auto rec = nlohmann::json::parse(line, nullptr, false);
  if (rec.is_discarded() || !rec.contains("key") || rec["key"] != key) return std::nullopt;
  return rec["value"].get<std::string>();
}

void ResultCache::rebuild_index() {
  std::ifstream log(dir_ / "results.log", std::ios::binary);
  std::ofstream idx(dir_ / "results.idx", std::ios::binary | std::ios::trunc);
  std::string line;
  std::uint64_t offset = 0;
  while (std::getline(log, line)) {
    const auto rec = nlohmann::json::parse(line, nullptr, false);
    if (!rec.is_discarded() && rec.contains("key")) idx << rec["key"].get<std::string>() << ' ' << offset << '\n';
    offset += line.size() + 1;
  }
}

std::optional<std::string> ResultCache::get(const std::string& key) {
  FileLock lock(dir_ / "lock", LOCK_SH);
  std::ifstream idx(dir_ / "results.idx");
  std::string k;
  std::uint64_t offset = 0;
  std::optional<std::uint64_t> found;
  while (idx >> k >> offset)
    if (k == key) found = offset;  // the last record for a key wins
  if (!found) return std::nullopt;
  return read_record(key, *found);
}

void ResultCache::put(const std::string& key, const std::string& value) {
  FileLock lock(dir_ / "lock", LOCK_EX);
  const fs::path log_path = dir_ / "results.log";
  const std::uint64_t offset = fs::exists(log_path) ? fs::file_size(log_path) : 0;
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch());
  const nlohmann::json rec = {{"key", key}, {"created_at", now.count()}, {"value", value}};
  {
    std::ofstream log(log_path, std::ios::binary | std::ios::app);
    log << rec.dump() << '\n';
  }
  std::ofstream idx(dir_ / "results.idx", std::ios::app);
  idx << key << ' ' << offset << '\n';
  if (!idx) rebuild_index();
}

}  // namespace kschur::cli
