#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace pq {

inline constexpr int kCacheFormatVersion = 1;

std::string sha256_hex(std::string_view data);

/// PQ_CACHE_DIR, else $XDG_CACHE_HOME/pq, else ~/.cache/pq.
std::filesystem::path default_cache_dir();

/// Content-addressed store of serialized results. Each entry is one file
/// `<key>.pqc` holding a header line (format, version, key, payload size and
/// digest) followed by the payload. Entries with a bad header, wrong version
/// or a digest mismatch read as misses.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, int version = kCacheFormatVersion);

  /// sha256 of the canonical description of a computation.
  static std::string key_for(std::string_view canonical);

  std::optional<std::string> get(const std::string& key) const;
  /// Writes to a temporary file in the cache directory, then renames it into place.
  void put(const std::string& key, std::string_view payload) const;

  const std::filesystem::path& dir() const { return dir_; }
  int version() const { return version_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path path_of(const std::string& key) const;

  std::filesystem::path dir_;
  int version_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

}  // namespace pq
