#include "pq/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pq/error.hpp"

namespace pq {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "pqcache";

std::atomic<unsigned> temp_counter{0};

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kInvariantViolated, "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("PQ_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "pq";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "pq";
  return fs::temp_directory_path() / "pq-cache";
}

Cache::Cache(fs::path dir, int version) : dir_(std::move(dir)), version_(version) {}

std::string Cache::key_for(std::string_view canonical) { return sha256_hex(canonical); }

fs::path Cache::path_of(const std::string& key) const { return dir_ / (key + ".pqc"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(path_of(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string magic, stored_key, digest;
  int version = -1;
  std::size_t size = 0;
  hs >> magic >> version >> stored_key >> size >> digest;
  if (!hs || magic != kMagic || version != version_ || stored_key != key) {
    ++misses_;
    return std::nullopt;
  }
  std::string payload(size, '\0');
  in.read(payload.data(), static_cast<std::streamsize>(size));
  if (static_cast<std::size_t>(in.gcount()) != size || in.peek() != std::char_traits<char>::eof() ||
      sha256_hex(payload) != digest) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return payload;
}

void Cache::put(const std::string& key, std::string_view payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kInvalidArgument, "cannot create cache directory " + dir_.string());
  fs::path tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(temp_counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kMagic << ' ' << version_ << ' ' << key << ' ' << payload.size() << ' ' << sha256_hex(payload) << '\n';
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kInvalidArgument, "cannot write cache entry in " + dir_.string());
    }
  }
  fs::rename(tmp, path_of(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kInvalidArgument, "cannot publish cache entry in " + dir_.string());
  }
}

}  // namespace pq
