#include "kgforge/io/input.hpp"

#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <vector>

#include "kgforge/util/errors.hpp"

namespace kgforge::io {

namespace fs = std::filesystem;

namespace {

/// Read-only streambuf over a zlib gzFile.
class GzStreamBuf : public std::streambuf {
 public:
  explicit GzStreamBuf(const fs::path& path) : buf_(1 << 16) {
    file_ = gzopen(path.string().c_str(), "rb");
    if (!file_) throw Error("cannot open gzip file: " + path.string());
    gzbuffer(file_, 1 << 16);
  }

  ~GzStreamBuf() override {
    if (file_) gzclose(file_);
  }

  GzStreamBuf(const GzStreamBuf&) = delete;
  GzStreamBuf& operator=(const GzStreamBuf&) = delete;

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buf_.data(), static_cast<unsigned>(buf_.size()));
    if (n < 0) throw Error("gzip read error");
    if (n == 0) return traits_type::eof();
    setg(buf_.data(), buf_.data(), buf_.data() + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_ = nullptr;
  std::vector<char> buf_;
};

class GzInputStream : public std::istream {
 public:
  explicit GzInputStream(const fs::path& path) : std::istream(nullptr), buf_(path) {
    rdbuf(&buf_);
  }

 private:
  GzStreamBuf buf_;
};

bool hasGzSuffix(const fs::path& path) {
  auto s = path.string();
  return s.size() > 3 && s.compare(s.size() - 3, 3, ".gz") == 0;
}

}  // namespace

std::unique_ptr<std::istream> openInput(const fs::path& path) {
  if (!fs::exists(path)) throw Error("no such file: " + path.string());
  if (hasGzSuffix(path)) return std::make_unique<GzInputStream>(path);
  auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in) throw Error("cannot open file: " + path.string());
  return in;
}

SourceResolver::SourceResolver(fs::path base_dir) : base_dir_(std::move(base_dir)) {}

SourceResolver SourceResolver::withEnvCache(fs::path base_dir) {
  SourceResolver r(std::move(base_dir));
  if (const char* cache = std::getenv("KG_FORGE_CACHE"); cache && *cache)
    r.cache_dir_ = cache;
  return r;
}

fs::path SourceResolver::resolve(const std::string& source) const {
  fs::path p(source);
  if (p.is_absolute() || base_dir_.empty()) return p;
  return base_dir_ / p;
}

bool SourceResolver::exists(const std::string& source) const {
  return fs::exists(resolve(source));
}

std::unique_ptr<std::istream> SourceResolver::open(const std::string& source) const {
  fs::path path = resolve(source);
  if (!cache_dir_.empty() && hasGzSuffix(path) && fs::exists(path)) {
    // cache key: filename + size + mtime
    auto size = fs::file_size(path);
    auto mtime = fs::last_write_time(path).time_since_epoch().count();
    std::string key = path.filename().string() + "." + std::to_string(size) + "." +
                      std::to_string(mtime) + ".cached";
    fs::path cached = cache_dir_ / key;
    if (!fs::exists(cached)) {
      fs::create_directories(cache_dir_);
      GzInputStream in(path);
      std::ofstream out(cached, std::ios::binary);
      out << in.rdbuf();
      if (!out) throw Error("cannot write cache file: " + cached.string());
    }
    auto in = std::make_unique<std::ifstream>(cached, std::ios::binary);
    if (!*in) throw Error("cannot open cache file: " + cached.string());
    return in;
  }
  return openInput(path);
}

}  // namespace kgforge::io
