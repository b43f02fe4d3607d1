#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <string>

namespace kgforge::io {

/// Opens a file for reading; paths ending in .gz are decompressed
/// transparently. Throws kgforge::Error when the file cannot be opened.
std::unique_ptr<std::istream> openInput(const std::filesystem::path& path);

/// Resolves logical source names against a base directory and opens them.
/// When a cache directory is configured (KG_FORGE_CACHE or explicitly),
/// decompressed copies of .gz inputs are reused across runs.
class SourceResolver {
 public:
  SourceResolver() = default;
  explicit SourceResolver(std::filesystem::path base_dir);

  /// Reads KG_FORGE_CACHE; unset means no caching.
  static SourceResolver withEnvCache(std::filesystem::path base_dir);

  void setCacheDir(std::filesystem::path dir) { cache_dir_ = std::move(dir); }

  std::filesystem::path resolve(const std::string& source) const;
  std::unique_ptr<std::istream> open(const std::string& source) const;
  bool exists(const std::string& source) const;

 private:
  std::filesystem::path base_dir_;
  std::filesystem::path cache_dir_;
};

}  // namespace kgforge::io
