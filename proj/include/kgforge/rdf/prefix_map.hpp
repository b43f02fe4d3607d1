#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kgforge::rdf {

/// Prefix → namespace table. Expansion of `pfx:local` is namespace + local.
class PrefixMap {
 public:
  /// Returns false if the prefix is already bound (binding unchanged).
  bool add(std::string prefix, std::string ns);
  /// Re-binding allowed (last declaration wins), as parsers need it.
  void set(std::string prefix, std::string ns);

  std::optional<std::string> namespaceFor(std::string_view prefix) const;
  /// Expands "pfx:local"; nullopt when the prefix is undeclared or there is
  /// no colon.
  std::optional<std::string> expand(std::string_view pname) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace kgforge::rdf
