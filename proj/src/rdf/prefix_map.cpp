#include "kgforge/rdf/prefix_map.hpp"

namespace kgforge::rdf {

bool PrefixMap::add(std::string prefix, std::string ns) {
  return entries_.emplace(std::move(prefix), std::move(ns)).second;
}

void PrefixMap::set(std::string prefix, std::string ns) {
  entries_[std::move(prefix)] = std::move(ns);
}

std::optional<std::string> PrefixMap::namespaceFor(std::string_view prefix) const {
  auto it = entries_.find(std::string(prefix));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> PrefixMap::expand(std::string_view pname) const {
  auto colon = pname.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto ns = namespaceFor(pname.substr(0, colon));
  if (!ns) return std::nullopt;
  return *ns + std::string(pname.substr(colon + 1));
}

}  // namespace kgforge::rdf
