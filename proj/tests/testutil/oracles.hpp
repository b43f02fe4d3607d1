#pragma once

#include <optional>
#include <vector>

#include "kgforge/rdf/graph.hpp"

namespace kgforge::testutil {

/// Linear-scan match, independent of the Graph indexes.
std::vector<rdf::Triple> scanMatch(const rdf::Graph& g, const std::optional<rdf::Term>& s,
                                   const std::optional<rdf::Term>& p,
                                   const std::optional<rdf::Term>& o);

/// Exhaustive bijection enumeration over blank-node labels. Factorial cost;
/// only for small fixtures.
bool isomorphicBruteForce(const rdf::Graph& a, const rdf::Graph& b);

}  // namespace kgforge::testutil
