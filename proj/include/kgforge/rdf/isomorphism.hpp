#pragma once

#include <cstddef>

#include "kgforge/rdf/graph.hpp"

namespace kgforge::rdf {

struct IsomorphismOptions {
  /// Bijection search aborts (ResourceLimitError) beyond this many blank
  /// nodes per graph.
  std::size_t max_blank_nodes = 64;
  /// Backtracking step guard.
  std::size_t max_steps = 4'000'000;
};

/// True iff some bijection between blank-node labels makes the triple sets
/// equal. Ground triples are compared directly; blank nodes are matched by
/// signature first, then by backtracking over the remaining candidates.
/// Intended for desk-scale graphs.
bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

}  // namespace kgforge::rdf
