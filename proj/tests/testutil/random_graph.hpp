#pragma once

#include <random>
#include <vector>

#include "kgforge/rdf/graph.hpp"

namespace kgforge::testutil {

struct RandomGraphConfig {
  std::size_t max_triples = 30;
  std::size_t iri_pool = 8;
  std::size_t blank_pool = 4;
  std::size_t literal_pool = 6;
};

rdf::Term randomSubject(std::mt19937_64& rng, const RandomGraphConfig& cfg);
rdf::Term randomPredicate(std::mt19937_64& rng, const RandomGraphConfig& cfg);
rdf::Term randomObject(std::mt19937_64& rng, const RandomGraphConfig& cfg);
rdf::Triple randomTriple(std::mt19937_64& rng, const RandomGraphConfig& cfg);

/// Graph of up to cfg.max_triples random triples (set semantics may dedup).
rdf::Graph randomGraph(std::mt19937_64& rng, const RandomGraphConfig& cfg = {});

/// Same triple set inserted in a shuffled order.
rdf::Graph shuffled(const rdf::Graph& g, std::mt19937_64& rng);

}  // namespace kgforge::testutil
