#pragma once

#include <ostream>
#include <string>

#include "kgforge/rdf/graph.hpp"
#include "kgforge/rdf/term.hpp"

namespace kgforge::rdf {

/// N-Triples rendering of one term (canonical escaping; xsd:string datatype
/// is left implicit).
std::string toNTriples(const Term& t);
std::string toNTriples(const Triple& t);

/// Canonical N-Triples dump: one line per triple, lines sorted
/// lexicographically, each terminated by '\n'. Equal triple sets serialize
/// byte-identically regardless of insertion order.
std::string serializeCanonical(const Graph& g);
void serializeCanonical(const Graph& g, std::ostream& out);

}  // namespace kgforge::rdf
