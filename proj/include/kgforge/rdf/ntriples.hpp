#pragma once

#include <functional>
#include <istream>
#include <string>

#include "kgforge/rdf/graph.hpp"
#include "kgforge/rdf/term.hpp"

namespace kgforge::rdf {

struct NTriplesOptions {
  /// Prepended to every blank-node label so graphs parsed from different
  /// documents can be merged without label capture.
  std::string blank_prefix;
  /// Label used in error messages.
  std::string source_name = "ntriples";
};

/// Streaming N-Triples reader: one triple per `.`-terminated line, `#`
/// comments, UCHAR escapes decoded. Memory use is bounded by the longest
/// line, not the document.
void parseNTriples(std::istream& in, const std::function<void(Triple&&)>& sink,
                   const NTriplesOptions& options = {});

Graph parseNTriples(std::istream& in, const NTriplesOptions& options = {});
Graph parseNTriples(const std::string& text, const NTriplesOptions& options = {});

/// Parses a single N-Triples term (used by the tab-separated results format).
Term parseNTriplesTerm(const std::string& text);

}  // namespace kgforge::rdf
