#pragma once

#include <istream>
#include <string>

#include "kgforge/rdf/graph.hpp"
#include "kgforge/rdf/prefix_map.hpp"

namespace kgforge::rdf {

struct TurtleOptions {
  /// Prepended to every blank-node label (see NTriplesOptions).
  std::string blank_prefix;
  std::string source_name = "turtle";
  /// Initial base IRI for resolving relative IRIs; may be overridden by @base.
  std::string base;
};

struct TurtleResult {
  Graph graph;
  PrefixMap prefixes;
};

/// Turtle subset reader: @prefix/@base, 'a', ';' and ',' lists, anonymous and
/// labeled blank nodes, typed and language-tagged literals, numeric and
/// boolean shorthand. Collections and other full-Turtle constructs are
/// rejected with the construct named in the error. Anonymous blank nodes get
/// labels b0, b1, ... in document order.
TurtleResult parseTurtle(std::istream& in, const TurtleOptions& options = {});
TurtleResult parseTurtle(const std::string& text, const TurtleOptions& options = {});

}  // namespace kgforge::rdf
