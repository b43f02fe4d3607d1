#include "kgforge/rdf/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace kgforge::rdf {

namespace {

void escapeLiteral(const std::string& s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", u);
          out += buf;
        } else {
          out.push_back(c);
        }
      }
    }
  }
}

}  // namespace

std::string toNTriples(const Term& t) {
  std::string out;
  switch (t.kind()) {
    case TermKind::Iri:
      out = "<" + t.value() + ">";
      break;
    case TermKind::BlankNode:
      out = "_:" + t.value();
      break;
    case TermKind::Literal:
      out.push_back('"');
      escapeLiteral(t.value(), out);
      out.push_back('"');
      if (!t.language().empty()) {
        out += "@" + t.language();
      } else if (t.datatype() != kXsdString) {
        out += "^^<" + t.datatype() + ">";
      }
      break;
  }
  return out;
}

std::string toNTriples(const Triple& t) {
  return toNTriples(t.subject) + " " + toNTriples(t.predicate) + " " + toNTriples(t.object) +
         " .";
}

std::string serializeCanonical(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g.triples()) lines.push_back(toNTriples(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

void serializeCanonical(const Graph& g, std::ostream& out) { out << serializeCanonical(g); }

}  // namespace kgforge::rdf
