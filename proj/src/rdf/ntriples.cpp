#include "kgforge/rdf/ntriples.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kgforge/util/errors.hpp"
#include "kgforge/util/utf8.hpp"

namespace kgforge::rdf {

namespace {

bool isHex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

std::uint32_t hexValue(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<std::uint32_t>(c - 'a' + 10);
  return static_cast<std::uint32_t>(c - 'A' + 10);
}

/// Maps source blank-node labels to normalized ones. Distinct source labels
/// always map to distinct outputs, so sanitizing cannot merge nodes.
class BlankAllocator {
 public:
  explicit BlankAllocator(std::string prefix) : prefix_(std::move(prefix)) {}

  std::string labelFor(const std::string& source) {
    auto it = map_.find(source);
    if (it != map_.end()) return it->second;
    std::string base = prefix_;
    for (char c : source) {
      base += (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_') ? c : '_';
    }
    if (base.empty()) base = "b";
    std::string label = base;
    while (!used_.insert(label).second) label += "_";
    map_.emplace(source, label);
    return label;
  }

 private:
  std::string prefix_;
  std::unordered_map<std::string, std::string> map_;
  std::unordered_set<std::string> used_;
};

class LineParser {
 public:
  LineParser(const std::string& line, std::uint64_t lineno, const std::string& source,
             BlankAllocator& blanks)
      : line_(line), lineno_(lineno), source_(source), blanks_(blanks) {}

  // nullopt for blank / comment-only lines.
  std::optional<Triple> parse() {
    skipWs();
    if (eof() || peek() == '#') return std::nullopt;
    Term s = parseSubject();
    skipWs();
    Term p = parseIriRef("predicate");
    skipWs();
    Term o = parseObject();
    skipWs();
    expect('.', "expected '.' terminating the triple");
    skipWs();
    if (!eof() && peek() != '#') fail("trailing content after '.'");
    return Triple(std::move(s), std::move(p), std::move(o));
  }

 private:
  bool eof() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  char take() { return line_[pos_++]; }

  void skipWs() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void expect(char c, const std::string& msg) {
    if (eof() || take() != c) fail(msg);
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(source_, lineno_, pos_ + 1, reason);
  }

  std::uint32_t parseUchar() {
    // caller consumed the backslash; next is 'u' or 'U'
    char kind = take();
    int digits = kind == 'u' ? 4 : 8;
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof() || !isHex(peek())) fail("invalid \\u escape: expected hex digit");
      cp = cp * 16 + hexValue(take());
    }
    return cp;
  }

  Term parseIriRef(const char* role) {
    if (eof() || peek() != '<') fail(std::string("expected IRI for ") + role);
    ++pos_;
    std::string iri;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = take();
      if (c == '>') break;
      if (c == '\\') {
        if (eof() || (peek() != 'u' && peek() != 'U')) fail("invalid escape in IRI");
        auto cp = parseUchar();
        if (!utf8::append(cp, iri)) fail("invalid codepoint in \\u escape");
        continue;
      }
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"') fail("illegal character in IRI");
      iri.push_back(c);
    }
    if (!isAbsoluteIri(iri)) fail("not an absolute IRI: <" + iri + ">");
    return Term::iri(std::move(iri));
  }

  Term parseBlank() {
    pos_ += 2;  // "_:"
    std::string label;
    while (!eof()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.') {
        label.push_back(take());
      } else {
        break;
      }
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;  // a trailing dot belongs to the statement terminator
    }
    if (label.empty()) fail("empty blank-node label");
    return Term::blank(blanks_.labelFor(label));
  }

  Term parseSubject() {
    if (!eof() && peek() == '_' && pos_ + 1 < line_.size() && line_[pos_ + 1] == ':')
      return parseBlank();
    return parseIriRef("subject");
  }

  std::string parseQuotedString() {
    ++pos_;  // opening quote
    std::string s;
    while (true) {
      if (eof()) fail("unterminated literal");
      char c = take();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated escape in literal");
        char e = take();
        switch (e) {
          case 't': s.push_back('\t'); break;
          case 'b': s.push_back('\b'); break;
          case 'n': s.push_back('\n'); break;
          case 'r': s.push_back('\r'); break;
          case 'f': s.push_back('\f'); break;
          case '"': s.push_back('"'); break;
          case '\'': s.push_back('\''); break;
          case '\\': s.push_back('\\'); break;
          case 'u':
          case 'U': {
            --pos_;
            auto cp = parseUchar();
            if (!utf8::append(cp, s)) fail("invalid codepoint in \\u escape");
            break;
          }
          default: fail(std::string("unknown escape '\\") + e + "' in literal");
        }
        continue;
      }
      s.push_back(c);
    }
    return s;
  }

  Term parseLiteral() {
    std::string lexical = parseQuotedString();
    if (!eof() && peek() == '^') {
      ++pos_;
      expect('^', "expected '^^' before datatype IRI");
      Term dt = parseIriRef("datatype");
      if (dt.value() == kLangString) fail("langString literal requires @tag, not ^^ datatype");
      return Term::literal(std::move(lexical), dt.value());
    }
    if (!eof() && peek() == '@') {
      ++pos_;
      std::string tag;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '-'))
        tag.push_back(take());
      if (!isValidLanguageTag(tag)) fail("invalid language tag '@" + tag + "'");
      return Term::langLiteral(std::move(lexical), std::move(tag));
    }
    return Term::literal(std::move(lexical));
  }

  Term parseObject() {
    if (eof()) fail("expected object term");
    char c = peek();
    if (c == '<') return parseIriRef("object");
    if (c == '"') return parseLiteral();
    if (c == '_' && pos_ + 1 < line_.size() && line_[pos_ + 1] == ':') return parseBlank();
    fail("expected IRI, blank node, or literal as object");
  }

  const std::string& line_;
  std::size_t pos_ = 0;
  std::uint64_t lineno_;
  const std::string& source_;
  BlankAllocator& blanks_;
};

}  // namespace

void parseNTriples(std::istream& in, const std::function<void(Triple&&)>& sink,
                   const NTriplesOptions& options) {
  BlankAllocator blanks(options.blank_prefix);
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser parser(line, lineno, options.source_name, blanks);
    if (auto t = parser.parse()) sink(std::move(*t));
  }
}

Graph parseNTriples(std::istream& in, const NTriplesOptions& options) {
  Graph g;
  parseNTriples(in, [&](Triple&& t) { g.insert(std::move(t)); }, options);
  return g;
}

Graph parseNTriples(const std::string& text, const NTriplesOptions& options) {
  std::istringstream in(text);
  return parseNTriples(in, options);
}

Term parseNTriplesTerm(const std::string& text) {
  // Reuse the line machinery by parsing "X <urn:p> <urn:o> ." when X is a
  // subject-shaped term, else "<urn:s> <urn:p> X .".
  bool subject_shaped = !text.empty() && text[0] != '"';
  std::string line =
      subject_shaped ? text + " <urn:p:x> <urn:o:x> ." : "<urn:s:x> <urn:p:x> " + text + " .";
  Graph g = parseNTriples(line, {.blank_prefix = "", .source_name = "term"});
  if (g.size() != 1) throw ParseError("term", 1, 1, "not a single term: " + text);
  return subject_shaped ? g.triples()[0].subject : g.triples()[0].object;
}

}  // namespace kgforge::rdf
