#include "kgforge/rdf/turtle.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kgforge/rdf/vocab.hpp"
#include "kgforge/util/errors.hpp"
#include "kgforge/util/utf8.hpp"

// Whole-document recursive-descent parser. Mapping documents and
// vocabularies are small, so there is no streaming mode here; the N-Triples
// reader is the streaming path for bulk data.

namespace kgforge::rdf {

namespace {

bool isPnChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

// --- relative IRI resolution (scheme/authority/path split, dot-segment
// removal; query/fragment handled as opaque suffixes) ---

struct IriParts {
  std::string scheme_colon;  // "http:"
  std::string authority;     // "//host" or empty
  std::string path;
  std::string suffix;  // "?query#frag" or "#frag" or empty
};

IriParts splitIri(const std::string& iri) {
  IriParts p;
  std::size_t i = iri.find(':');
  p.scheme_colon = iri.substr(0, i + 1);
  std::size_t rest = i + 1;
  if (iri.compare(rest, 2, "//") == 0) {
    std::size_t end = iri.find_first_of("/?#", rest + 2);
    if (end == std::string::npos) {
      p.authority = iri.substr(rest);
      return p;
    }
    p.authority = iri.substr(rest, end - rest);
    rest = end;
  }
  std::size_t q = iri.find_first_of("?#", rest);
  if (q == std::string::npos) {
    p.path = iri.substr(rest);
  } else {
    p.path = iri.substr(rest, q - rest);
    p.suffix = iri.substr(q);
  }
  return p;
}

std::string removeDotSegments(std::string in) {
  std::string out;
  while (!in.empty()) {
    if (in.rfind("../", 0) == 0) {
      in.erase(0, 3);
    } else if (in.rfind("./", 0) == 0) {
      in.erase(0, 2);
    } else if (in.rfind("/./", 0) == 0) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.rfind("/../", 0) == 0 || in == "/..") {
      in = in == "/.." ? "/" : "/" + in.substr(4);
      auto slash = out.find_last_of('/');
      out.erase(slash == std::string::npos ? 0 : slash);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t next = in.find('/', 1);
      out += in.substr(0, next);
      in.erase(0, next == std::string::npos ? in.size() : next);
    }
  }
  return out;
}

std::string resolveIri(const std::string& base, const std::string& ref) {
  if (isAbsoluteIri(ref)) return ref;
  IriParts b = splitIri(base);
  if (ref.empty()) return b.scheme_colon + b.authority + b.path;
  if (ref.rfind("//", 0) == 0) return b.scheme_colon + ref;
  if (ref[0] == '#' || ref[0] == '?') return b.scheme_colon + b.authority + b.path + ref;
  if (ref[0] == '/') return b.scheme_colon + b.authority + removeDotSegments(ref);
  std::string merged;
  if (!b.authority.empty() && b.path.empty()) {
    merged = "/" + ref;
  } else {
    auto slash = b.path.find_last_of('/');
    merged = (slash == std::string::npos ? "" : b.path.substr(0, slash + 1)) + ref;
  }
  return b.scheme_colon + b.authority + removeDotSegments(merged);
}

// --- tokenizer ---

enum class Tok {
  Eof,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  HatHat,
  AtPrefix,
  AtBase,
  LangTag,
  Iri,
  Pname,
  Blank,
  String,
  Integer,
  Decimal,
  Double,
  BoolLit,
  A,
  Unsupported,  // named construct we reject (collections, quoted strings, ...)
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  std::uint64_t line = 1;
  std::uint64_t col = 1;
};

class Lexer {
 public:
  Lexer(std::string text, std::string source) : text_(std::move(text)), source_(std::move(source)) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token take() {
    peek();
    Token t = std::move(*lookahead_);
    lookahead_.reset();
    return t;
  }

  [[noreturn]] void failAt(const Token& t, const std::string& reason) const {
    throw ParseError(source_, t.line, t.col, reason);
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(source_, line_, col_, reason);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char cur() const { return text_[pos_]; }
  char ahead(std::size_t n = 1) const {
    return pos_ + n < text_.size() ? text_[pos_ + n] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipWsAndComments() {
    while (!eof()) {
      char c = cur();
      if (c == '#') {
        while (!eof() && cur() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  std::uint32_t lexUchar() {
    char kind = cur();
    advance();
    int digits = kind == 'u' ? 4 : 8;
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof() || std::isxdigit(static_cast<unsigned char>(cur())) == 0)
        fail("invalid \\u escape: expected hex digit");
      char c = cur();
      cp = cp * 16;
      if (c >= '0' && c <= '9') cp += static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp += static_cast<std::uint32_t>(c - 'a' + 10);
      else cp += static_cast<std::uint32_t>(c - 'A' + 10);
      advance();
    }
    return cp;
  }

  Token make(Tok kind, std::string text, std::uint64_t line, std::uint64_t col) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.line = line;
    t.col = col;
    return t;
  }

  Token lexIri(std::uint64_t line, std::uint64_t col) {
    advance();  // '<'
    std::string iri;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = cur();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (eof() || (cur() != 'u' && cur() != 'U')) fail("invalid escape in IRI");
        auto cp = lexUchar();
        if (!utf8::append(cp, iri)) fail("invalid codepoint in \\u escape");
        continue;
      }
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"') fail("illegal character in IRI");
      iri.push_back(c);
      advance();
    }
    return make(Tok::Iri, std::move(iri), line, col);
  }

  Token lexString(std::uint64_t line, std::uint64_t col) {
    if (ahead(1) == '"' && ahead(2) == '"')
      return make(Tok::Unsupported, "triple-quoted string", line, col);
    advance();  // opening quote
    std::string s;
    while (true) {
      if (eof() || cur() == '\n') fail("unterminated string literal");
      char c = cur();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (eof()) fail("unterminated escape");
        char e = cur();
        switch (e) {
          case 't': s.push_back('\t'); advance(); break;
          case 'b': s.push_back('\b'); advance(); break;
          case 'n': s.push_back('\n'); advance(); break;
          case 'r': s.push_back('\r'); advance(); break;
          case 'f': s.push_back('\f'); advance(); break;
          case '"': s.push_back('"'); advance(); break;
          case '\'': s.push_back('\''); advance(); break;
          case '\\': s.push_back('\\'); advance(); break;
          case 'u':
          case 'U': {
            auto cp = lexUchar();
            if (!utf8::append(cp, s)) fail("invalid codepoint in \\u escape");
            break;
          }
          default: fail(std::string("unknown escape '\\") + e + "' in string");
        }
        continue;
      }
      s.push_back(c);
      advance();
    }
    return make(Tok::String, std::move(s), line, col);
  }

  Token lexNumber(std::uint64_t line, std::uint64_t col) {
    std::string n;
    if (cur() == '+' || cur() == '-') {
      n.push_back(cur());
      advance();
    }
    bool has_dot = false;
    bool has_exp = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(cur())) != 0) {
      n.push_back(cur());
      advance();
    }
    if (!eof() && cur() == '.' && std::isdigit(static_cast<unsigned char>(ahead())) != 0) {
      has_dot = true;
      n.push_back('.');
      advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(cur())) != 0) {
        n.push_back(cur());
        advance();
      }
    }
    if (!eof() && (cur() == 'e' || cur() == 'E')) {
      has_exp = true;
      n.push_back(cur());
      advance();
      if (!eof() && (cur() == '+' || cur() == '-')) {
        n.push_back(cur());
        advance();
      }
      if (eof() || std::isdigit(static_cast<unsigned char>(cur())) == 0)
        fail("malformed exponent in numeric literal");
      while (!eof() && std::isdigit(static_cast<unsigned char>(cur())) != 0) {
        n.push_back(cur());
        advance();
      }
    }
    if (n.empty() || (n.size() == 1 && (n[0] == '+' || n[0] == '-')))
      fail("malformed numeric literal");
    return make(has_exp ? Tok::Double : (has_dot ? Tok::Decimal : Tok::Integer), std::move(n),
                line, col);
  }

  // pname, keyword, or boolean
  Token lexName(std::uint64_t line, std::uint64_t col) {
    std::string name;
    bool has_colon = false;
    while (!eof()) {
      char c = cur();
      if (isPnChar(c) || c == '%') {
        name.push_back(c);
        advance();
      } else if (c == ':' && !has_colon) {
        has_colon = true;
        name.push_back(c);
        advance();
      } else if (c == '.') {
        // a dot is part of the name only when followed by a name char
        if (isPnChar(ahead()) || ahead() == '%') {
          name.push_back(c);
          advance();
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (name.empty()) fail(std::string("unexpected character '") + cur() + "'");
    if (!has_colon) {
      if (name == "a") return make(Tok::A, name, line, col);
      if (name == "true" || name == "false") return make(Tok::BoolLit, name, line, col);
      if (name == "PREFIX" || name == "BASE" || name == "prefix" || name == "base")
        return make(Tok::Unsupported, "SPARQL-style " + name + " directive", line, col);
      fail("unexpected bare name '" + name + "'");
    }
    return make(Tok::Pname, std::move(name), line, col);
  }

  Token lex() {
    skipWsAndComments();
    std::uint64_t line = line_;
    std::uint64_t col = col_;
    if (eof()) return make(Tok::Eof, "", line, col);
    char c = cur();
    switch (c) {
      case '.': advance(); return make(Tok::Dot, ".", line, col);
      case ';': advance(); return make(Tok::Semicolon, ";", line, col);
      case ',': advance(); return make(Tok::Comma, ",", line, col);
      case '[': advance(); return make(Tok::LBracket, "[", line, col);
      case ']': advance(); return make(Tok::RBracket, "]", line, col);
      case '(': advance(); return make(Tok::Unsupported, "RDF collections", line, col);
      case ')': advance(); return make(Tok::Unsupported, "RDF collections", line, col);
      case '<':
        if (ahead() == '<') return make(Tok::Unsupported, "quoted triples", line, col);
        return lexIri(line, col);
      case '"': return lexString(line, col);
      case '\'': return make(Tok::Unsupported, "single-quoted string", line, col);
      case '^':
        if (ahead() == '^') {
          advance();
          advance();
          return make(Tok::HatHat, "^^", line, col);
        }
        advance();
        return make(Tok::Unsupported, "property path '^'", line, col);
      case '@': {
        advance();
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(cur())) != 0 || cur() == '-')) {
          word.push_back(cur());
          advance();
        }
        if (word == "prefix") return make(Tok::AtPrefix, word, line, col);
        if (word == "base") return make(Tok::AtBase, word, line, col);
        return make(Tok::LangTag, std::move(word), line, col);
      }
      case '_':
        if (ahead() == ':') {
          advance();
          advance();
          std::string label;
          while (!eof() && (isPnChar(cur()) || cur() == '.')) {
            label.push_back(cur());
            advance();
          }
          while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;  // give the dot back to the statement
            --col_;
          }
          if (label.empty()) fail("empty blank-node label");
          return make(Tok::Blank, std::move(label), line, col);
        }
        return lexName(line, col);
      default:
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-')
          return lexNumber(line, col);
        return lexName(line, col);
    }
  }

  std::string text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::uint64_t line_ = 1;
  std::uint64_t col_ = 1;
  std::optional<Token> lookahead_;
};

// --- parser ---

class Parser {
 public:
  Parser(std::string text, const TurtleOptions& options)
      : lexer_(std::move(text), options.source_name),
        source_(options.source_name),
        blank_prefix_(options.blank_prefix),
        base_(options.base) {}

  TurtleResult run() {
    while (true) {
      const Token& t = lexer_.peek();
      if (t.kind == Tok::Eof) break;
      if (t.kind == Tok::AtPrefix) {
        directivePrefix();
      } else if (t.kind == Tok::AtBase) {
        directiveBase();
      } else {
        triples();
      }
    }
    return std::move(result_);
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    Token t = lexer_.take();
    rejectUnsupported(t);
    if (t.kind != kind) lexer_.failAt(t, "expected " + what);
    return t;
  }

  void rejectUnsupported(const Token& t) {
    if (t.kind == Tok::Unsupported)
      lexer_.failAt(t, "unsupported construct: " + t.text);
  }

  void directivePrefix() {
    lexer_.take();
    Token name = expect(Tok::Pname, "prefix name ending in ':'");
    if (name.text.back() != ':')
      lexer_.failAt(name, "prefix declaration must end with ':'");
    Token iri = expect(Tok::Iri, "namespace IRI");
    std::string ns = resolveAgainstBase(iri);
    expect(Tok::Dot, "'.' after @prefix directive");
    result_.prefixes.set(name.text.substr(0, name.text.size() - 1), ns);
  }

  void directiveBase() {
    lexer_.take();
    Token iri = expect(Tok::Iri, "base IRI");
    std::string resolved = resolveAgainstBase(iri);
    if (!isAbsoluteIri(resolved)) lexer_.failAt(iri, "@base IRI must be absolute");
    base_ = resolved;
    expect(Tok::Dot, "'.' after @base directive");
  }

  std::string resolveAgainstBase(const Token& iriTok) {
    if (isAbsoluteIri(iriTok.text)) return iriTok.text;
    if (base_.empty())
      lexer_.failAt(iriTok, "relative IRI <" + iriTok.text + "> without a base");
    return resolveIri(base_, iriTok.text);
  }

  Term iriFromToken(const Token& t) {
    std::string value = resolveAgainstBase(t);
    if (!isAbsoluteIri(value))
      lexer_.failAt(t, "not an absolute IRI after resolution: <" + value + ">");
    return Term::iri(std::move(value));
  }

  Term pnameToTerm(const Token& t) {
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    auto ns = result_.prefixes.namespaceFor(prefix);
    if (!ns) lexer_.failAt(t, "undeclared prefix '" + prefix + ":'");
    std::string iri = *ns + t.text.substr(colon + 1);
    if (!isAbsoluteIri(iri))
      lexer_.failAt(t, "prefixed name expands to a non-absolute IRI: " + iri);
    return Term::iri(std::move(iri));
  }

  Term labeledBlank(const Token& t) {
    auto it = blank_map_.find(t.text);
    if (it != blank_map_.end()) return Term::blank(it->second);
    std::string base = blank_prefix_;
    for (char c : t.text)
      base += (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_') ? c : '_';
    // keep out of the b<N> space reserved for anonymous nodes
    std::string anon_shaped = base.substr(blank_prefix_.size());
    if (anon_shaped.size() >= 2 && anon_shaped[0] == 'b' &&
        anon_shaped.find_first_not_of("0123456789", 1) == std::string::npos)
      base += "_";
    std::string label = base;
    while (!used_labels_.insert(label).second) label += "_";
    blank_map_.emplace(t.text, label);
    return Term::blank(label);
  }

  Term freshBlank() {
    std::string label = blank_prefix_ + "b" + std::to_string(anon_counter_++);
    used_labels_.insert(label);
    return Term::blank(label);
  }

  void emit(Term s, Term p, Term o) {
    result_.graph.insert(Triple(std::move(s), std::move(p), std::move(o)));
  }

  Term parseLiteral(Token stringTok) {
    const Token& next = lexer_.peek();
    if (next.kind == Tok::HatHat) {
      lexer_.take();
      Token dt = lexer_.take();
      rejectUnsupported(dt);
      if (dt.kind != Tok::Iri && dt.kind != Tok::Pname)
        lexer_.failAt(dt, "expected datatype IRI");
      Term dtTerm = dt.kind == Tok::Iri ? iriFromToken(dt) : pnameToTerm(dt);
      if (dtTerm.value() == kLangString)
        lexer_.failAt(dt, "langString literal requires a language tag, not ^^");
      return Term::literal(std::move(stringTok.text), dtTerm.value());
    }
    if (next.kind == Tok::LangTag) {
      Token lang = lexer_.take();
      if (!isValidLanguageTag(lang.text))
        lexer_.failAt(lang, "invalid language tag '@" + lang.text + "'");
      return Term::langLiteral(std::move(stringTok.text), lang.text);
    }
    return Term::literal(std::move(stringTok.text));
  }

  // subject (or object) position; blankNodePropertyList allowed
  Term parseNode(bool allow_literal) {
    Token t = lexer_.take();
    rejectUnsupported(t);
    switch (t.kind) {
      case Tok::Iri: return iriFromToken(t);
      case Tok::Pname: return pnameToTerm(t);
      case Tok::Blank: return labeledBlank(t);
      case Tok::LBracket: {
        Term node = freshBlank();
        if (lexer_.peek().kind != Tok::RBracket) predicateObjectList(node);
        expect(Tok::RBracket, "']' closing blank node");
        return node;
      }
      case Tok::String:
        if (!allow_literal) lexer_.failAt(t, "literal not allowed as subject");
        return parseLiteral(std::move(t));
      case Tok::Integer:
        if (!allow_literal) lexer_.failAt(t, "literal not allowed as subject");
        return Term::literal(t.text, std::string(vocab::xsd_integer));
      case Tok::Decimal:
        if (!allow_literal) lexer_.failAt(t, "literal not allowed as subject");
        return Term::literal(t.text, std::string(vocab::xsd_decimal));
      case Tok::Double:
        if (!allow_literal) lexer_.failAt(t, "literal not allowed as subject");
        return Term::literal(t.text, std::string(vocab::xsd_double));
      case Tok::BoolLit:
        if (!allow_literal) lexer_.failAt(t, "literal not allowed as subject");
        return Term::literal(t.text, std::string(vocab::xsd_boolean));
      case Tok::A:
        lexer_.failAt(t, "'a' is only valid in the predicate position");
      default:
        lexer_.failAt(t, "expected an RDF term");
    }
  }

  Term parseVerb() {
    Token t = lexer_.take();
    rejectUnsupported(t);
    if (t.kind == Tok::A) return Term::iri(std::string(vocab::rdf_type));
    if (t.kind == Tok::Iri) return iriFromToken(t);
    if (t.kind == Tok::Pname) return pnameToTerm(t);
    lexer_.failAt(t, "expected predicate IRI or 'a'");
  }

  void objectList(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = parseNode(/*allow_literal=*/true);
      emit(subject, predicate, object);
      if (lexer_.peek().kind == Tok::Comma) {
        lexer_.take();
        continue;
      }
      break;
    }
  }

  void predicateObjectList(const Term& subject) {
    while (true) {
      Term predicate = parseVerb();
      objectList(subject, predicate);
      if (lexer_.peek().kind == Tok::Semicolon) {
        while (lexer_.peek().kind == Tok::Semicolon) lexer_.take();
        // a ';' may be trailing
        auto k = lexer_.peek().kind;
        if (k == Tok::Dot || k == Tok::RBracket || k == Tok::Eof) break;
        continue;
      }
      break;
    }
  }

  void triples() {
    const Token& t = lexer_.peek();
    rejectUnsupported(t);
    if (t.kind == Tok::LBracket) {
      // blankNodePropertyList subject; predicate list afterwards is optional
      Token lb = lexer_.take();
      Term node = freshBlank();
      bool inner = lexer_.peek().kind != Tok::RBracket;
      if (inner) predicateObjectList(node);
      expect(Tok::RBracket, "']' closing blank node");
      if (lexer_.peek().kind != Tok::Dot) {
        predicateObjectList(node);
      } else if (!inner) {
        lexer_.failAt(lb, "empty blank node statement");
      }
      expect(Tok::Dot, "'.' terminating the statement");
      return;
    }
    Term subject = parseNode(/*allow_literal=*/false);
    predicateObjectList(subject);
    expect(Tok::Dot, "'.' terminating the statement");
  }

  Lexer lexer_;
  std::string source_;
  std::string blank_prefix_;
  std::string base_;
  TurtleResult result_;
  std::unordered_map<std::string, std::string> blank_map_;
  std::unordered_set<std::string> used_labels_;
  std::uint64_t anon_counter_ = 0;
};

}  // namespace

TurtleResult parseTurtle(std::istream& in, const TurtleOptions& options) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parser(buf.str(), options).run();
}

TurtleResult parseTurtle(const std::string& text, const TurtleOptions& options) {
  return Parser(text, options).run();
}

}  // namespace kgforge::rdf
