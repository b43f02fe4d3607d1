#include "kgforge/rdf/term.hpp"

#include <cctype>
#include <stdexcept>

namespace kgforge::rdf {

namespace {

bool isSchemeStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool isSchemeChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

std::size_t hashCombine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool isAbsoluteIri(std::string_view s) {
  if (s.empty() || !isSchemeStart(s[0])) return false;
  std::size_t colon = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == ':') {
      colon = i;
      break;
    }
    if (!isSchemeChar(s[i])) return false;
  }
  if (colon == std::string_view::npos) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"') return false;
  }
  return true;
}

bool isValidBlankLabel(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

bool isValidLanguageTag(std::string_view s) {
  if (s.empty()) return false;
  std::size_t run = 0;
  bool first_subtag = true;
  for (char c : s) {
    if (c == '-') {
      if (run == 0) return false;
      run = 0;
      first_subtag = false;
      continue;
    }
    bool ok = first_subtag ? std::isalpha(static_cast<unsigned char>(c)) != 0
                           : std::isalnum(static_cast<unsigned char>(c)) != 0;
    if (!ok) return false;
    if (++run > 8) return false;
  }
  return run > 0;
}

Term Term::iri(std::string value) {
  if (!isAbsoluteIri(value)) throw std::invalid_argument("not an absolute IRI: " + value);
  return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (!isValidBlankLabel(label)) throw std::invalid_argument("invalid blank-node label: " + label);
  return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::Literal, std::move(lexical), std::string(kXsdString), {});
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
  if (datatype_iri == kLangString)
    throw std::invalid_argument("language-string literal requires a language tag");
  if (!isAbsoluteIri(datatype_iri))
    throw std::invalid_argument("literal datatype is not an absolute IRI: " + datatype_iri);
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri), {});
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (!isValidLanguageTag(language))
    throw std::invalid_argument("invalid language tag: " + language);
  return Term(TermKind::Literal, std::move(lexical), std::string(kLangString),
              std::move(language));
}

std::size_t TermHash::operator()(const Term& t) const {
  std::hash<std::string> h;
  std::size_t seed = static_cast<std::size_t>(t.kind());
  seed = hashCombine(seed, h(t.value()));
  seed = hashCombine(seed, h(t.datatype()));
  seed = hashCombine(seed, h(t.language()));
  return seed;
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.isLiteral()) throw std::invalid_argument("triple subject cannot be a literal");
  if (!predicate.isIri()) throw std::invalid_argument("triple predicate must be an IRI");
}

std::size_t TripleHash::operator()(const Triple& t) const {
  TermHash h;
  std::size_t seed = h(t.subject);
  seed = hashCombine(seed, h(t.predicate));
  return hashCombine(seed, h(t.object));
}

}  // namespace kgforge::rdf
