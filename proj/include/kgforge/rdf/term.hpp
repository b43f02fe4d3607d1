#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kgforge::rdf {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term: IRI, blank node, or literal. Immutable after construction;
/// the factory functions validate their arguments and throw
/// std::invalid_argument on malformed input.
class Term {
 public:
  static Term iri(std::string value);
  static Term blank(std::string label);
  /// Plain literal (datatype xsd:string).
  static Term literal(std::string lexical);
  static Term literal(std::string lexical, std::string datatype_iri);
  static Term langLiteral(std::string lexical, std::string language);

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::BlankNode; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  /// IRI string, blank-node label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Datatype IRI; empty for non-literals.
  const std::string& datatype() const { return datatype_; }
  /// Language tag; empty unless a language-tagged literal.
  const std::string& language() const { return language_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

/// True iff `s` has a scheme and none of the characters N-Triples forbids
/// unescaped in an IRIREF (whitespace, angle brackets, quotes).
bool isAbsoluteIri(std::string_view s);
/// Blank-node labels are normalized to [A-Za-z0-9_]+.
bool isValidBlankLabel(std::string_view s);
/// BCP-47 shape check: subtags of 1-8 alphanumerics separated by '-'.
bool isValidLanguageTag(std::string_view s);

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Validates: subject is IRI or blank, predicate is IRI.
  Triple(Term s, Term p, Term o);

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const;
};

}  // namespace kgforge::rdf
