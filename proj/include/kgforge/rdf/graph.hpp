#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kgforge/rdf/term.hpp"

namespace kgforge::rdf {

/// In-memory triple set with per-position indexes. Insertion keeps set
/// semantics (duplicates are rejected); insertion order is retained for
/// iteration. Safe for concurrent reads once construction is done.
class Graph {
 public:
  Graph() = default;
  Graph(Graph&&) = default;
  Graph& operator=(Graph&&) = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  /// Returns false if the triple was already present.
  bool insert(Triple t);
  void merge(const Graph& other);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const;

  const std::vector<Triple>& triples() const { return triples_; }

  /// Triples agreeing with every bound position. Uses the most selective
  /// index among the bound positions; unbound everywhere scans all.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Callback form of match; return false from the callback to stop early.
  void forEachMatch(const std::optional<Term>& s, const std::optional<Term>& p,
                    const std::optional<Term>& o,
                    const std::function<bool(const Triple&)>& fn) const;

  std::size_t distinctSubjects() const { return by_subject_.size(); }
  std::size_t distinctPredicates() const { return by_predicate_.size(); }
  std::size_t distinctObjects() const { return by_object_.size(); }

  /// Number of triples with the given term at the given position (0 if absent).
  std::size_t subjectCount(const Term& t) const;
  std::size_t predicateCount(const Term& t) const;
  std::size_t objectCount(const Term& t) const;

  Graph clone() const;

 private:
  using Index = std::unordered_map<Term, std::vector<std::uint32_t>, TermHash>;

  /// Smallest exact-match candidate list for a fully ground triple.
  const std::vector<std::uint32_t>* groundCandidates(const Triple& t) const;

  std::vector<Triple> triples_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
};

}  // namespace kgforge::rdf
