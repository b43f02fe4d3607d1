#include "kgforge/rdf/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kgforge::rdf {

namespace {

const std::vector<std::uint32_t>* lookup(const std::unordered_map<Term, std::vector<std::uint32_t>, TermHash>& idx,
                                         const Term& t) {
  auto it = idx.find(t);
  return it == idx.end() ? nullptr : &it->second;
}

const std::vector<std::uint32_t> kEmpty{};

}  // namespace

const std::vector<std::uint32_t>* Graph::groundCandidates(const Triple& t) const {
  const auto* s = lookup(by_subject_, t.subject);
  if (!s) return &kEmpty;
  const auto* p = lookup(by_predicate_, t.predicate);
  if (!p) return &kEmpty;
  const auto* o = lookup(by_object_, t.object);
  if (!o) return &kEmpty;
  const auto* best = s;
  if (p->size() < best->size()) best = p;
  if (o->size() < best->size()) best = o;
  return best;
}

bool Graph::contains(const Triple& t) const {
  for (auto i : *groundCandidates(t)) {
    if (triples_[i] == t) return true;
  }
  return false;
}

bool Graph::insert(Triple t) {
  if (contains(t)) return false;
  if (triples_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("graph capacity exceeded");
  auto idx = static_cast<std::uint32_t>(triples_.size());
  by_subject_[t.subject].push_back(idx);
  by_predicate_[t.predicate].push_back(idx);
  by_object_[t.object].push_back(idx);
  triples_.push_back(std::move(t));
  return true;
}

void Graph::merge(const Graph& other) {
  for (const auto& t : other.triples_) insert(t);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  forEachMatch(s, p, o, [&](const Triple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

void Graph::forEachMatch(const std::optional<Term>& s, const std::optional<Term>& p,
                         const std::optional<Term>& o,
                         const std::function<bool(const Triple&)>& fn) const {
  auto agrees = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
  };

  const std::vector<std::uint32_t>* best = nullptr;
  auto consider = [&](const Index& idx, const std::optional<Term>& key) {
    if (!key) return false;
    const auto* c = lookup(idx, *key);
    if (!c) {
      best = &kEmpty;
      return true;  // bound position absent from the graph: no matches at all
    }
    if (!best || c->size() < best->size()) best = c;
    return false;
  };
  if (consider(by_subject_, s) || consider(by_predicate_, p) || consider(by_object_, o)) return;

  if (best) {
    for (auto i : *best) {
      if (agrees(triples_[i]) && !fn(triples_[i])) return;
    }
    return;
  }
  for (const auto& t : triples_) {
    if (!fn(t)) return;
  }
}

std::size_t Graph::subjectCount(const Term& t) const {
  const auto* c = lookup(by_subject_, t);
  return c ? c->size() : 0;
}

std::size_t Graph::predicateCount(const Term& t) const {
  const auto* c = lookup(by_predicate_, t);
  return c ? c->size() : 0;
}

std::size_t Graph::objectCount(const Term& t) const {
  const auto* c = lookup(by_object_, t);
  return c ? c->size() : 0;
}

Graph Graph::clone() const {
  Graph g;
  g.triples_ = triples_;
  g.by_subject_ = by_subject_;
  g.by_predicate_ = by_predicate_;
  g.by_object_ = by_object_;
  return g;
}

}  // namespace kgforge::rdf
