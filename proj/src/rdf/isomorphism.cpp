#include "kgforge/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgforge/rdf/serialize.hpp"
#include "kgforge/util/errors.hpp"

namespace kgforge::rdf {

namespace {

bool hasBlank(const Triple& t) { return t.subject.isBlank() || t.object.isBlank(); }

// Blank-insensitive rendering used for signatures and for comparing the
// blank-carrying remainder under a candidate mapping.
std::string skeleton(const Triple& t, const std::string& s_slot, const std::string& o_slot) {
  std::string line = t.subject.isBlank() ? "_:" + s_slot : toNTriples(t.subject);
  line += " " + toNTriples(t.predicate) + " ";
  line += t.object.isBlank() ? "_:" + o_slot : toNTriples(t.object);
  return line;
}

struct BlankInfo {
  std::vector<std::size_t> triple_ids;
  std::string signature;  // sorted skeletons with this node as '*', others as '?'
};

class Side {
 public:
  explicit Side(const Graph& g) {
    for (const auto& t : g.triples()) {
      if (hasBlank(t)) {
        blank_triples.push_back(t);
      } else {
        ground.push_back(toNTriples(t));
      }
    }
    std::sort(ground.begin(), ground.end());
    for (std::size_t i = 0; i < blank_triples.size(); ++i) {
      const auto& t = blank_triples[i];
      if (t.subject.isBlank()) nodes[t.subject.value()].triple_ids.push_back(i);
      if (t.object.isBlank() && !(t.subject.isBlank() && t.subject == t.object))
        nodes[t.object.value()].triple_ids.push_back(i);
    }
    for (auto& [label, info] : nodes) {
      std::vector<std::string> lines;
      for (auto id : info.triple_ids) {
        const auto& t = blank_triples[id];
        std::string s_slot = t.subject.isBlank() ? (t.subject.value() == label ? "*" : "?") : "";
        std::string o_slot = t.object.isBlank() ? (t.object.value() == label ? "*" : "?") : "";
        lines.push_back(skeleton(t, s_slot, o_slot));
      }
      std::sort(lines.begin(), lines.end());
      for (const auto& l : lines) info.signature += l + "\n";
    }
  }

  std::vector<std::string> ground;
  std::vector<Triple> blank_triples;
  std::map<std::string, BlankInfo> nodes;  // label -> info, ordered for determinism
};

/// Renders all blank-carrying triples of `side` under `mapping` and compares
/// against the target's own labels.
bool remainderMatches(const Side& a, const Side& b,
                      const std::unordered_map<std::string, std::string>& mapping) {
  std::vector<std::string> left;
  left.reserve(a.blank_triples.size());
  for (const auto& t : a.blank_triples) {
    std::string s_slot = t.subject.isBlank() ? mapping.at(t.subject.value()) : "";
    std::string o_slot = t.object.isBlank() ? mapping.at(t.object.value()) : "";
    left.push_back(skeleton(t, s_slot, o_slot));
  }
  std::vector<std::string> right;
  right.reserve(b.blank_triples.size());
  for (const auto& t : b.blank_triples) {
    right.push_back(skeleton(t, t.subject.isBlank() ? t.subject.value() : "",
                             t.object.isBlank() ? t.object.value() : ""));
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
  if (a.size() != b.size()) return false;
  Side sa(a);
  Side sb(b);
  if (sa.ground != sb.ground) return false;
  if (sa.nodes.size() != sb.nodes.size()) return false;
  if (sa.blank_triples.size() != sb.blank_triples.size()) return false;
  if (sa.nodes.empty()) return true;

  if (sa.nodes.size() > options.max_blank_nodes)
    throw ResourceLimitError("isomorphism: blank-node count " + std::to_string(sa.nodes.size()) +
                             " exceeds the configured bound of " +
                             std::to_string(options.max_blank_nodes));

  // candidates by equal signature
  std::unordered_map<std::string, std::vector<std::string>> by_signature;
  for (const auto& [label, info] : sb.nodes) by_signature[info.signature].push_back(label);
  std::vector<std::pair<std::string, std::vector<std::string>>> order;
  for (const auto& [label, info] : sa.nodes) {
    auto it = by_signature.find(info.signature);
    if (it == by_signature.end()) return false;
    order.emplace_back(label, it->second);
  }
  // most constrained first
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });

  std::unordered_map<std::string, std::string> mapping;
  std::unordered_map<std::string, bool> taken;
  std::size_t steps = 0;

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (++steps > options.max_steps)
      throw ResourceLimitError("isomorphism: candidate search exceeded step bound");
    if (i == order.size()) return remainderMatches(sa, sb, mapping);
    const auto& [label, candidates] = order[i];
    for (const auto& c : candidates) {
      if (taken[c]) continue;
      taken[c] = true;
      mapping[label] = c;
      if (assign(i + 1)) return true;
      taken[c] = false;
      mapping.erase(label);
    }
    return false;
  };
  return assign(0);
}

}  // namespace kgforge::rdf
