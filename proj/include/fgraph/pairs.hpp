#ifndef FGRAPH_PAIRS_HPP
#define FGRAPH_PAIRS_HPP

#include <map>
#include <utility>
#include <vector>

#include "fgraph/ids.hpp"

namespace fgraph {

/// "(a,b)" / "(a,b,c)": the id format for composite carriers (relation
/// pairs, product tuples). Readable rather than escape proof; inputs with
/// ids containing the delimiters are the user's own adventure.
inline ElementId tuple_id(const std::vector<ElementId>& parts) {
  ElementId out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

inline ElementId pair_id(const ElementId& a, const ElementId& b) {
  return tuple_id({a, b});
}

/// "(a|b)": cofree-style edge ids pairing a color with a rendered value.
inline ElementId barred_id(const ElementId& a, const ElementId& b) {
  return "(" + a + "|" + b + ")";
}

/// A set of pairs materialized as ids, with the two projections.
struct PairContext {
  FiniteSet ids;
  IdMap first, second;
  std::map<ElementId, std::pair<ElementId, ElementId>> decode;

  const ElementId& id_of(const ElementId& a, const ElementId& b) const {
    static const ElementId missing{};
    auto it = lookup.find({a, b});
    return it == lookup.end() ? missing : it->second;
  }

  std::map<std::pair<ElementId, ElementId>, ElementId> lookup;
};

inline PairContext make_pair_context(
    const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  PairContext ctx;
  std::vector<ElementId> ids;
  for (const auto& [a, b] : pairs) {
    ElementId id = pair_id(a, b);
    if (ctx.decode.emplace(id, std::make_pair(a, b)).second) {
      ids.push_back(id);
      ctx.first[id] = a;
      ctx.second[id] = b;
      ctx.lookup[{a, b}] = id;
    }
  }
  ctx.ids = FiniteSet(std::move(ids));
  return ctx;
}

}  // namespace fgraph

#endif
