#ifndef FGRAPH_HOM_SEARCH_HPP
#define FGRAPH_HOM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fgraph/graph.hpp"

namespace fgraph {

struct HomSearchOptions {
  std::uint64_t budget = 1'000'000;
  /// Prescribed images; the search only emits homs extending these.
  IdMap vertex_pins, edge_pins;
  bool vertex_injective = false;
  bool edge_injective = false;
};

/// Backtracking enumeration of homomorphisms source -> target. Vertices are
/// assigned in id order, edges as soon as their support is fully mapped,
/// which keeps the emission order lexicographic and reproducible. The
/// visitor returns false to stop early. Throws BudgetExceeded when the
/// number of attempted assignments passes the budget.
void for_each_hom(GraphPtr source, GraphPtr target,
                  const HomSearchOptions& opts,
                  const std::function<bool(const Hom&)>& visit);

std::vector<Hom> enumerate_homs(GraphPtr source, GraphPtr target,
                                const HomSearchOptions& opts = {});

std::uint64_t count_homs(GraphPtr source, GraphPtr target,
                         const HomSearchOptions& opts = {});

/// Lexicographically least hom, if any.
std::optional<Hom> find_hom(GraphPtr source, GraphPtr target,
                            const HomSearchOptions& opts = {});

std::optional<Hom> find_iso(GraphPtr a, GraphPtr b,
                            std::uint64_t budget = 1'000'000);

bool isomorphic(GraphPtr a, GraphPtr b, std::uint64_t budget = 1'000'000);

}  // namespace fgraph

#endif
