#ifndef FGRAPH_LIMITS_HPP
#define FGRAPH_LIMITS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fgraph/graph.hpp"

namespace fgraph {

struct CoproductResult {
  GraphPtr graph;
  std::vector<Hom> injections;
};

/// Tagged disjoint union; part i contributes ids "i:x".
CoproductResult coproduct(const std::vector<GraphPtr>& parts);

struct CoequalizerResult {
  GraphPtr graph;
  Hom projection;
};

/// Quotient of the common target by the equivalence pair generated by
/// {(f(e), g(e))} and {(f(v), g(v))}.
CoequalizerResult coequalize(const Hom& f, const Hom& g);

struct PushoutResult {
  GraphPtr graph;
  Hom from_left, from_right;  // legs A -> P and B -> P
};

/// Coproduct of the feet glued along the span: f: S -> A, g: S -> B.
PushoutResult pushout(const Hom& f, const Hom& g);

SubgraphHandle union_of_subgraphs(const std::vector<SubgraphHandle>& handles);
SubgraphHandle intersection_of_subgraphs(
    const std::vector<SubgraphHandle>& handles);

/// Largest subgraph inside the bounds: keeps every bound vertex and the
/// bound edges whose support stays inside the bound vertices.
SubgraphHandle cogenerated_subgraph(GraphPtr g, const FiniteSet& edge_bound,
                                    const FiniteSet& vertex_bound);

/// Smallest subgraph containing the seeds: adds the supports of seed edges.
SubgraphHandle generated_subgraph(GraphPtr g, const FiniteSet& edge_seed,
                                  const FiniteSet& vertex_seed);

SubgraphHandle edge_induced(GraphPtr g, const ElementId& edge);

/// Every subgraph of a fixed parent, closed under union and intersection.
struct SubgraphLattice {
  GraphPtr parent;
  std::vector<SubgraphHandle> elements;  // sorted by (vertices, edges)

  std::size_t index_of(const SubgraphHandle& h) const;
  std::size_t join_index(std::size_t a, std::size_t b) const;
  std::size_t meet_index(std::size_t a, std::size_t b) const;
  std::size_t top_index() const;
  std::size_t bottom_index() const;
};

SubgraphLattice subgraph_lattice(GraphPtr g,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// One vertex "*", one edge "(*|w)" per value w of F({*}).
GraphPtr terminal_graph(const FunctorSpec& spec,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// The unique hom into the terminal graph.
Hom terminal_hom(GraphPtr g, std::uint64_t cap = kDefaultEnumerationCap);

struct ProductResult {
  GraphPtr graph;
  std::vector<Hom> projections;
  // product edge id -> (factor edges, structure witness)
  std::map<ElementId, std::pair<std::vector<ElementId>, Value>> edge_decode;
  std::map<ElementId, std::vector<ElementId>> vertex_decode;
};

/// Vertices are tuples "(a,b)"; edges are pairs of an edge tuple and a
/// witness w in F(product vertices) projecting onto each factor's value.
ProductResult product(const std::vector<GraphPtr>& parts,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// The unique mediating hom of a cone into the product.
Hom mediate_product_cone(const ProductResult& prod,
                         const std::vector<Hom>& legs);

struct EqualizerResult {
  SubgraphHandle subgraph;
  Hom inclusion;
};

/// Subgraph of the common source cogenerated by the carrierwise agreement
/// sets of the parallel homs.
EqualizerResult equalize(const std::vector<Hom>& parallel);

/// Pullback of a subgraph along a hom, with witness-checked edges.
SubgraphHandle preimage(const Hom& phi, const SubgraphHandle& target_sub,
                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace fgraph

#endif
