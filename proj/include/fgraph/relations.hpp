#ifndef FGRAPH_RELATIONS_HPP
#define FGRAPH_RELATIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fgraph/graph.hpp"

namespace fgraph {

/// A relation between the carriers of two graphs: one set of edge pairs,
/// one set of vertex pairs, both kept sorted and duplicate free.
struct RelationPair {
  GraphPtr left, right;
  std::vector<std::pair<ElementId, ElementId>> edge_pairs;
  std::vector<std::pair<ElementId, ElementId>> vertex_pairs;

  void normalize();

  static RelationPair diagonal(GraphPtr g);
  static RelationPair full(GraphPtr a, GraphPtr b);
  /// All pairs identified by phi, on both carriers (includes the diagonal).
  static RelationPair from_kernel(const Hom& phi);
};

/// A relation pair together with a witness structure map that makes the
/// pair set a graph whose two projections are homs; the graph analogue of
/// a bisimulation. Pair vertices carry ids "(v,w)".
struct GraphRelation {
  RelationPair pair;
  std::map<std::pair<ElementId, ElementId>, Value> witness;
  GraphPtr graph;
  Hom left_projection, right_projection;
};

struct RelationVerdict {
  std::optional<GraphRelation> relation;
  // first edge pair (id order) with no witness value
  std::optional<std::pair<ElementId, ElementId>> failing_edge_pair;
};

/// Searches a witness for every edge pair over the functor applied to the
/// vertex-pair set; the witness picked per pair is the least one.
RelationVerdict is_graph_relation(const RelationPair& pair,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// The graph of a hom: pairs (x, phi(x)) with the transported structure.
GraphRelation graph_of_hom(const Hom& phi);

/// Pairwise images of two homs sharing a source.
GraphRelation relation_from_hom_pair(const Hom& f, const Hom& g);

/// Largest graph relation inside the bounds: all bound vertex pairs (they
/// carry no obligations) plus every bound edge pair that has a witness.
GraphRelation largest_graph_relation_within(
    const RelationPair& bounds, std::uint64_t cap = kDefaultEnumerationCap);

GraphRelation largest_graph_relation(GraphPtr a, GraphPtr b,
                                     std::uint64_t cap = kDefaultEnumerationCap);

struct RelatednessResult {
  bool related = false;
  // single edge span exhibiting the witness, when related
  std::optional<GraphPtr> span;
  std::optional<Hom> to_left, to_right;
};

/// Whether two edges are related by some graph relation.
RelatednessResult edges_related(GraphPtr a, const ElementId& left_edge,
                                GraphPtr b, const ElementId& right_edge,
                                std::uint64_t cap = kDefaultEnumerationCap);

struct KernelRelationResult {
  GraphRelation relation;
  Hom diagonal_section;  // source -> kernel relation graph, x -> (x,x)
};

/// The kernel of a hom as a graph relation. Demands a functor that weakly
/// preserves kernel pullbacks (UnsupportedFunctor otherwise) and still
/// verifies every witness rather than assuming it exists. The diagonal
/// section makes the source a retract of the relation graph.
KernelRelationResult kernel_relation(const Hom& phi,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace fgraph

#endif
