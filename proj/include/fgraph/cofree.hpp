#ifndef FGRAPH_COFREE_HPP
#define FGRAPH_COFREE_HPP

#include <map>
#include <optional>
#include <utility>

#include "fgraph/graph.hpp"
#include "fgraph/limits.hpp"

namespace fgraph {

/// A two-sorted color alphabet: edge colors and vertex colors.
struct ColorSet {
  FiniteSet edge_colors;
  FiniteSet vertex_colors;

  bool operator==(const ColorSet&) const = default;
};

/// A coloring of a graph: edges to edge colors, vertices to vertex colors.
/// Same shape as a Hom's carrier maps, but the codomain is an alphabet, not
/// a graph, so it gets its own type.
struct Coloring {
  IdMap edge_map;
  IdMap vertex_map;

  bool operator==(const Coloring&) const = default;
};

/// The cofree graph over a color set: vertices are the vertex colors, edges
/// are all pairs (edge color, value over the vertex colors), and the
/// structure map forgets the edge color. Every coloring of every graph
/// factors through it (induced_hom), which is the couniversal property.
struct CofreeGraph {
  GraphPtr graph;
  ColorSet colors;

  /// edge id -> (edge color, structure value). The value equals
  /// graph->value_of(edge); kept separate so callers can recover the edge
  /// color without parsing ids.
  std::map<ElementId, std::pair<ElementId, Value>> edge_decode;

  ElementId edge_id(const ElementId& edge_color, const Value& value) const;
};

CofreeGraph cofree_graph(const FunctorSpec& spec, const ColorSet& colors,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// The counit: reads each cofree edge's color off and each vertex as its
/// own color. Composing a hom into the cofree graph with this recovers the
/// coloring the hom was induced by.
Coloring counit_coloring(const CofreeGraph& cofree);

void validate_coloring(const GraphPtr& g, const ColorSet& colors,
                       const Coloring& coloring);

/// The unique hom g -> cofree with counit . hom == coloring:
/// e -> (coloring(e), F(vertex coloring)(g(e))), v -> coloring(v).
Hom induced_hom(const GraphPtr& g, const Coloring& coloring,
                const CofreeGraph& cofree);

/// The coloring a hom into the cofree graph is induced by (counit after
/// the hom). induced_hom(extract_coloring(h)) == h.
Coloring extract_coloring(const Hom& into_cofree, const CofreeGraph& cofree);

/// Functoriality on color maps: relabeling colors lifts to a hom between
/// the cofree graphs.
Hom cofree_on_colors(const CofreeGraph& from, const CofreeGraph& to,
                     const IdMap& edge_color_map,
                     const IdMap& vertex_color_map);

/// The unit: every graph embeds into the cofree graph over its own
/// carriers, colored by the identity. The embedding is injective, so every
/// graph is a subgraph of a cofree one.
struct UnitResult {
  CofreeGraph cofree;
  Hom embedding;
};

UnitResult unit_embedding(const GraphPtr& g,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Extends a partial map into a cofree graph along a subgraph inclusion:
/// colors outside the subgraph are filled with the least color, then the
/// whole thing is re-induced. Throws EmptyColorSet if a fill color is
/// needed but the alphabet side is empty.
Hom extend_to_cofree(const SubgraphHandle& sub, const Hom& from_sub,
                     const CofreeGraph& cofree);

/// A graph is regular-injective iff it is a retract of the cofree graph it
/// unit-embeds into; found retraction returned as witness.
struct RegularInjectivity {
  bool ok = false;
  std::optional<Hom> retraction;
};

RegularInjectivity is_regular_injective(const GraphPtr& g,
                                        const Budgets& budgets = {});

/// The two-alphabet cofree graph splits as a product of single-alphabet
/// ones: C(Xe, Xv) = C(Xe, {*}) x C({*}, Xv). Returns the mediating
/// comparison hom, which check() asserts is an iso.
struct CofreeDecomposition {
  CofreeGraph whole;
  CofreeGraph edge_part;    // over (edge colors, {*})
  CofreeGraph vertex_part;  // over ({*}, vertex colors)
  ProductResult product;
  Hom comparison;
  bool is_isomorphism = false;
};

CofreeDecomposition cofree_decomposition(
    const FunctorSpec& spec, const ColorSet& colors,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace fgraph

#endif
