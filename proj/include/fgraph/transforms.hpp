#ifndef FGRAPH_TRANSFORMS_HPP
#define FGRAPH_TRANSFORMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/limits.hpp"

namespace fgraph {

/// A natural transformation between two functor specs: per vertex set V a
/// map F1(V) -> F2(V), commuting with vertex renamings. Retyping a graph's
/// structure map through one is a functor between the two graph categories.
struct NaturalTransformation {
  FunctorSpec source = FunctorSpec::dpair();
  FunctorSpec target = FunctorSpec::upair();
  std::string name;
  std::function<Value(const FiniteSet&, const Value&)> component;
  /// Right inverse of component where one exists (makes the induced
  /// functor surjective on objects); null when the component is not
  /// surjective.
  std::function<Value(const FiniteSet&, const Value&)> section;
};

/// Forgets edge direction: (v1,v2) -> {v1,v2}.
NaturalTransformation deorientation();

/// Strips the edge color and the vertex colors: the source must be a
/// Colored spec, the target is its inner functor.
NaturalTransformation uncoloring(const FunctorSpec& colored_spec);

/// Directed hyperedge to plain hyperedge: (v,S) -> {v} | S. Not
/// surjective (the empty hyperedge has no preimage), so no section.
NaturalTransformation underlying_hypergraph();

struct NaturalityCounterexample {
  FiniteSet domain, codomain;
  IdMap map;
  Value value;
  Value mapped_then_component;  // component(codomain, F1(f)(w))
  Value component_then_mapped;  // F2(f)(component(domain, w))
};

/// Exhaustive naturality check over every map between every pair of
/// subsets of a universe {x1..xn}, n = universe_size.
std::optional<NaturalityCounterexample> check_naturality(
    const NaturalTransformation& tau, int universe_size,
    const Budgets& budgets = {});

/// (E, V, component_V . g): same carriers, retyped structure.
GraphPtr apply_transformation(const NaturalTransformation& tau,
                              const GraphPtr& g);

/// The carrier maps are unchanged; naturality keeps the square commuting
/// between the retyped graphs.
Hom transport_hom(const NaturalTransformation& tau, const Hom& phi);

/// Builds a source-typed graph whose retyping is g, using the section.
/// Throws PreconditionViolated when tau has no section.
GraphPtr preimage_graph(const NaturalTransformation& tau, const GraphPtr& g);

/// An endofunctor on finite carrier sets, given by its action on sets and
/// on maps between them.
struct CarrierFunctor {
  std::function<FiniteSet(const FiniteSet&)> on_set;
  std::function<IdMap(const IdMap&)> on_map;
};

CarrierFunctor identity_carrier();

/// Carrier-changing transformation: G = (E,V,g) goes to
/// (TE E, TV V, tau_V . TE(g)). The composite tau_V . TE(g) is supplied
/// directly as the structure value of each transformed edge.
struct GeneralTransformation {
  FunctorSpec source = FunctorSpec::upair();
  FunctorSpec target = FunctorSpec::upair();
  std::string name;
  CarrierFunctor edges, vertices;
  std::function<Value(const FGraph&, const ElementId&)> structure;
};

/// Identity carriers turn a natural transformation into the general form.
GeneralTransformation general_from_natural(const NaturalTransformation& tau);

GraphPtr apply_general_transformation(const GeneralTransformation& t,
                                      const GraphPtr& g);

/// Carrier maps pushed through the carrier functors; validated.
Hom transport_hom_general(const GeneralTransformation& t, const Hom& phi);

/// Whether the structure map is injective (no two edges share a value).
bool is_simple(const GraphPtr& g);

/// Merges edges sharing a structure value: edges become the distinct
/// values g[E] (identified by their renderings), the structure map the
/// inclusion. The result is always simple.
struct SimplifyResult {
  GraphPtr graph;
  Hom surjection;  // g -> simplified
};

SimplifyResult simplify(const GraphPtr& g);

/// The induced hom between simplifications: the diagonal of the
/// factorization square. Well defined because merged edges have equal
/// values and homs act on values through the vertex map alone.
Hom simplify_hom(const Hom& phi);

/// Quotient by the kernel of the unique hom into the terminal graph: the
/// smallest image of g, unique up to iso.
struct MinimizeResult {
  GraphPtr graph;
  Hom projection;
};

MinimizeResult minimize(const GraphPtr& g,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// An orientation picks a member vertex of every hyperedge.
using Orientation = IdMap;

/// Throws NotAnOrientation / DomainMismatch when omega is not total on the
/// edges or picks a vertex outside its hyperedge. Powerset graphs only.
void validate_orientation(const GraphPtr& g, const Orientation& omega);

/// Pulls an orientation of the target back along a hom: each source edge
/// gets the order-minimal member vertex that the hom sends onto the
/// target's choice. The paired directed structures then make phi a hom
/// again (the orientation-lifting theorem).
Orientation lift_orientation(const Hom& phi, const Orientation& target_omega);

/// The DirectedHyper graph (E, V, e -> (omega(e), g(e))).
GraphPtr pair_with_orientation(const GraphPtr& g, const Orientation& omega);

/// Every graph is the union of its edge-induced subgraphs plus isolated
/// vertices; each edge-induced part is one-generated.
struct ConjunctDecomposition {
  std::vector<SubgraphHandle> parts;  // one per edge, in edge order
  FiniteSet isolated_vertices;
  std::vector<bool> part_one_generated;
};

ConjunctDecomposition conjunct_decomposition(const GraphPtr& g);

/// Some single edge generates the whole graph.
bool is_one_generated(const GraphPtr& g);

/// No family of proper subgraphs covers the graph, computed directly via
/// the union of all proper subgraphs. Agrees with is_one_generated on
/// graphs with at least one edge; an edgeless single vertex is irreducible
/// but not one-generated.
bool is_conjunctly_irreducible(const GraphPtr& g);

}  // namespace fgraph

#endif
