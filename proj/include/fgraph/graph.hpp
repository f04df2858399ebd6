#ifndef FGRAPH_GRAPH_HPP
#define FGRAPH_GRAPH_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgraph/functor.hpp"
#include "fgraph/ids.hpp"
#include "fgraph/value.hpp"

namespace fgraph {

/// A graph over a functor F: edge set, vertex set and the structure map
/// g: E -> F(V). Instances are treated as immutable once built; every
/// operation returns fresh objects.
struct FGraph {
  FunctorSpec spec = FunctorSpec::upair();
  FiniteSet edges;
  FiniteSet vertices;
  std::map<ElementId, Value> structure;

  const Value& value_of(const ElementId& e) const { return structure.at(e); }

  bool operator==(const FGraph& other) const {
    return spec == other.spec && edges == other.edges &&
           vertices == other.vertices && structure == other.structure;
  }
};

using GraphPtr = std::shared_ptr<const FGraph>;

struct GraphViolation {
  std::string where;
  std::string reason;
};

/// Carrier and grammar checks: structure total on edges and only on edges,
/// every value well formed with support inside the vertex set.
std::vector<GraphViolation> validate_graph(const FGraph& g);

/// Validating constructor for internally built graphs; throws on violation.
GraphPtr make_graph(FunctorSpec spec, FiniteSet edges, FiniteSet vertices,
                    std::map<ElementId, Value> structure);

/// A homomorphism: a pair of maps with explicit source and target.
struct Hom {
  GraphPtr source, target;
  IdMap edge_map, vertex_map;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  bool operator==(const Hom& other) const {
    return *source == *other.source && *target == *other.target &&
           edge_map == other.edge_map && vertex_map == other.vertex_map;
  }
};

struct HomVerdict {
  bool ok = false;
  std::string reason;
  std::optional<ElementId> failing_edge;  // first edge breaking commutation
};

/// Checks totality, codomains and the square g2 . phiE = F(phiV) . g1
/// edge by edge in id order. Throws SpecMismatch when the functors differ.
HomVerdict validate_hom(const Hom& phi);

Hom identity_hom(GraphPtr g);

/// outer . inner; throws DomainMismatch unless inner's target equals
/// outer's source.
Hom compose(const Hom& outer, const Hom& inner);

/// A subgraph designated inside a fixed parent graph.
struct SubgraphHandle {
  GraphPtr parent;
  FiniteSet edges;
  FiniteSet vertices;

  GraphPtr to_graph() const;
  Hom inclusion() const;

  bool operator==(const SubgraphHandle& other) const {
    return *parent == *other.parent && edges == other.edges &&
           vertices == other.vertices;
  }
};

struct SubgraphVerdict {
  std::optional<SubgraphHandle> handle;
  std::optional<ElementId> bad_edge;  // first edge with support outside V_sub
  std::string reason;
};

/// The support criterion: (E_sub, V_sub) cuts out a subgraph iff every kept
/// edge's support stays inside V_sub.
SubgraphVerdict subgraph_check(GraphPtr g, const FiniteSet& edge_subset,
                               const FiniteSet& vertex_subset);

struct ImageResult {
  SubgraphHandle image;      // on the target
  Hom restriction;           // source -> image graph
};

ImageResult image(const Hom& phi);

struct Factorization {
  GraphPtr mid;
  Hom epi;   // source ->> mid
  Hom mono;  // mid >-> target
};

/// Epi-mono factorization through the image.
Factorization factorize(const Hom& phi);

/// Unique diagonal of a commuting square whose left side is epi and whose
/// right side is mono: returns d with d . epi = top and mono . d = bottom.
Hom diagonal_fill(const Hom& epi, const Hom& mono, const Hom& top,
                  const Hom& bottom);

/// An equivalence relation on a finite id set, canonicalized so that each
/// class is named by its least member.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(const FiniteSet& domain);
  static Partition from_pairs(const FiniteSet& domain,
                              const std::vector<std::pair<ElementId, ElementId>>& pairs);
  static Partition from_classes(const FiniteSet& domain,
                                const std::vector<std::vector<ElementId>>& classes);
  /// Fibers of an arbitrary key function.
  static Partition from_key(
      const FiniteSet& domain,
      const std::function<std::string(const ElementId&)>& key);

  const FiniteSet& domain() const { return domain_; }
  const ElementId& rep_of(const ElementId& x) const { return rep_.at(x); }
  bool same_class(const ElementId& a, const ElementId& b) const {
    return rep_.at(a) == rep_.at(b);
  }
  bool is_discrete() const;

  /// Classes sorted by representative, members sorted.
  std::vector<std::vector<ElementId>> classes() const;
  FiniteSet representatives() const;
  /// x -> representative, i.e. the canonical projection on ids.
  IdMap projection_map() const { return rep_; }
  /// All related pairs (a, b) with a != b, sorted.
  std::vector<std::pair<ElementId, ElementId>> nontrivial_pairs() const;

  bool refines(const Partition& coarser) const;
  static Partition join(const Partition& a, const Partition& b);
  static Partition restrict_to(const Partition& p, const FiniteSet& sub);

  bool operator==(const Partition&) const = default;

 private:
  FiniteSet domain_;
  std::map<ElementId, ElementId> rep_;
};

/// A pair of equivalences, one per carrier.
struct EquivPair {
  Partition edges;
  Partition vertices;

  bool refines(const EquivPair& coarser) const {
    return edges.refines(coarser.edges) && vertices.refines(coarser.vertices);
  }
  bool operator==(const EquivPair&) const = default;
};

/// Componentwise kernel of a hom.
EquivPair kernel(const Hom& phi);

struct CongruenceVerdict {
  bool ok = false;
  // first edge pair whose values disagree after projecting the vertices
  std::optional<std::pair<ElementId, ElementId>> counterexample;
};

CongruenceVerdict is_congruence(const FGraph& g, const EquivPair& theta);

struct QuotientResult {
  GraphPtr graph;
  Hom projection;
};

/// Quotient by a congruence; classes are named by their least member.
/// Throws NotACongruence with the offending pair otherwise.
QuotientResult quotient(GraphPtr g, const EquivPair& theta);

/// The canonical iso G1/ker(phi) -> phi[G1].
Hom first_isomorphism(const Hom& phi);

struct EpiMediation {
  std::optional<Hom> hom;
  // kernel pair of the epi not respected by the other hom
  std::optional<std::pair<ElementId, ElementId>> violating_pair;
  bool pair_is_edge = false;
  std::string reason;
};

/// Factor `other` through the surjection `epi` (both leave the same source):
/// unique gamma with gamma . epi = other, existing iff ker(epi) refines
/// ker(other).
EpiMediation mediate_through_epi(const Hom& epi, const Hom& other);

struct MonoMediation {
  std::optional<Hom> hom;
  std::optional<ElementId> missing;  // element of other's image not hit
  bool missing_is_edge = false;
  std::string reason;
};

/// Factor `other` through the injection `mono` (both into the same target):
/// unique gamma with mono . gamma = other, existing iff the image of
/// `other` is contained in the image of `mono`.
MonoMediation mediate_through_mono(const Hom& mono, const Hom& other);

struct IsoCheck {
  bool ok = false;
  std::optional<Hom> inverse;
};

IsoCheck is_iso(const Hom& phi);
/// Surjective on both carriers (equals categorical epi here).
bool is_epi(const Hom& phi);
/// Injective on both carriers (equals regular mono here).
bool is_regular_mono(const Hom& phi);

/// Categorical mono, decided through the largest graph relation inside the
/// kernel. Defined alongside the relation machinery.
bool is_mono(const Hom& phi, const Budgets& budgets = {});
/// Surjection whose kernel is generated by a graph relation.
bool is_regular_epi(const Hom& phi, const Budgets& budgets = {});

struct SecondIsoResult {
  Hom chi;          // G/theta1 ->> G/theta2
  EquivPair theta3; // ker(chi)
  Hom witness_iso;  // (G/theta1)/theta3 -> G/theta2
};

/// For congruences theta1 refining theta2.
SecondIsoResult second_isomorphism(GraphPtr g, const EquivPair& theta1,
                                   const EquivPair& theta2);

struct ThirdIsoResult {
  SubgraphHandle saturation;
  EquivPair restricted;  // theta cut down to the subgraph
  Hom witness_iso;       // G_U/restricted -> saturation/theta
};

/// Saturation of a subgraph under a congruence plus the induced iso.
ThirdIsoResult third_isomorphism(GraphPtr g, const EquivPair& theta,
                                 const SubgraphHandle& u);

}  // namespace fgraph

#endif
