#ifndef FGRAPH_COVARIETY_HPP
#define FGRAPH_COVARIETY_HPP

#include <optional>
#include <vector>

#include "fgraph/cofree.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/limits.hpp"

namespace fgraph {

/// A pattern over a cofree graph: a chosen subset of its carriers. The
/// edge subset picks whole (color, value) edges of C(colors).
struct Pattern {
  ColorSet colors;
  FiniteSet edge_subset;
  FiniteSet vertex_subset;

  bool operator==(const Pattern&) const = default;
};

/// The largest subgraph of C(X) inside the pattern: all bound vertices
/// plus the bound edges supported by them.
SubgraphHandle pattern_hat(const CofreeGraph& cofree, const Pattern& p);

struct PatternSatisfaction {
  bool ok = false;
  std::optional<Coloring> failing_coloring;
};

/// A graph satisfies a pattern when every coloring's induced image lands
/// inside the pattern's hat. Colorings are visited lexicographically
/// (vertices cycle colors first, then edges); the first failure is
/// reported.
PatternSatisfaction satisfies_pattern(const GraphPtr& g,
                                      const CofreeGraph& cofree,
                                      const Pattern& p,
                                      const Budgets& budgets = {});

struct InvarianceResult {
  bool ok = false;
  std::optional<Hom> violating_endo;
};

/// Every endomorphism of C(X) must map the handle into itself.
InvarianceResult is_invariant_subgraph(const CofreeGraph& cofree,
                                       const SubgraphHandle& handle,
                                       const Budgets& budgets = {});

/// Union over every coloring of every class member of the induced images:
/// the hat of the strongest pattern the whole class satisfies.
SubgraphHandle pat_of_class(const std::vector<GraphPtr>& members,
                            const CofreeGraph& cofree,
                            const Budgets& budgets = {});

/// The pattern whose carrier is the handle (its own hat).
Pattern pattern_of_handle(const CofreeGraph& cofree,
                          const SubgraphHandle& handle);

/// A pattern over an arbitrary host graph instead of a cofree one.
struct ConditionalPattern {
  GraphPtr host;
  FiniteSet edge_subset;
  FiniteSet vertex_subset;
};

struct ConditionalSatisfaction {
  bool ok = false;
  std::optional<Hom> failing_hom;
};

/// Every hom into the host must land inside the subset's hat.
ConditionalSatisfaction satisfies_conditional(const GraphPtr& g,
                                              const ConditionalPattern& r,
                                              const Budgets& budgets = {});

struct Implication {
  Pattern premise, conclusion;
};

struct ImplicationSatisfaction {
  bool ok = false;
  PatternSatisfaction premise, conclusion;
};

/// Material reading: satisfying the premise pattern entails satisfying
/// the conclusion pattern; both verdicts are reported.
ImplicationSatisfaction satisfies_implication(const GraphPtr& g,
                                              const CofreeGraph& cofree,
                                              const Implication& imp,
                                              const Budgets& budgets = {});

/// Per-coloring reading: every single coloring whose image lands in the
/// premise's hat also lands in the conclusion's hat. Strictly stronger
/// than the material reading; this is the reading under which implications
/// and conditional patterns translate into each other exactly.
PatternSatisfaction satisfies_implication_pointwise(const GraphPtr& g,
                                                    const CofreeGraph& cofree,
                                                    const Implication& imp,
                                                    const Budgets& budgets =
                                                        {});

/// Host = the premise's hat; subset = its carrier intersected with the
/// conclusion.
ConditionalPattern conditional_from_implication(const CofreeGraph& cofree,
                                                const Implication& imp);

/// The reverse translation lives over the cofree graph on the host's own
/// carriers: the premise is the host's unit image, the conclusion the unit
/// image of the subset.
struct HostImplication {
  CofreeGraph cofree;  // over (host edges, host vertices)
  Implication implication;
};

HostImplication implication_from_conditional(
    const ConditionalPattern& r, std::uint64_t cap = kDefaultEnumerationCap);

/// Edges whose induced subgraph has more vertices than the bound; the
/// bounded specification theorem assumes there are none.
std::vector<ElementId> boundedness_violations(const GraphPtr& g,
                                              std::size_t vertex_bound);

enum class ClosureMode {
  Covariety,  // subgraphs of hom images of coproducts
  Quasi,      // hom images of coproducts
  Complete    // additionally closed under hom preimages
};

struct ProbeReport {
  bool closure_member = false;     // explicit closure-chain search
  bool equational_member = false;  // pattern/implication satisfaction
  bool agree = false;
  std::vector<ElementId> boundedness_warnings;
};

struct ClosureAuditReport {
  ClosureMode mode = ClosureMode::Covariety;
  std::vector<ProbeReport> probes;  // parallel to the universe list
  bool all_agree = true;
};

/// Decides, for every probe, membership in the closure of the generator
/// class by direct search and membership in the corresponding equational
/// class, and reports whether the two verdicts agree.
ClosureAuditReport closure_audit(const std::vector<GraphPtr>& members,
                                 const std::vector<GraphPtr>& universe,
                                 const ColorSet& colors, ClosureMode mode,
                                 const Budgets& budgets = {});

}  // namespace fgraph

#endif
