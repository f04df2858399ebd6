#ifndef FGRAPH_FUNCTOR_HPP
#define FGRAPH_FUNCTOR_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fgraph/errors.hpp"
#include "fgraph/ids.hpp"
#include "fgraph/value.hpp"

namespace fgraph {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Work limits shared by the search-flavored operations.
struct Budgets {
  std::uint64_t enumeration = kDefaultEnumerationCap;
  std::uint64_t colorings = 1'000'000;
  std::uint64_t homs = 1'000'000;
};

enum class FunctorKind {
  Identity,
  UPair,          // singleton and two-element subsets: undirected edges
  DPair,          // ordered pairs: directed edges
  Powerset,       // finite powerset: hyperedges
  DirectedHyper,  // vertex paired with a vertex set
  KTuple,         // k-tuples, optionally with a repeated-component floor
  Colored,        // edge color x inner functor over (vertex, vertex color)
  Sum             // tagged disjoint union of functors
};

/// Description of the set functor a graph is shaped over. All shipped
/// functors are standard (they preserve inclusions), which is what makes
/// the support-based subgraph criterion sound.
class FunctorSpec {
 public:
  static FunctorSpec identity() { return FunctorSpec(FunctorKind::Identity); }
  static FunctorSpec upair() { return FunctorSpec(FunctorKind::UPair); }
  static FunctorSpec dpair() { return FunctorSpec(FunctorKind::DPair); }
  static FunctorSpec powerset() { return FunctorSpec(FunctorKind::Powerset); }
  static FunctorSpec directed_hyper() {
    return FunctorSpec(FunctorKind::DirectedHyper);
  }

  /// min_equal <= 1 means the plain k-th power; min_equal >= 2 restricts to
  /// tuples where some value occupies at least min_equal components.
  static FunctorSpec ktuple(int k, int min_equal);

  static FunctorSpec colored(FiniteSet edge_colors, FiniteSet vertex_colors,
                             FunctorSpec inner);

  static FunctorSpec sum(std::vector<FunctorSpec> parts);

  FunctorKind kind() const { return kind_; }
  int k() const { return k_; }
  int min_equal() const { return min_equal_; }
  const FiniteSet& edge_colors() const { return edge_colors_; }
  const FiniteSet& vertex_colors() const { return vertex_colors_; }
  const FunctorSpec& inner() const { return parts_.front(); }
  const std::vector<FunctorSpec>& parts() const { return parts_; }

  bool operator==(const FunctorSpec& other) const;
  bool operator!=(const FunctorSpec& other) const { return !(*this == other); }

  /// Kernel-pair relations require this; false only for tuple functors with
  /// a repeated-component floor (and anything built on top of one).
  bool weakly_preserves_kernel_pullbacks() const;

  std::string describe() const;

 private:
  explicit FunctorSpec(FunctorKind kind) : kind_(kind) {}

  FunctorKind kind_;
  int k_ = 0;
  int min_equal_ = 0;
  FiniteSet edge_colors_, vertex_colors_;
  std::vector<FunctorSpec> parts_;  // Sum parts; Colored keeps inner here too
};

/// Saturating size of F(V) for |V| = n. exact is false only where the
/// closed form is a bound (tuple functors with a repeated-component floor).
struct ValueCount {
  std::uint64_t value;
  bool exact;
};

ValueCount count_values(const FunctorSpec& spec, std::uint64_t n_vertices);

/// All of F(V) in canonical (sorted) order. Throws EnumerationCapExceeded
/// before materializing anything when the (bound on the) count is over cap.
std::vector<Value> enumerate_values(
    const FunctorSpec& spec, const FiniteSet& vertices,
    std::uint64_t cap = kDefaultEnumerationCap);

/// Grammar check; throws MalformedValue naming the offending position.
void validate_value(const FunctorSpec& spec, const Value& value);

/// F applied to a vertex map: rewrites atoms in vertex position, then
/// re-canonicalizes. Throws DomainMismatch when the map misses a vertex.
Value map_value(const FunctorSpec& spec, const IdMap& vertex_map,
                const Value& value);

/// Structural walk that hands every vertex-position subterm to fn and
/// rebuilds around the results. No validation on either side; for color
/// functors fn sees the inner payload of each (vertex color, leaf) pair.
Value map_value_leaves(const FunctorSpec& spec, const Value& value,
                       const std::function<Value(const Value&)>& fn);

/// The set of vertices occurring in vertex position.
FiniteSet support(const FunctorSpec& spec, const Value& value);

/// Whether the value already lives in F(subset): by standardness this is
/// exactly support containment, which is the subgraph criterion.
bool value_in_subset(const FunctorSpec& spec, const Value& value,
                     const FiniteSet& subset);

}  // namespace fgraph

#endif
