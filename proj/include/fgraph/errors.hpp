#ifndef FGRAPH_ERRORS_HPP
#define FGRAPH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgraph {

/// Enumerating a functor's value space would exceed the configured cap.
/// Carries the exact count when it is cheap to compute, otherwise an
/// upper bound.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::uint64_t count, bool exact, std::uint64_t cap)
      : std::runtime_error("value enumeration needs " +
                           std::string(exact ? "" : "at most ") +
                           std::to_string(count) + " values, cap is " +
                           std::to_string(cap)),
        count(count),
        exact(exact),
        cap(cap) {}

  std::uint64_t count;
  bool exact;
  std::uint64_t cap;
};

/// A search budget (colorings, homomorphism candidates, subsets) ran out.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A structure value does not match the grammar of its functor.
class MalformedValue : public std::runtime_error {
 public:
  explicit MalformedValue(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects that must live over the same functor do not.
class SpecMismatch : public std::runtime_error {
 public:
  explicit SpecMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Maps fed to an operation are not total on the expected carriers, or
/// graphs do not line up as required (e.g. composing homs whose middle
/// objects differ).
class DomainMismatch : public std::runtime_error {
 public:
  explicit DomainMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Quotient was asked for an equivalence pair that is not a congruence.
class NotACongruence : public std::runtime_error {
 public:
  NotACongruence(const std::string& a, const std::string& b)
      : std::runtime_error("edge pair (" + a + ", " + b +
                           ") violates the congruence condition"),
        edge_a(a),
        edge_b(b) {}

  std::string edge_a, edge_b;
};

/// An operation's stated precondition failed (non-epi fed to epi mediation,
/// orientation entries outside hyperedges, and so on).
class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

/// The functor lacks a property the operation requires (currently: weak
/// preservation of kernel pullbacks for kernel_relation).
class UnsupportedFunctor : public std::runtime_error {
 public:
  explicit UnsupportedFunctor(const std::string& what)
      : std::runtime_error(what) {}
};

/// Extension of a partial coloring needs a color but the color set is empty.
class EmptyColorSet : public std::runtime_error {
 public:
  explicit EmptyColorSet(const std::string& what) : std::runtime_error(what) {}
};

/// An edge-to-vertex map fails the orientation condition omega(e) in g(e).
class NotAnOrientation : public std::runtime_error {
 public:
  NotAnOrientation(const std::string& edge, const std::string& vertex)
      : std::runtime_error("orientation sends " + edge + " to " + vertex +
                           ", which is not in its hyperedge"),
        edge(edge),
        vertex(vertex) {}

  std::string edge, vertex;
};

}  // namespace fgraph

#endif
