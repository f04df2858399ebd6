#ifndef FGRAPH_VALUE_HPP
#define FGRAPH_VALUE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fgraph/ids.hpp"

namespace fgraph {

enum class ValueKind { Atom, Tuple, SetOf, Tagged, Colored };

/// A structure value: the element of F(V) attached to an edge.
///
/// Values form a small tree language. Atom holds a vertex id, Tuple an
/// ordered list, SetOf an unordered collection kept sorted and duplicate
/// free (canonical form doubles as the equality discipline), Tagged an
/// injection into a sum, Colored a color label paired with an inner value.
class Value {
 public:
  static Value atom(ElementId label) {
    Value v;
    v.kind_ = ValueKind::Atom;
    v.label_ = std::move(label);
    return v;
  }

  static Value tuple(std::vector<Value> items) {
    Value v;
    v.kind_ = ValueKind::Tuple;
    v.children_ = std::move(items);
    return v;
  }

  /// Sorts and deduplicates, so the result is canonical whenever the
  /// members are.
  static Value set_of(std::vector<Value> items);

  static Value tagged(std::size_t part, Value inner) {
    Value v;
    v.kind_ = ValueKind::Tagged;
    v.part_ = part;
    v.children_.push_back(std::move(inner));
    return v;
  }

  static Value colored(ElementId color, Value inner) {
    Value v;
    v.kind_ = ValueKind::Colored;
    v.label_ = std::move(color);
    v.children_.push_back(std::move(inner));
    return v;
  }

  ValueKind kind() const { return kind_; }

  /// Atom label, or the color of a Colored node.
  const ElementId& label() const { return label_; }
  std::size_t part() const { return part_; }
  const std::vector<Value>& children() const { return children_; }
  const Value& inner() const { return children_.front(); }

  std::strong_ordering operator<=>(const Value& other) const;
  bool operator==(const Value& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  bool is_canonical() const;

  /// Compact deterministic rendering, used for derived ids such as
  /// cofree edges "(color|value)" and for diagnostics.
  std::string to_string() const;

 private:
  ValueKind kind_ = ValueKind::Atom;
  ElementId label_;
  std::size_t part_ = 0;
  std::vector<Value> children_;
};

}  // namespace fgraph

#endif
