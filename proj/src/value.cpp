#include "fgraph/value.hpp"

#include <algorithm>

namespace fgraph {

Value Value::set_of(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Value v;
  v.kind_ = ValueKind::SetOf;
  v.children_ = std::move(items);
  return v;
}

// Total order: kind rank first, then the kind's own fields. Tuple and SetOf
// compare shortlex (size before content) so e.g. {v2} precedes {v1,v2}.
std::strong_ordering Value::operator<=>(const Value& other) const {
  if (auto c = static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
      c != 0)
    return c;
  switch (kind_) {
    case ValueKind::Atom:
      return label_ <=> other.label_;
    case ValueKind::Tuple:
    case ValueKind::SetOf: {
      if (auto c = children_.size() <=> other.children_.size(); c != 0)
        return c;
      for (std::size_t i = 0; i < children_.size(); ++i)
        if (auto c = children_[i] <=> other.children_[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case ValueKind::Tagged: {
      if (auto c = part_ <=> other.part_; c != 0) return c;
      return children_.front() <=> other.children_.front();
    }
    case ValueKind::Colored: {
      if (auto c = label_ <=> other.label_; c != 0) return c;
      return children_.front() <=> other.children_.front();
    }
  }
  return std::strong_ordering::equal;
}

bool Value::is_canonical() const {
  switch (kind_) {
    case ValueKind::Atom:
      return true;
    case ValueKind::SetOf:
      for (std::size_t i = 0; i + 1 < children_.size(); ++i)
        if (!(children_[i] < children_[i + 1])) return false;
      [[fallthrough]];
    case ValueKind::Tuple:
      return std::all_of(children_.begin(), children_.end(),
                         [](const Value& c) { return c.is_canonical(); });
    case ValueKind::Tagged:
    case ValueKind::Colored:
      return children_.front().is_canonical();
  }
  return true;
}

std::string Value::to_string() const {
  switch (kind_) {
    case ValueKind::Atom:
      return label_;
    case ValueKind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ",";
        out += children_[i].to_string();
      }
      return out + ")";
    }
    case ValueKind::SetOf: {
      std::string out = "{";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ",";
        out += children_[i].to_string();
      }
      return out + "}";
    }
    case ValueKind::Tagged:
      return "#" + std::to_string(part_) + ":" +
             children_.front().to_string();
    case ValueKind::Colored:
      return "[" + label_ + "]" + children_.front().to_string();
  }
  return {};
}

}  // namespace fgraph
