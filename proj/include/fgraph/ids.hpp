#ifndef FGRAPH_IDS_HPP
#define FGRAPH_IDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgraph {

/// Element identifiers are plain strings with the lexicographic order.
/// All deterministic choices (class representatives, first counterexamples,
/// minimal picks) are made with respect to this order.
using ElementId = std::string;

/// A finite map between element ids. std::map so iteration order is the
/// id order, which keeps every derived artifact reproducible.
using IdMap = std::map<ElementId, ElementId>;

/// A finite set of element ids, stored sorted and duplicate free.
class FiniteSet {
 public:
  FiniteSet() = default;

  explicit FiniteSet(std::vector<ElementId> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  FiniteSet(std::initializer_list<ElementId> elems)
      : FiniteSet(std::vector<ElementId>(elems)) {}

  const std::vector<ElementId>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  bool contains(const ElementId& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  /// Position of x in the sorted order; throws when absent.
  std::size_t index_of(const ElementId& x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x)
      throw std::out_of_range("element not in set: " + x);
    return static_cast<std::size_t>(it - elems_.begin());
  }

  bool subset_of(const FiniteSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
  }

  void insert(const ElementId& x) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) elems_.insert(it, x);
  }

  static FiniteSet union_of(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_union(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                   b.elems_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  static FiniteSet intersection_of(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_intersection(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                          b.elems_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  static FiniteSet difference_of(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                        b.elems_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const FiniteSet&) const = default;
  auto operator<=>(const FiniteSet&) const = default;

 private:
  static FiniteSet from_sorted(std::vector<ElementId> v) {
    FiniteSet s;
    s.elems_ = std::move(v);
    return s;
  }

  std::vector<ElementId> elems_;
};

inline bool is_total_map(const IdMap& f, const FiniteSet& domain) {
  for (const auto& x : domain)
    if (!f.count(x)) return false;
  return true;
}

inline bool maps_into(const IdMap& f, const FiniteSet& codomain) {
  for (const auto& [k, v] : f)
    if (!codomain.contains(v)) return false;
  return true;
}

inline IdMap identity_map(const FiniteSet& s) {
  IdMap f;
  for (const auto& x : s) f[x] = x;
  return f;
}

/// outer after inner; defined on inner's keys whose images are keys of outer.
inline IdMap compose_maps(const IdMap& outer, const IdMap& inner) {
  IdMap f;
  for (const auto& [k, v] : inner) {
    auto it = outer.find(v);
    if (it == outer.end())
      throw std::out_of_range("compose_maps: image escapes outer domain: " + v);
    f[k] = it->second;
  }
  return f;
}

inline FiniteSet image_of(const IdMap& f, const FiniteSet& domain) {
  std::vector<ElementId> out;
  out.reserve(domain.size());
  for (const auto& x : domain) out.push_back(f.at(x));
  return FiniteSet(std::move(out));
}

inline bool is_injective_on(const IdMap& f, const FiniteSet& domain) {
  return image_of(f, domain).size() == domain.size();
}

inline bool is_surjective_onto(const IdMap& f, const FiniteSet& domain,
                               const FiniteSet& codomain) {
  return image_of(f, domain) == codomain;
}

}  // namespace fgraph

#endif
