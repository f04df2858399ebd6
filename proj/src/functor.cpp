#include "fgraph/functor.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace fgraph {

FunctorSpec FunctorSpec::ktuple(int k, int min_equal) {
  if (k < 1) throw PreconditionViolated("ktuple needs k >= 1");
  if (min_equal < 0 || min_equal > k)
    throw PreconditionViolated("ktuple needs 0 <= min_equal <= k");
  FunctorSpec s(FunctorKind::KTuple);
  s.k_ = k;
  s.min_equal_ = min_equal;
  return s;
}

FunctorSpec FunctorSpec::colored(FiniteSet edge_colors,
                                 FiniteSet vertex_colors, FunctorSpec inner) {
  FunctorSpec s(FunctorKind::Colored);
  s.edge_colors_ = std::move(edge_colors);
  s.vertex_colors_ = std::move(vertex_colors);
  s.parts_.push_back(std::move(inner));
  return s;
}

FunctorSpec FunctorSpec::sum(std::vector<FunctorSpec> parts) {
  if (parts.empty()) throw PreconditionViolated("sum needs at least one part");
  FunctorSpec s(FunctorKind::Sum);
  s.parts_ = std::move(parts);
  return s;
}

bool FunctorSpec::operator==(const FunctorSpec& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case FunctorKind::KTuple:
      return k_ == other.k_ && min_equal_ == other.min_equal_;
    case FunctorKind::Colored:
      return edge_colors_ == other.edge_colors_ &&
             vertex_colors_ == other.vertex_colors_ &&
             parts_.front() == other.parts_.front();
    case FunctorKind::Sum:
      return parts_ == other.parts_;
    default:
      return true;
  }
}

bool FunctorSpec::weakly_preserves_kernel_pullbacks() const {
  switch (kind_) {
    case FunctorKind::KTuple:
      return min_equal_ <= 1;
    case FunctorKind::Colored:
      return parts_.front().weakly_preserves_kernel_pullbacks();
    case FunctorKind::Sum:
      return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) {
        return p.weakly_preserves_kernel_pullbacks();
      });
    default:
      return true;
  }
}

std::string FunctorSpec::describe() const {
  switch (kind_) {
    case FunctorKind::Identity:
      return "identity";
    case FunctorKind::UPair:
      return "upair";
    case FunctorKind::DPair:
      return "dpair";
    case FunctorKind::Powerset:
      return "powerset";
    case FunctorKind::DirectedHyper:
      return "directed_hyper";
    case FunctorKind::KTuple:
      return "ktuple(" + std::to_string(k_) + "," + std::to_string(min_equal_) +
             ")";
    case FunctorKind::Colored:
      return "colored(" + parts_.front().describe() + ")";
    case FunctorKind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].describe();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSat - b ? kSat : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t sat_pow2(std::uint64_t n) {
  return n >= 64 ? kSat : (std::uint64_t{1} << n);
}

}  // namespace

ValueCount count_values(const FunctorSpec& spec, std::uint64_t n) {
  switch (spec.kind()) {
    case FunctorKind::Identity:
      return {n, true};
    case FunctorKind::UPair:
      return {sat_add(n, n * (n - (n > 0 ? 1 : 0)) / 2), true};
    case FunctorKind::DPair:
      return {sat_mul(n, n), true};
    case FunctorKind::Powerset:
      return {sat_pow2(n), true};
    case FunctorKind::DirectedHyper:
      return {sat_mul(n, sat_pow2(n)), true};
    case FunctorKind::KTuple: {
      if (spec.min_equal() > spec.k()) return {0, true};
      std::uint64_t raw = sat_pow(n, static_cast<std::uint64_t>(spec.k()));
      return {raw, spec.min_equal() <= 1};
    }
    case FunctorKind::Colored: {
      ValueCount inner = count_values(
          spec.inner(), sat_mul(n, spec.vertex_colors().size()));
      return {sat_mul(spec.edge_colors().size(), inner.value), inner.exact};
    }
    case FunctorKind::Sum: {
      std::uint64_t total = 0;
      bool exact = true;
      for (const auto& p : spec.parts()) {
        ValueCount c = count_values(p, n);
        total = sat_add(total, c.value);
        exact = exact && c.exact;
      }
      return {total, exact};
    }
  }
  return {0, true};
}

namespace {

// The leaf parameter threads through Colored wrappers: at the top level the
// values sitting in vertex position are atoms, inside a Colored functor they
// are (vertex color, leaf) pairs of the enclosing level.

std::vector<Value> enumerate_rec(const FunctorSpec& spec,
                                 const std::vector<Value>& leaves) {
  std::vector<Value> out;
  const std::size_t n = leaves.size();
  switch (spec.kind()) {
    case FunctorKind::Identity:
      out = leaves;
      break;
    case FunctorKind::UPair:
      for (std::size_t i = 0; i < n; ++i)
        out.push_back(Value::set_of({leaves[i]}));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          out.push_back(Value::set_of({leaves[i], leaves[j]}));
      break;
    case FunctorKind::DPair:
      for (const auto& a : leaves)
        for (const auto& b : leaves) out.push_back(Value::tuple({a, b}));
      break;
    case FunctorKind::Powerset:
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Value> members;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::uint64_t{1} << i)) members.push_back(leaves[i]);
        out.push_back(Value::set_of(std::move(members)));
      }
      break;
    case FunctorKind::DirectedHyper:
      for (const auto& a : leaves)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<Value> members;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) members.push_back(leaves[i]);
          out.push_back(
              Value::tuple({a, Value::set_of(std::move(members))}));
        }
      break;
    case FunctorKind::KTuple: {
      const int k = spec.k();
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      if (n == 0) break;
      bool done = false;
      while (!done) {
        std::vector<Value> comps;
        comps.reserve(idx.size());
        for (auto i : idx) comps.push_back(leaves[i]);
        bool keep = true;
        if (spec.min_equal() >= 2) {
          std::vector<std::size_t> sorted(idx);
          std::sort(sorted.begin(), sorted.end());
          std::size_t best = 1, run = 1;
          for (std::size_t i = 1; i < sorted.size(); ++i) {
            run = sorted[i] == sorted[i - 1] ? run + 1 : 1;
            best = std::max(best, run);
          }
          keep = best >= static_cast<std::size_t>(spec.min_equal());
        }
        if (keep) out.push_back(Value::tuple(std::move(comps)));
        done = true;
        for (std::size_t pos = idx.size(); pos-- > 0;) {
          if (++idx[pos] < n) {
            done = false;
            break;
          }
          idx[pos] = 0;
        }
      }
      break;
    }
    case FunctorKind::Colored: {
      std::vector<Value> pair_leaves;
      for (const auto& leaf : leaves)
        for (const auto& cv : spec.vertex_colors())
          pair_leaves.push_back(Value::colored(cv, leaf));
      std::sort(pair_leaves.begin(), pair_leaves.end());
      auto inner = enumerate_rec(spec.inner(), pair_leaves);
      for (const auto& ce : spec.edge_colors())
        for (const auto& w : inner) out.push_back(Value::colored(ce, w));
      break;
    }
    case FunctorKind::Sum:
      for (std::size_t i = 0; i < spec.parts().size(); ++i)
        for (auto& w : enumerate_rec(spec.parts()[i], leaves))
          out.push_back(Value::tagged(i, std::move(w)));
      break;
  }
  return out;
}

using LeafCheck = std::function<void(const Value&)>;

void validate_rec(const FunctorSpec& spec, const Value& w,
                  const LeafCheck& leaf) {
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok)
      throw MalformedValue("value " + w.to_string() + " does not fit " +
                           spec.describe() + ": " + what);
  };
  auto check_canonical_set = [&](const Value& s) {
    for (std::size_t i = 0; i + 1 < s.children().size(); ++i)
      expect(s.children()[i] < s.children()[i + 1],
             "set members out of order or duplicated");
  };
  switch (spec.kind()) {
    case FunctorKind::Identity:
      leaf(w);
      break;
    case FunctorKind::UPair:
      expect(w.kind() == ValueKind::SetOf, "expected a set");
      expect(w.children().size() >= 1 && w.children().size() <= 2,
             "expected one or two members");
      check_canonical_set(w);
      for (const auto& c : w.children()) leaf(c);
      break;
    case FunctorKind::DPair:
      expect(w.kind() == ValueKind::Tuple && w.children().size() == 2,
             "expected a pair");
      for (const auto& c : w.children()) leaf(c);
      break;
    case FunctorKind::Powerset:
      expect(w.kind() == ValueKind::SetOf, "expected a set");
      check_canonical_set(w);
      for (const auto& c : w.children()) leaf(c);
      break;
    case FunctorKind::DirectedHyper: {
      expect(w.kind() == ValueKind::Tuple && w.children().size() == 2,
             "expected (vertex, set) pair");
      leaf(w.children()[0]);
      const Value& s = w.children()[1];
      expect(s.kind() == ValueKind::SetOf, "expected a set in second slot");
      check_canonical_set(s);
      for (const auto& c : s.children()) leaf(c);
      break;
    }
    case FunctorKind::KTuple: {
      expect(w.kind() == ValueKind::Tuple &&
                 w.children().size() == static_cast<std::size_t>(spec.k()),
             "expected a " + std::to_string(spec.k()) + "-tuple");
      for (const auto& c : w.children()) leaf(c);
      if (spec.min_equal() >= 2) {
        std::vector<Value> sorted(w.children());
        std::sort(sorted.begin(), sorted.end());
        std::size_t best = 1, run = 1;
        for (std::size_t i = 1; i < sorted.size(); ++i) {
          run = sorted[i] == sorted[i - 1] ? run + 1 : 1;
          best = std::max(best, run);
        }
        expect(best >= static_cast<std::size_t>(spec.min_equal()),
               "needs at least " + std::to_string(spec.min_equal()) +
                   " equal components");
      }
      break;
    }
    case FunctorKind::Colored: {
      expect(w.kind() == ValueKind::Colored, "expected a colored value");
      expect(spec.edge_colors().contains(w.label()),
             "unknown edge color " + w.label());
      LeafCheck pair_leaf = [&](const Value& u) {
        if (u.kind() != ValueKind::Colored ||
            !spec.vertex_colors().contains(u.label()))
          throw MalformedValue(
              "value " + u.to_string() +
              " is not a (vertex color, vertex) pair of " + spec.describe());
        leaf(u.inner());
      };
      validate_rec(spec.inner(), w.inner(), pair_leaf);
      break;
    }
    case FunctorKind::Sum:
      expect(w.kind() == ValueKind::Tagged, "expected a tagged value");
      expect(w.part() < spec.parts().size(), "tag out of range");
      validate_rec(spec.parts()[w.part()], w.inner(), leaf);
      break;
  }
}

using LeafMap = std::function<Value(const Value&)>;

Value map_rec(const FunctorSpec& spec, const Value& w, const LeafMap& leaf) {
  switch (spec.kind()) {
    case FunctorKind::Identity:
      return leaf(w);
    case FunctorKind::UPair:
    case FunctorKind::Powerset: {
      std::vector<Value> members;
      members.reserve(w.children().size());
      for (const auto& c : w.children()) members.push_back(leaf(c));
      return Value::set_of(std::move(members));
    }
    case FunctorKind::DPair:
      return Value::tuple({leaf(w.children()[0]), leaf(w.children()[1])});
    case FunctorKind::DirectedHyper: {
      std::vector<Value> members;
      for (const auto& c : w.children()[1].children())
        members.push_back(leaf(c));
      return Value::tuple(
          {leaf(w.children()[0]), Value::set_of(std::move(members))});
    }
    case FunctorKind::KTuple: {
      std::vector<Value> comps;
      comps.reserve(w.children().size());
      for (const auto& c : w.children()) comps.push_back(leaf(c));
      return Value::tuple(std::move(comps));
    }
    case FunctorKind::Colored: {
      LeafMap pair_leaf = [&](const Value& u) {
        return Value::colored(u.label(), leaf(u.inner()));
      };
      return Value::colored(w.label(), map_rec(spec.inner(), w.inner(),
                                               pair_leaf));
    }
    case FunctorKind::Sum:
      return Value::tagged(w.part(),
                           map_rec(spec.parts()[w.part()], w.inner(), leaf));
  }
  return w;
}

}  // namespace

std::vector<Value> enumerate_values(const FunctorSpec& spec,
                                    const FiniteSet& vertices,
                                    std::uint64_t cap) {
  ValueCount c = count_values(spec, vertices.size());
  if (c.value > cap) throw EnumerationCapExceeded(c.value, c.exact, cap);
  std::vector<Value> leaves;
  leaves.reserve(vertices.size());
  for (const auto& v : vertices) leaves.push_back(Value::atom(v));
  auto out = enumerate_rec(spec, leaves);
  std::sort(out.begin(), out.end());
  return out;
}

void validate_value(const FunctorSpec& spec, const Value& value) {
  LeafCheck atom_leaf = [](const Value& u) {
    if (u.kind() != ValueKind::Atom)
      throw MalformedValue("expected a vertex atom, got " + u.to_string());
  };
  validate_rec(spec, value, atom_leaf);
}

Value map_value(const FunctorSpec& spec, const IdMap& vertex_map,
                const Value& value) {
  validate_value(spec, value);
  LeafMap atom_leaf = [&](const Value& u) {
    auto it = vertex_map.find(u.label());
    if (it == vertex_map.end())
      throw DomainMismatch("vertex map has no entry for " + u.label());
    return Value::atom(it->second);
  };
  return map_rec(spec, value, atom_leaf);
}

Value map_value_leaves(const FunctorSpec& spec, const Value& value,
                       const std::function<Value(const Value&)>& fn) {
  return map_rec(spec, value, fn);
}

FiniteSet support(const FunctorSpec& spec, const Value& value) {
  validate_value(spec, value);
  std::vector<ElementId> atoms;
  LeafMap collect = [&](const Value& u) {
    atoms.push_back(u.label());
    return u;
  };
  map_rec(spec, value, collect);
  return FiniteSet(std::move(atoms));
}

bool value_in_subset(const FunctorSpec& spec, const Value& value,
                     const FiniteSet& subset) {
  return support(spec, value).subset_of(subset);
}

}  // namespace fgraph
