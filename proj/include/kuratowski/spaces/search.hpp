#pragma once

// Orbits of sets under the fourteen operations, extremal searches over
// finite spaces, and exhaustive checks of implications between relations.

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "kuratowski/monoid.hpp"
#include "kuratowski/spaces/enumerate.hpp"
#include "kuratowski/spaces/operator_monoid.hpp"

namespace kuratowski::spaces {

struct Orbit {
  std::array<PointSet, kOperationCount> images{};  // images[i] = s_i(A)
  std::size_t size = 0;                           // number of distinct images
};

namespace detail {

/// Evaluates the 14 words on a, and independently closes {a} under C and
/// the operator. The two must produce the same family of sets; a larger
/// family would contradict the fourteen-set bound and throws.
inline Orbit orbit_from_closure(const std::vector<PointSet>& closure_table, std::size_t n,
                                PointSet a) {
  const auto& words = kuratowski_monoid().words;
  const PointSet whole = PointSet::full(n);
  auto complement = [&](PointSet x) { return PointSet(~x.bits() & whole.bits()); };
  Orbit o;
  for (ElementId i = 0; i < kOperationCount; ++i) {
    PointSet x = a;
    for (char c : words[i].letters()) x = c == 'C' ? complement(x) : closure_table[x.bits()];
    o.images[i] = x;
  }
  auto sorted = o.images;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end());

  std::vector<PointSet> reached{a};
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (auto next : {complement(reached[i]), closure_table[reached[i].bits()]}) {
      if (std::find(reached.begin(), reached.end(), next) == reached.end()) {
        reached.push_back(next);
        if (reached.size() > kOperationCount) {
          throw ConstructionError("orbit of " + a.to_bitstring(n) + " exceeds fourteen sets");
        }
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  if (!std::equal(reached.begin(), reached.end(), sorted.begin(), distinct)) {
    throw ConstructionError("orbit of " + a.to_bitstring(n) + " is not covered by the fourteen words");
  }
  o.size = reached.size();
  return o;
}

}  // namespace detail

inline Orbit kuratowski_orbit(const FiniteSpace& space, PointSet a) {
  if (!a.subset_of(space.full())) throw InputError("set has points outside the space");
  return detail::orbit_from_closure(closure_operator(space).images, space.points(), a);
}

struct ExtremalSet {
  PointSet set;
  std::size_t orbit_size = 0;
};

inline Orbit kuratowski_orbit(const SetOperator& op, PointSet a) {
  if (!a.subset_of(PointSet::full(op.points))) throw InputError("set has points outside the space");
  return detail::orbit_from_closure(op.images, op.points, a);
}

/// A subset with the largest orbit; ties go to the least bit pattern.
inline ExtremalSet max_kuratowski_set(const SetOperator& op) {
  ExtremalSet best;
  for (std::size_t m = 0; m < op.images.size(); ++m) {
    const PointSet a(static_cast<PointSet::mask_type>(m));
    const auto o = detail::orbit_from_closure(op.images, op.points, a);
    if (o.size > best.orbit_size) best = {a, o.size};
  }
  return best;
}

inline ExtremalSet max_kuratowski_set(const FiniteSpace& space) {
  return max_kuratowski_set(closure_operator(space));
}

struct FourteenRow {
  std::size_t points = 0;
  std::size_t spaces_checked = 0;
  std::size_t best_orbit = 0;
  FiniteSpace witness;
  PointSet witness_set;
};

/// For each n <= max_n, the largest orbit over all spaces (one per
/// homeomorphism class) and all subsets. The witness is the first space in
/// canonical order attaining it. Throws if any orbit exceeds fourteen.
inline std::vector<FourteenRow> search_fourteen(std::size_t max_n, unsigned threads = 1) {
  if (max_n == 0 || max_n > kMaxEnumerationPoints) {
    throw CapacityError("search_fourteen supports 1..7 points");
  }
  threads = std::max(1u, threads);
  std::vector<FourteenRow> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& classes = homeomorphism_classes(n, threads);
    std::vector<ExtremalSet> best(classes.size());
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < classes.size(); i += threads) {
        best[i] = max_kuratowski_set(classes[i]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    FourteenRow row;
    row.points = n;
    row.spaces_checked = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (best[i].orbit_size > row.best_orbit) {
        row.best_orbit = best[i].orbit_size;
        row.witness = classes[i];
        row.witness_set = best[i].set;
      }
    }
    out.push_back(row);
  }
  return out;
}

/// "s_i = s_k" in the induced monoid.
struct SigmaEquality {
  ElementId lhs = 0, rhs = 0;
};
/// The space is discrete.
struct Discreteness {};

using RelationSpec = std::variant<SigmaEquality, Discreteness>;

/// Parses "i=k" (optionally "s2=s7") or "discrete".
inline RelationSpec parse_relation(std::string_view text) {
  if (text == "discrete") return Discreteness{};
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw InputError("relation must be i=k or discrete");
  auto num = [&](std::string_view s) {
    if (!s.empty() && (s.front() == 's' || s.front() == 'S')) s.remove_prefix(1);
    ElementId v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v >= kOperationCount) {
      throw InputError("bad operation index in relation '" + std::string(text) + "'");
    }
    return v;
  };
  return SigmaEquality{num(text.substr(0, eq)), num(text.substr(eq + 1))};
}

inline std::string to_string(const RelationSpec& r) {
  if (std::holds_alternative<Discreteness>(r)) return "discrete";
  const auto& e = std::get<SigmaEquality>(r);
  return std::to_string(e.lhs) + "=" + std::to_string(e.rhs);
}

inline bool relation_holds(const RelationSpec& r, const FiniteSpace& space,
                           const OperatorMonoid& monoid) {
  if (std::holds_alternative<Discreteness>(r)) return space.is_discrete();
  const auto& e = std::get<SigmaEquality>(r);
  return monoid.identifies(e.lhs, e.rhs);
}

struct ImplicationVerdict {
  bool holds = true;
  std::size_t spaces_checked = 0;
  std::size_t premise_satisfied = 0;
  std::optional<FiniteSpace> counterexample;
};

/// Over every space with at most max_n points (one per homeomorphism class),
/// checks that the premise implies the conclusion. Stops at the first
/// counterexample.
inline ImplicationVerdict check_implication(const RelationSpec& premise,
                                            const RelationSpec& conclusion, std::size_t max_n) {
  if (max_n == 0 || max_n > 6) throw CapacityError("check_implication supports 1..6 points");
  ImplicationVerdict v;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& space : homeomorphism_classes(n)) {
      ++v.spaces_checked;
      const auto monoid = operation_monoid(space);
      if (!relation_holds(premise, space, monoid)) continue;
      ++v.premise_satisfied;
      if (!relation_holds(conclusion, space, monoid)) {
        v.holds = false;
        v.counterexample = space;
        return v;
      }
    }
  }
  return v;
}

/// First space (by size, then canonical order) satisfying pred, if any.
template <typename Pred>
std::optional<FiniteSpace> find_space(std::size_t max_n, Pred&& pred) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& space : homeomorphism_classes(n)) {
      if (pred(space)) return space;
    }
  }
  return std::nullopt;
}

}  // namespace kuratowski::spaces
