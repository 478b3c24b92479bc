#pragma once

// Generation, enumeration and structural predicates for subsets of a finite
// magma. Subsets are always interpreted inside a single MagmaTable.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kuratowski/element_set.hpp"
#include "kuratowski/error.hpp"
#include "kuratowski/magma_table.hpp"

namespace kuratowski {

inline ElementId compose(const MagmaTable& table, ElementId a, ElementId b) {
  table.check_id(a);
  table.check_id(b);
  return table.entry(a, b);
}

/// A triple (a, b, c) with (a∘b)∘c != a∘(b∘c).
struct AssociativityViolation {
  ElementId a, b, c;
};

inline std::optional<AssociativityViolation> find_associativity_violation(
    const MagmaTable& table) {
  const auto n = static_cast<ElementId>(table.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = table.entry(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (table.entry(ab, c) != table.entry(a, table.entry(b, c))) {
          return AssociativityViolation{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_associative(const MagmaTable& table) {
  return !find_associativity_violation(table).has_value();
}

inline bool is_closed(const MagmaTable& table, ElementSet s) {
  bool closed = true;
  s.for_each([&](ElementId a) {
    s.for_each([&](ElementId b) {
      if (!s.contains(table.entry(a, b))) closed = false;
    });
  });
  return closed;
}

/// Least composition-closed subset containing gens.
inline ElementSet generate(const MagmaTable& table, ElementSet gens) {
  if (gens.empty()) throw InputError("generate: empty generator set");
  table.check_subset(gens);
  ElementSet closure = gens;
  std::vector<ElementId> worklist = gens.ids();
  while (!worklist.empty()) {
    const ElementId x = worklist.back();
    worklist.pop_back();
    // Snapshot: products with members added during this pass are handled
    // when those members are popped.
    for (ElementId y : closure.ids()) {
      for (ElementId z : {table.entry(x, y), table.entry(y, x)}) {
        if (!closure.contains(z)) {
          closure.insert(z);
          worklist.push_back(z);
        }
      }
    }
  }
  return closure;
}

/// Every nonempty closed subset of scope, sorted by (size, bit pattern).
inline std::vector<ElementSet> subsemigroups_within(const MagmaTable& table,
                                                    ElementSet scope) {
  table.check_subset(scope);
  if (scope.size() > kMaxOrder) {
    throw CapacityError("subsemigroup scan limited to " + std::to_string(kMaxOrder) +
                        " elements");
  }
  const auto scope_bits = scope.bits();
  std::vector<ElementSet> out;
  for (auto m = scope_bits; m != 0; m = (m - 1) & scope_bits) {
    ElementSet s(m);
    if (is_closed(table, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

inline std::vector<ElementSet> enumerate_subsemigroups(const MagmaTable& table) {
  return subsemigroups_within(table, table.all());
}

inline std::optional<ElementId> find_identity(const MagmaTable& table, ElementSet s) {
  table.check_subset(s);
  for (ElementId e : s.ids()) {
    bool ok = true;
    s.for_each([&](ElementId x) {
      if (table.entry(e, x) != x || table.entry(x, e) != x) ok = false;
    });
    if (ok) return e;
  }
  return std::nullopt;
}

inline bool is_monoid(const MagmaTable& table, ElementSet s) {
  return find_identity(table, s).has_value();
}

inline bool is_group(const MagmaTable& table, ElementSet s) {
  const auto e = find_identity(table, s);
  if (!e) return false;
  bool ok = true;
  s.for_each([&](ElementId x) {
    bool has_inverse = false;
    s.for_each([&](ElementId y) {
      if (table.entry(x, y) == *e && table.entry(y, x) == *e) has_inverse = true;
    });
    ok = ok && has_inverse;
  });
  return ok;
}

inline ElementSet idempotents(const MagmaTable& table, ElementSet s) {
  table.check_subset(s);
  ElementSet out;
  s.for_each([&](ElementId x) {
    if (table.entry(x, x) == x) out.insert(x);
  });
  return out;
}

/// Index and period of the monogenic subsemigroup generated by x: the least
/// i, p >= 1 with x^(i+p) = x^i.
struct ElementProfile {
  unsigned index = 1;
  unsigned period = 1;
  auto operator<=>(const ElementProfile&) const = default;
};

inline ElementProfile element_profile(const MagmaTable& table, ElementId x) {
  table.check_id(x);
  std::array<int, kMaxOrder> first_seen{};
  first_seen.fill(-1);
  ElementId power = x;
  for (int k = 1;; ++k) {
    if (first_seen[power] >= 0) {
      return {static_cast<unsigned>(first_seen[power]),
              static_cast<unsigned>(k - first_seen[power])};
    }
    first_seen[power] = k;
    power = table.entry(power, x);
  }
}

/// The subset argument is only used to check membership; powers of x stay
/// inside any closed s containing x.
inline ElementProfile element_profile(const MagmaTable& table, ElementSet s, ElementId x) {
  if (!s.contains(x)) throw InputError("element_profile: element not in subset");
  return element_profile(table, x);
}

namespace detail {

template <typename F>
void for_each_combination(const std::vector<ElementId>& pool, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return;
  while (true) {
    ElementSet pick;
    for (auto i : idx) pick.insert(pool[i]);
    f(pick);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Dictionary order on ascending id sequences.
inline bool dictionary_less(ElementSet a, ElementSet b) {
  const auto x = a.ids(), y = b.ids();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

/// Smaller collections first, then dictionary order.
inline bool shortlex_less(ElementSet a, ElementSet b) {
  return a.size() != b.size() ? a.size() < b.size() : dictionary_less(a, b);
}

}  // namespace detail

/// All generating subsets of s of minimum cardinality, in dictionary order.
inline std::vector<ElementSet> minimal_generating_collections(const MagmaTable& table,
                                                              ElementSet s) {
  std::vector<ElementSet> out;
  if (s.empty()) return out;
  const auto pool = s.ids();
  for (std::size_t k = 1; k <= pool.size() && out.empty(); ++k) {
    detail::for_each_combination(pool, k, [&](ElementSet g) {
      if (generate(table, g) == s) out.push_back(g);
    });
  }
  return out;
}

/// All inclusion-minimal generating subsets of s (no member can be dropped),
/// ordered by size and then dictionary order.
inline std::vector<ElementSet> irredundant_generating_collections(const MagmaTable& table,
                                                                  ElementSet s) {
  std::vector<ElementSet> out;
  if (s.empty()) return out;
  const auto pool = s.ids();
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    detail::for_each_combination(pool, k, [&](ElementSet g) {
      if (generate(table, g) != s) return;
      bool redundant = false;
      if (k > 1) {
        g.for_each([&](ElementId x) {
          ElementSet rest = g;
          rest.erase(x);
          if (generate(table, rest) == s) redundant = true;
        });
      }
      if (!redundant) out.push_back(g);
    });
  }
  return out;
}

/// First minimum-size generating collection in dictionary order.
inline ElementSet canonical_generators(const MagmaTable& table, ElementSet s) {
  auto all = minimal_generating_collections(table, s);
  if (all.empty()) throw InputError("canonical_generators: empty subset");
  return all.front();
}

inline std::string canonical_name(const MagmaTable& table, ElementSet s) {
  return angle_name(canonical_generators(table, s));
}

/// Sub-table of the closed subset s, elements renumbered in ascending id order.
inline MagmaTable restrict_table(const MagmaTable& table, ElementSet s) {
  if (!is_closed(table, s)) throw InputError("restrict_table: subset is not closed");
  const auto ids = s.ids();
  std::array<ElementId, kMaxOrder> local{};
  for (ElementId i = 0; i < ids.size(); ++i) local[ids[i]] = i;
  std::vector<std::vector<ElementId>> rows(ids.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    names.push_back(table.name(ids[i]));
    for (auto k : ids) rows[i].push_back(local[table.entry(ids[i], k)]);
  }
  return MagmaTable(std::move(rows), std::move(names));
}

}  // namespace kuratowski
