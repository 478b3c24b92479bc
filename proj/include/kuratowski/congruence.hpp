#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "kuratowski/algebra.hpp"

namespace kuratowski {

/// Disjoint classes covering 0..n-1. Classes are ordered by their least
/// member, and members inside a class ascend.
struct Partition {
  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
  bool same_class(ElementId a, ElementId b) const { return class_of.at(a) == class_of.at(b); }

  static Partition discrete(std::size_t n) {
    Partition p;
    for (ElementId i = 0; i < n; ++i) {
      p.classes.push_back(ElementSet::single(i));
      p.class_of.push_back(i);
    }
    return p;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), ElementId{0});
  }
  ElementId find(ElementId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false if already joined. The smaller root survives.
  bool unite(ElementId a, ElementId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<ElementId> parent_;
};

}  // namespace detail

/// Least congruence containing the given pairs.
inline Partition congruence_closure(const MagmaTable& table,
                                    const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  const auto n = table.order();
  detail::UnionFind uf(n);
  std::vector<std::pair<ElementId, ElementId>> pending;
  for (auto [a, b] : pairs) {
    table.check_id(a);
    table.check_id(b);
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  }
  // Each successful merge is recorded once; at most n-1 merges happen, and
  // translating a generating pair of each merge suffices for compatibility.
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (ElementId x = 0; x < n; ++x) {
      const std::pair<ElementId, ElementId> images[] = {
          {table.entry(x, a), table.entry(x, b)}, {table.entry(a, x), table.entry(b, x)}};
      for (auto [u, v] : images) {
        if (uf.unite(u, v)) pending.emplace_back(u, v);
      }
    }
  }
  Partition p;
  p.class_of.assign(n, 0);
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (ElementId x = 0; x < n; ++x) {
    const ElementId root = uf.find(x);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = p.classes.size();
      p.classes.emplace_back();
    }
    p.classes[slot[root]].insert(x);
    p.class_of[x] = slot[root];
  }
  return p;
}

inline bool is_congruence(const MagmaTable& table, const Partition& p) {
  const auto n = table.order();
  if (p.class_of.size() != n) return false;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (!p.same_class(a, b)) continue;
      for (ElementId x = 0; x < n; ++x) {
        if (!p.same_class(table.entry(x, a), table.entry(x, b)) ||
            !p.same_class(table.entry(a, x), table.entry(b, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

struct Quotient {
  MagmaTable table;
  /// projection[x] is the quotient element holding x.
  std::vector<ElementId> projection;
  /// representatives[q] is the least original id in class q.
  std::vector<ElementId> representatives;
};

/// Quotient of table by the congruence p; element q of the result stands for
/// class q and is named after its least member.
inline Quotient quotient_table(const MagmaTable& table, const Partition& p) {
  if (!is_congruence(table, p)) throw InputError("quotient_table: partition is not a congruence");
  Quotient q;
  for (const auto& c : p.classes) q.representatives.push_back(c.front());
  for (ElementId x = 0; x < table.order(); ++x) {
    q.projection.push_back(static_cast<ElementId>(p.class_of[x]));
  }
  const auto m = p.size();
  std::vector<std::vector<ElementId>> rows(m, std::vector<ElementId>(m));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(table.name(q.representatives[i]));
    for (std::size_t k = 0; k < m; ++k) {
      rows[i][k] = q.projection[table.entry(q.representatives[i], q.representatives[k])];
    }
  }
  q.table = MagmaTable(std::move(rows), std::move(names));
  return q;
}

}  // namespace kuratowski
