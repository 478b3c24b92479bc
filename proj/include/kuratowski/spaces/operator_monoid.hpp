#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "kuratowski/monoid.hpp"
#include "kuratowski/spaces/set_operator.hpp"

namespace kuratowski::spaces {

/// A total map on subsets, tabulated in binary-counting order.
using Transform = std::vector<PointSet>;

/// The monoid generated by complement and one closure-like operator, acting
/// on the subsets of a finite set.
struct OperatorMonoid {
  std::size_t points = 0;
  std::vector<Transform> ops;
  /// table.entry(i, k) is ops[i] ∘ ops[k] (ops[k] applied first).
  MagmaTable table;
  /// sigma_image[i] is the index in ops of the operation induced by s_i.
  std::array<ElementId, kOperationCount> sigma_image{};
  /// All (i, k), i < k, where s_i and s_k induce the same operation.
  std::vector<std::pair<ElementId, ElementId>> collapsed_relations;

  std::size_t size() const { return ops.size(); }
  bool identifies(ElementId i, ElementId k) const { return sigma_image[i] == sigma_image[k]; }
};

/// Hard cap on the number of distinct operations explored.
inline constexpr std::size_t kMaxOperatorMonoid = 64;

inline Transform word_transform(const SetOperator& op, const OpWord& w) {
  Transform t(op.images.size());
  for (std::size_t m = 0; m < t.size(); ++m) {
    t[m] = eval_word(op, w, PointSet(static_cast<PointSet::mask_type>(m)));
  }
  return t;
}

/// Closes {identity} under post-composition with complement and op. Elements
/// are ordered by the least s_i inducing them and named after it.
inline OperatorMonoid operation_monoid(const SetOperator& op) {
  const std::size_t count = op.images.size();
  const PointSet whole = PointSet::full(op.points);
  Transform identity(count);
  for (std::size_t m = 0; m < count; ++m) identity[m] = PointSet(static_cast<PointSet::mask_type>(m));

  std::vector<Transform> found{identity};
  std::map<Transform, std::size_t> index{{identity, 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (char letter : {'C', 'K'}) {
      Transform next(count);
      for (std::size_t m = 0; m < count; ++m) {
        const PointSet a = found[head][m];
        next[m] = letter == 'C' ? PointSet(~a.bits() & whole.bits()) : op(a);
      }
      if (index.count(next)) continue;
      if (found.size() >= kMaxOperatorMonoid) {
        throw ConstructionError("operator monoid exceeds " + std::to_string(kMaxOperatorMonoid) +
                                " elements");
      }
      index.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }

  const auto& km = kuratowski_monoid();
  std::array<std::size_t, kOperationCount> bfs_image{};
  for (ElementId i = 0; i < kOperationCount; ++i) {
    bfs_image[i] = index.at(word_transform(op, km.words[i]));
  }
  // New order: first-hit by s0..s13, then anything no reduced word reaches.
  std::vector<std::size_t> order;
  std::vector<bool> placed(found.size(), false);
  for (ElementId i = 0; i < kOperationCount; ++i) {
    if (!placed[bfs_image[i]]) {
      placed[bfs_image[i]] = true;
      order.push_back(bfs_image[i]);
    }
  }
  std::vector<std::string> names;
  for (auto o : order) {
    for (ElementId i = 0; i < kOperationCount; ++i) {
      if (bfs_image[i] == o) {
        names.push_back(sigma_name(i));
        break;
      }
    }
  }
  for (std::size_t o = 0; o < found.size(); ++o) {
    if (!placed[o]) {
      order.push_back(o);
      names.push_back("op" + std::to_string(o));
    }
  }
  std::vector<std::size_t> position(found.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;

  OperatorMonoid out;
  out.points = op.points;
  for (auto o : order) out.ops.push_back(found[o]);
  for (ElementId i = 0; i < kOperationCount; ++i) {
    out.sigma_image[i] = static_cast<ElementId>(position[bfs_image[i]]);
  }
  for (ElementId i = 0; i < kOperationCount; ++i) {
    for (ElementId k = i + 1; k < kOperationCount; ++k) {
      if (out.sigma_image[i] == out.sigma_image[k]) out.collapsed_relations.emplace_back(i, k);
    }
  }
  const std::size_t size = out.ops.size();
  if (size > kMaxOrder) throw CapacityError("operator monoid too large for a magma table");
  std::map<Transform, ElementId> lookup;
  for (ElementId i = 0; i < size; ++i) lookup.emplace(out.ops[i], i);
  std::vector<std::vector<ElementId>> rows(size, std::vector<ElementId>(size));
  for (ElementId i = 0; i < size; ++i) {
    for (ElementId k = 0; k < size; ++k) {
      Transform c(count);
      for (std::size_t m = 0; m < count; ++m) c[m] = out.ops[i][out.ops[k][m].bits()];
      const auto it = lookup.find(c);
      if (it == lookup.end()) throw ConstructionError("operator monoid not closed");
      rows[i][k] = it->second;
    }
  }
  out.table = MagmaTable(std::move(rows), std::move(names));
  return out;
}

inline OperatorMonoid operation_monoid(const FiniteSpace& space) {
  return operation_monoid(closure_operator(space));
}

}  // namespace kuratowski::spaces
