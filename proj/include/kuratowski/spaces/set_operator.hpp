#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kuratowski/op_word.hpp"
#include "kuratowski/spaces/finite_space.hpp"

namespace kuratowski::spaces {

enum class OperatorKind { topological_closure, abstract };

/// A map from subsets of an n-point set to subsets, tabulated over all 2^n
/// inputs in binary-counting order.
struct SetOperator {
  std::size_t points = 0;
  OperatorKind kind = OperatorKind::abstract;
  std::vector<PointSet> images;

  PointSet operator()(PointSet a) const { return images[a.bits()]; }
};

inline std::size_t subset_count(std::size_t n) { return std::size_t{1} << n; }

inline SetOperator closure_operator(const FiniteSpace& space) {
  SetOperator op{space.points(), OperatorKind::topological_closure, {}};
  op.images.resize(subset_count(space.points()));
  // closure(A) is the union of closures of its points.
  std::vector<PointSet> point_closure(space.points());
  for (std::size_t p = 0; p < space.points(); ++p) {
    point_closure[p] = closure(space, PointSet::single(p));
  }
  for (std::size_t m = 1; m < op.images.size(); ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    op.images[m] = op.images[m & (m - 1)] | point_closure[low];
  }
  return op;
}

/// Accepts the table only if the operator is expansive (B ⊆ f(B)),
/// increasing and idempotent; otherwise throws ValidationError naming the
/// property and a witness subset.
inline SetOperator abstract_operator(std::size_t n, std::vector<PointSet> images) {
  if (n == 0 || n > kMaxPoints) throw CapacityError("operators need 1..16 points");
  if (images.size() != subset_count(n)) {
    throw InputError("operator needs " + std::to_string(subset_count(n)) + " images, got " +
                     std::to_string(images.size()));
  }
  const PointSet whole = PointSet::full(n);
  for (std::size_t m = 0; m < images.size(); ++m) {
    const PointSet a(static_cast<PointSet::mask_type>(m));
    if (!images[m].subset_of(whole)) {
      throw ValidationError("image of " + a.to_bitstring(n) + " has points outside X");
    }
    if (!a.subset_of(images[m])) {
      throw ValidationError("not expansive at " + a.to_bitstring(n));
    }
  }
  for (std::size_t m = 0; m < images.size(); ++m) {
    const PointSet a(static_cast<PointSet::mask_type>(m));
    if (images[images[m].bits()] != images[m]) {
      throw ValidationError("not idempotent at " + a.to_bitstring(n));
    }
    // Monotonicity along single-point extensions implies it everywhere.
    for (std::size_t p = 0; p < n; ++p) {
      if (a.contains(p)) continue;
      const PointSet b = a | PointSet::single(p);
      if (!images[m].subset_of(images[b.bits()])) {
        throw ValidationError("not increasing: f(" + a.to_bitstring(n) + ") ⊄ f(" +
                              b.to_bitstring(n) + ")");
      }
    }
  }
  return SetOperator{n, OperatorKind::abstract, std::move(images)};
}

/// Grid point (x, y) has index y * width + x.
inline SetOperator convex_hull_operator(std::size_t width, std::size_t height) {
  const std::size_t n = width * height;
  if (width == 0 || height == 0 || n > kMaxPoints) {
    throw CapacityError("convex hull grid must have 1..16 points");
  }
  struct Pt {
    long x, y;
  };
  std::vector<Pt> grid;
  for (std::size_t i = 0; i < n; ++i) {
    grid.push_back({static_cast<long>(i % width), static_cast<long>(i / width)});
  }
  auto cross = [](Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };

  std::vector<PointSet> images(subset_count(n));
  std::vector<Pt> pts, hull;
  for (std::size_t m = 1; m < images.size(); ++m) {
    pts.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1u) pts.push_back(grid[i]);
    }
    std::sort(pts.begin(), pts.end(),
              [](Pt a, Pt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    // Monotone chain, counter-clockwise, collinear points dropped.
    hull.assign(2 * pts.size(), Pt{});
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    if (k > 1) --k;  // last point repeats the first
    hull.resize(k);

    PointSet img;
    for (std::size_t i = 0; i < n; ++i) {
      const Pt q = grid[i];
      bool inside = true;
      if (hull.size() == 1) {
        inside = q.x == hull[0].x && q.y == hull[0].y;
      } else if (hull.size() == 2) {
        inside = cross(hull[0], hull[1], q) == 0 &&
                 std::min(hull[0].x, hull[1].x) <= q.x && q.x <= std::max(hull[0].x, hull[1].x) &&
                 std::min(hull[0].y, hull[1].y) <= q.y && q.y <= std::max(hull[0].y, hull[1].y);
      } else {
        for (std::size_t e = 0; e < hull.size() && inside; ++e) {
          inside = cross(hull[e], hull[(e + 1) % hull.size()], q) >= 0;
        }
      }
      if (inside) img.insert(i);
    }
    images[m] = img;
  }
  return abstract_operator(n, std::move(images));
}

/// Applies the letters of w left to right: C complements, K applies op.
inline PointSet eval_word(const SetOperator& op, const OpWord& w, PointSet a) {
  for (char c : w.letters()) a = (c == 'C') ? a.complement(op.points) : op(a);
  return a;
}

inline PointSet eval_word(const FiniteSpace& space, const OpWord& w, PointSet a) {
  for (char c : w.letters()) {
    a = (c == 'C') ? a.complement(space.points()) : closure(space, a);
  }
  return a;
}

}  // namespace kuratowski::spaces
