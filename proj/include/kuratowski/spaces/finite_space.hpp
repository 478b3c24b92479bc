#pragma once

#include <array>
#include <string>
#include <vector>

#include "kuratowski/spaces/point_set.hpp"

namespace kuratowski::spaces {

/// A topology on n points, stored as the minimal open neighbourhood of each
/// point. Open sets are exactly the unions of minimal neighbourhoods.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Throws ValidationError unless the neighbourhoods form a preorder
  /// (p in N[p]; q in N[p] implies N[q] ⊆ N[p]).
  FiniteSpace(std::size_t n, const std::vector<PointSet>& min_nbhd) : n_(n) {
    if (n == 0 || n > kMaxPoints) {
      throw CapacityError("finite spaces need 1..16 points, got " + std::to_string(n));
    }
    if (min_nbhd.size() != n) throw InputError("need one neighbourhood per point");
    for (std::size_t p = 0; p < n; ++p) nbhd_[p] = min_nbhd[p];
    for (std::size_t p = 0; p < n; ++p) {
      if (!nbhd_[p].subset_of(PointSet::full(n))) {
        throw ValidationError("neighbourhood of point " + std::to_string(p) +
                              " mentions points outside the space");
      }
      if (!nbhd_[p].contains(p)) {
        throw ValidationError("point " + std::to_string(p) + " is not in its own neighbourhood");
      }
      for (auto q : nbhd_[p].points()) {
        if (!nbhd_[q].subset_of(nbhd_[p])) {
          throw ValidationError("neighbourhoods not transitive at points " + std::to_string(p) +
                                ", " + std::to_string(q));
        }
      }
    }
  }

  std::size_t points() const { return n_; }
  PointSet full() const { return PointSet::full(n_); }
  PointSet min_nbhd(std::size_t p) const { return nbhd_.at(p); }
  std::vector<PointSet> min_nbhds() const { return {nbhd_.begin(), nbhd_.begin() + n_}; }

  bool is_open(PointSet u) const {
    for (auto p : u.points()) {
      if (!nbhd_[p].subset_of(u)) return false;
    }
    return true;
  }

  /// Every open set in increasing bit order.
  std::vector<PointSet> opens() const {
    std::vector<PointSet> out;
    for (PointSet::mask_type m = 0; m <= full().bits(); ++m) {
      if (is_open(PointSet(m))) out.push_back(PointSet(m));
    }
    return out;
  }

  bool is_discrete() const {
    for (std::size_t p = 0; p < n_; ++p) {
      if (nbhd_[p] != PointSet::single(p)) return false;
    }
    return true;
  }

  bool operator==(const FiniteSpace& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t p = 0; p < n_; ++p) {
      if (nbhd_[p] != o.nbhd_[p]) return false;
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::array<PointSet, kMaxPoints> nbhd_{};
};

/// Points whose minimal neighbourhood meets a.
inline PointSet closure(const FiniteSpace& space, PointSet a) {
  PointSet out;
  for (std::size_t p = 0; p < space.points(); ++p) {
    if (space.min_nbhd(p).intersects(a)) out.insert(p);
  }
  return out;
}

inline PointSet interior(const FiniteSpace& space, PointSet a) {
  PointSet out;
  for (std::size_t p = 0; p < space.points(); ++p) {
    if (space.min_nbhd(p).subset_of(a)) out.insert(p);
  }
  return out;
}

/// Closures of open sets are open.
inline bool is_extremally_disconnected(const FiniteSpace& space) {
  for (auto u : space.opens()) {
    if (!space.is_open(closure(space, u))) return false;
  }
  return true;
}

/// Checks the open-set axioms for the family and derives the minimal
/// neighbourhoods. Unions and intersections of pairs suffice for a finite
/// family.
inline FiniteSpace validate_topology(const std::vector<PointSet>& opens, std::size_t n) {
  if (n == 0 || n > kMaxPoints) {
    throw CapacityError("finite spaces need 1..16 points, got " + std::to_string(n));
  }
  const PointSet whole = PointSet::full(n);
  auto member = [&](PointSet s) {
    for (auto o : opens) {
      if (o == s) return true;
    }
    return false;
  };
  for (auto o : opens) {
    if (!o.subset_of(whole)) {
      throw ValidationError("open set " + o.to_bitstring(n) + " has points outside X");
    }
  }
  if (!member(PointSet{})) throw ValidationError("empty set is not open");
  if (!member(whole)) throw ValidationError("whole space X is not open");
  for (auto a : opens) {
    for (auto b : opens) {
      if (!member(a | b)) {
        throw ValidationError("not closed under union: " + a.to_bitstring(n) + " ∪ " +
                              b.to_bitstring(n));
      }
      if (!member(a & b)) {
        throw ValidationError("not closed under intersection: " + a.to_bitstring(n) + " ∩ " +
                              b.to_bitstring(n));
      }
    }
  }
  std::vector<PointSet> nbhd(n, whole);
  for (auto o : opens) {
    for (auto p : o.points()) nbhd[p] = nbhd[p] & o;
  }
  return FiniteSpace(n, nbhd);
}

inline FiniteSpace discrete_space(std::size_t n) {
  std::vector<PointSet> nb;
  for (std::size_t p = 0; p < n; ++p) nb.push_back(PointSet::single(p));
  return FiniteSpace(n, nb);
}

inline FiniteSpace indiscrete_space(std::size_t n) {
  return FiniteSpace(n, std::vector<PointSet>(n, PointSet::full(n)));
}

/// X = {a, b} with opens ∅, {a}, X; a is point 0.
inline FiniteSpace sierpinski_space() {
  return validate_topology({PointSet{}, PointSet::of({0}), PointSet::of({0, 1})}, 2);
}

}  // namespace kuratowski::spaces
