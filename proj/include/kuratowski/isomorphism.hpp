#pragma once

// Isomorphism and anti-isomorphism search between closed subsets of finite
// magmas, automorphism groups, and classification into isomorphism types.

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuratowski/algebra.hpp"

namespace kuratowski {

enum class MorphismKind { isomorphism, anti_isomorphism, homomorphism };

inline constexpr ElementId kNoImage = static_cast<ElementId>(-1);

/// A map from a closed subset of one table into another table. image has one
/// slot per source element; slots outside the domain hold kNoImage.
struct Morphism {
  MorphismKind kind = MorphismKind::isomorphism;
  ElementSet domain;
  ElementSet codomain;
  std::vector<ElementId> image;

  ElementId operator()(ElementId x) const { return image.at(x); }
  bool operator==(const Morphism&) const = default;
};

/// Isomorphism-invariant summary used to prune the search.
struct Fingerprint {
  std::size_t size = 0;
  std::size_t idempotent_count = 0;
  bool monoid = false;
  bool group = false;
  std::vector<ElementProfile> profiles;  // sorted

  bool operator==(const Fingerprint&) const = default;

  std::string to_string() const {
    std::string out = "size=" + std::to_string(size) +
                      " idempotents=" + std::to_string(idempotent_count) +
                      " monoid=" + (monoid ? "1" : "0") + " group=" + (group ? "1" : "0") +
                      " profiles=";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(profiles[i].index) + '/' + std::to_string(profiles[i].period);
    }
    return out;
  }
};

inline Fingerprint fingerprint(const MagmaTable& table, ElementSet s) {
  Fingerprint f;
  f.size = s.size();
  f.idempotent_count = idempotents(table, s).size();
  f.monoid = is_monoid(table, s);
  f.group = f.monoid && is_group(table, s);
  s.for_each([&](ElementId x) { f.profiles.push_back(element_profile(table, x)); });
  std::sort(f.profiles.begin(), f.profiles.end());
  return f;
}

namespace detail {

/// Backtracking over profile-compatible bijections sa -> sb, sources in
/// ascending id order and candidates in ascending id order, so maps are
/// produced in lexicographic order. visit returns false to stop.
inline void search_bijections(const MagmaTable& ta, ElementSet sa, const MagmaTable& tb,
                              ElementSet sb, bool reverse,
                              const std::function<bool(const Morphism&)>& visit) {
  if (sa.size() != sb.size()) return;
  const auto src = sa.ids();
  const auto tgt = sb.ids();
  std::vector<ElementProfile> pa(ta.order()), pb(tb.order());
  for (auto x : src) pa[x] = element_profile(ta, x);
  for (auto y : tgt) pb[y] = element_profile(tb, y);

  Morphism m;
  m.kind = reverse ? MorphismKind::anti_isomorphism : MorphismKind::isomorphism;
  m.domain = sa;
  m.codomain = sb;
  m.image.assign(ta.order(), kNoImage);
  ElementSet used;
  bool stop = false;

  // Checks every product whose operands and result are all assigned and
  // involves the newly assigned element x.
  auto consistent = [&](ElementId x) {
    for (auto a : src) {
      if (m.image[a] == kNoImage) continue;
      for (auto [l, r] : {std::pair{a, x}, std::pair{x, a}}) {
        const ElementId p = ta.entry(l, r);
        if (m.image[p] == kNoImage) continue;
        const ElementId q = reverse ? tb.entry(m.image[r], m.image[l])
                                    : tb.entry(m.image[l], m.image[r]);
        if (m.image[p] != q) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == src.size()) {
      if (!visit(m)) stop = true;
      return;
    }
    const ElementId x = src[depth];
    for (auto y : tgt) {
      if (used.contains(y) || pa[x] != pb[y]) continue;
      m.image[x] = y;
      used.insert(y);
      // Products landing on elements assigned earlier were checked then;
      // this pass covers every triple completed by x.
      bool ok = consistent(x);
      if (ok) {
        for (std::size_t j = 0; j < depth && ok; ++j) {
          for (std::size_t k = 0; k < depth && ok; ++k) {
            const ElementId l = src[j], r = src[k];
            if (ta.entry(l, r) != x) continue;
            const ElementId q = reverse ? tb.entry(m.image[r], m.image[l])
                                        : tb.entry(m.image[l], m.image[r]);
            ok = (q == y);
          }
        }
      }
      if (ok) extend(depth + 1);
      used.erase(y);
      m.image[x] = kNoImage;
      if (stop) return;
    }
  };
  extend(0);
}

}  // namespace detail

/// Lexicographically least isomorphism sa -> sb, if any.
inline std::optional<Morphism> isomorphic(const MagmaTable& ta, ElementSet sa,
                                          const MagmaTable& tb, ElementSet sb) {
  ta.check_subset(sa);
  tb.check_subset(sb);
  if (sa.size() != sb.size()) return std::nullopt;
  if (fingerprint(ta, sa) != fingerprint(tb, sb)) return std::nullopt;
  std::optional<Morphism> found;
  detail::search_bijections(ta, sa, tb, sb, false, [&](const Morphism& m) {
    found = m;
    return false;
  });
  return found;
}

inline std::optional<Morphism> isomorphic(const MagmaTable& ta, const MagmaTable& tb) {
  return isomorphic(ta, ta.all(), tb, tb.all());
}

/// Lexicographically least anti-isomorphism sa -> sb, if any.
inline std::optional<Morphism> anti_isomorphic(const MagmaTable& ta, ElementSet sa,
                                               const MagmaTable& tb, ElementSet sb) {
  ta.check_subset(sa);
  tb.check_subset(sb);
  std::optional<Morphism> found;
  detail::search_bijections(ta, sa, tb, sb, true, [&](const Morphism& m) {
    found = m;
    return false;
  });
  return found;
}

namespace detail {

inline void check_bijection_of(const MagmaTable& table, ElementSet s,
                               std::span<const ElementId> map) {
  if (map.size() < table.order()) throw InputError("map shorter than table order");
  ElementSet hit;
  bool ok = true;
  s.for_each([&](ElementId x) {
    const ElementId y = map[x];
    if (y >= table.order() || !s.contains(y) || hit.contains(y)) ok = false;
    if (y < table.order()) hit.insert(y);
  });
  if (!ok) throw InputError("map is not a bijection of the subset");
}

}  // namespace detail

/// true iff map(x∘y) = map(y)∘map(x) on s. map is indexed by element id.
inline bool check_anti_morphism(const MagmaTable& table, ElementSet s,
                                std::span<const ElementId> map) {
  table.check_subset(s);
  detail::check_bijection_of(table, s, map);
  bool ok = true;
  s.for_each([&](ElementId x) {
    s.for_each([&](ElementId y) {
      if (map[table.entry(x, y)] != table.entry(map[y], map[x])) ok = false;
    });
  });
  return ok;
}

/// true iff map(x∘y) = map(x)∘map(y) on s.
inline bool check_morphism(const MagmaTable& table, ElementSet s,
                           std::span<const ElementId> map) {
  table.check_subset(s);
  detail::check_bijection_of(table, s, map);
  bool ok = true;
  s.for_each([&](ElementId x) {
    s.for_each([&](ElementId y) {
      if (map[table.entry(x, y)] != table.entry(map[x], map[y])) ok = false;
    });
  });
  return ok;
}

/// All automorphisms of the closed subset s in lexicographic order; the
/// identity always comes first.
inline std::vector<Morphism> automorphisms(const MagmaTable& table, ElementSet s) {
  table.check_subset(s);
  std::vector<Morphism> out;
  detail::search_bijections(table, s, table, s, false, [&](const Morphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// One isomorphism type found by classify().
struct IsoClass {
  std::vector<std::size_t> members;  // indices into the classified list
  ElementSet representative;
  std::string representative_name;
  Fingerprint fingerprint;
};

/// Partition semigroups into isomorphism classes, ordered by first
/// occurrence. The representative is the member whose canonical name comes
/// first (fewest generators, then dictionary order).
inline std::vector<IsoClass> classify(const MagmaTable& table,
                                      const std::vector<ElementSet>& semigroups) {
  std::vector<IsoClass> classes;
  for (std::size_t i = 0; i < semigroups.size(); ++i) {
    const ElementSet s = semigroups[i];
    const Fingerprint f = fingerprint(table, s);
    IsoClass* home = nullptr;
    for (auto& c : classes) {
      if (c.fingerprint != f) continue;
      const ElementSet first = semigroups[c.members.front()];
      if (isomorphic(table, first, table, s)) {
        home = &c;
        break;
      }
    }
    if (home) {
      home->members.push_back(i);
    } else {
      classes.push_back(IsoClass{{i}, s, {}, f});
    }
  }
  for (auto& c : classes) {
    ElementSet best_gens;
    bool have = false;
    for (auto idx : c.members) {
      const ElementSet g = canonical_generators(table, semigroups[idx]);
      if (!have || detail::shortlex_less(g, best_gens)) {
        best_gens = g;
        c.representative = semigroups[idx];
        have = true;
      }
    }
    c.representative_name = angle_name(best_gens);
  }
  return classes;
}

}  // namespace kuratowski
