#pragma once

// Exhaustive generation of finite topologies, presented as preorders on the
// points (q in N[p] iff every open set containing p contains q).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "kuratowski/spaces/finite_space.hpp"

namespace kuratowski::spaces {

/// Exhaustive enumeration is limited to this many points.
inline constexpr std::size_t kMaxEnumerationPoints = 7;

namespace detail {

struct Preorder {
  std::size_t n = 0;
  std::array<std::uint8_t, kMaxEnumerationPoints> nb{};  // minimal neighbourhoods

  FiniteSpace to_space() const {
    std::vector<PointSet> v;
    for (std::size_t p = 0; p < n; ++p) v.push_back(PointSet(nb[p]));
    return FiniteSpace(n, v);
  }
};

/// Calls visit(next) for every preorder on n+1 points whose restriction to
/// the first n points is pre. Point n gets neighbourhood D ∪ {n} for a
/// down-closed D, and joins the neighbourhoods of an up-closed set U; each
/// member of U must already see all of D.
template <typename F>
void for_each_extension(const Preorder& pre, F&& visit) {
  const std::size_t m = pre.n;
  const unsigned limit = 1u << m;
  std::array<std::uint8_t, kMaxEnumerationPoints> up{};
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if ((pre.nb[q] >> p) & 1u) up[p] |= static_cast<std::uint8_t>(1u << q);
    }
  }
  std::vector<unsigned> downs, ups;
  for (unsigned s = 0; s < limit; ++s) {
    bool down_closed = true, up_closed = true;
    for (std::size_t p = 0; p < m; ++p) {
      if (!((s >> p) & 1u)) continue;
      if ((pre.nb[p] & ~s) != 0) down_closed = false;
      if ((up[p] & ~s) != 0) up_closed = false;
    }
    if (down_closed) downs.push_back(s);
    if (up_closed) ups.push_back(s);
  }
  for (unsigned d : downs) {
    for (unsigned u : ups) {
      bool ok = true;
      for (std::size_t p = 0; p < m && ok; ++p) {
        if (((u >> p) & 1u) && (d & ~pre.nb[p]) != 0) ok = false;
      }
      if (!ok) continue;
      Preorder next = pre;
      next.n = m + 1;
      next.nb[m] = static_cast<std::uint8_t>(d | (1u << m));
      for (std::size_t p = 0; p < m; ++p) {
        if ((u >> p) & 1u) next.nb[p] = static_cast<std::uint8_t>(next.nb[p] | (1u << m));
      }
      visit(next);
    }
  }
}

template <typename F>
void for_each_labeled(const Preorder& pre, std::size_t n, F& visit) {
  if (pre.n == n) {
    visit(pre);
    return;
  }
  for_each_extension(pre, [&](const Preorder& next) { for_each_labeled(next, n, visit); });
}

inline Preorder single_point() {
  Preorder p;
  p.n = 1;
  p.nb[0] = 1;
  return p;
}

/// Canonical form under relabelling: the permuted preorder whose adjacency
/// bits, read in order of growing leading principal submatrix, form the least
/// integer. Only relabellings that sort points by a structural key are tried.
struct CanonicalForm {
  std::uint64_t code = 0;
  Preorder form;
};

inline CanonicalForm canonical_form(const Preorder& pre) {
  const std::size_t n = pre.n;
  std::array<unsigned, kMaxEnumerationPoints> key{};
  std::array<unsigned, kMaxEnumerationPoints> base{};
  for (std::size_t p = 0; p < n; ++p) {
    unsigned ups = 0;
    for (std::size_t q = 0; q < n; ++q) ups += (pre.nb[q] >> p) & 1u;
    base[p] = static_cast<unsigned>(std::popcount(static_cast<unsigned>(pre.nb[p]))) * 8 + ups;
  }
  for (std::size_t p = 0; p < n; ++p) {
    unsigned below = 0, above = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p) continue;
      if ((pre.nb[p] >> q) & 1u) below += base[q];
      if ((pre.nb[q] >> p) & 1u) above += base[q];
    }
    key[p] = (base[p] << 16) | (below << 8) | above;
  }
  std::array<unsigned, kMaxEnumerationPoints> sorted_key = key;
  std::sort(sorted_key.begin(), sorted_key.begin() + n);

  std::array<std::size_t, kMaxEnumerationPoints> perm{};  // position -> point
  std::array<bool, kMaxEnumerationPoints> used{};
  const std::size_t total_bits = n * n;
  bool have_best = false;
  std::uint64_t best = 0;
  std::array<std::size_t, kMaxEnumerationPoints> best_perm{};

  auto rel = [&](std::size_t i, std::size_t j) -> std::uint64_t {
    return (pre.nb[perm[i]] >> perm[j]) & 1u;
  };
  auto search = [&](auto&& self, std::size_t k, std::uint64_t prefix, std::size_t bits) -> void {
    if (k == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p] || key[p] != sorted_key[k]) continue;
      perm[k] = p;
      std::uint64_t code = prefix;
      for (std::size_t j = 0; j < k; ++j) code = (code << 1) | rel(k, j);
      for (std::size_t i = 0; i < k; ++i) code = (code << 1) | rel(i, k);
      code = (code << 1) | rel(k, k);
      const std::size_t nbits = bits + 2 * k + 1;
      if (have_best && code > (best >> (total_bits - nbits))) continue;
      used[p] = true;
      self(self, k + 1, code, nbits);
      used[p] = false;
    }
  };
  search(search, 0, 0, 0);

  CanonicalForm out;
  out.code = best;
  out.form.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((pre.nb[best_perm[i]] >> best_perm[j]) & 1u) row = static_cast<std::uint8_t>(row | (1u << j));
    }
    out.form.nb[i] = row;
  }
  return out;
}

inline detail::Preorder to_preorder(const FiniteSpace& s) {
  if (s.points() > kMaxEnumerationPoints) throw CapacityError("canonical form needs <= 7 points");
  Preorder p;
  p.n = s.points();
  for (std::size_t i = 0; i < p.n; ++i) p.nb[i] = static_cast<std::uint8_t>(s.min_nbhd(i).bits());
  return p;
}

}  // namespace detail

/// Canonical representative of the homeomorphism class of s (<= 7 points).
inline FiniteSpace canonical_space(const FiniteSpace& s) {
  return detail::canonical_form(detail::to_preorder(s)).form.to_space();
}

/// Calls visit(space) for every topology on n labelled points.
template <typename F>
void for_each_labeled_space(std::size_t n, F&& visit) {
  if (n == 0 || n > kMaxEnumerationPoints) {
    throw CapacityError("enumeration supports 1..7 points, got " + std::to_string(n));
  }
  auto adapter = [&](const detail::Preorder& p) { visit(p.to_space()); };
  detail::for_each_labeled(detail::single_point(), n, adapter);
}

/// One canonical representative per homeomorphism class on n points, sorted
/// by canonical code. Results are cached; threads only affects speed.
inline const std::vector<FiniteSpace>& homeomorphism_classes(std::size_t n,
                                                             unsigned threads = 1) {
  if (n == 0 || n > kMaxEnumerationPoints) {
    throw CapacityError("enumeration supports 1..7 points, got " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::vector<std::vector<detail::Preorder>> levels;
  static std::vector<std::vector<FiniteSpace>> spaces;
  std::lock_guard lock(mutex);
  if (levels.empty()) {
    levels.push_back({detail::single_point()});
    spaces.push_back({detail::single_point().to_space()});
  }
  threads = std::max(1u, threads);
  while (levels.size() < n) {
    const auto& prev = levels.back();
    std::vector<std::map<std::uint64_t, detail::Preorder>> found(threads);
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < prev.size(); i += threads) {
        detail::for_each_extension(prev[i], [&](const detail::Preorder& next) {
          auto c = detail::canonical_form(next);
          found[t].emplace(c.code, c.form);
        });
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (unsigned t = 1; t < threads; ++t) found[0].merge(found[t]);
    std::vector<detail::Preorder> level;
    std::vector<FiniteSpace> level_spaces;
    for (auto& [code, form] : found[0]) {
      level.push_back(form);
      level_spaces.push_back(form.to_space());
    }
    levels.push_back(std::move(level));
    spaces.push_back(std::move(level_spaces));
  }
  return spaces[n - 1];
}

/// All topologies on n points, labelled or one per homeomorphism class.
inline std::vector<FiniteSpace> enumerate_spaces(std::size_t n, bool up_to_homeo) {
  if (up_to_homeo) return homeomorphism_classes(n);
  std::vector<FiniteSpace> out;
  for_each_labeled_space(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

}  // namespace kuratowski::spaces
