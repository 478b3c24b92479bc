#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kuratowski/spaces/search.hpp"

using namespace kuratowski;
using namespace kuratowski::spaces;

namespace {

PointSet bits(const char* s) { return PointSet::from_bitstring(s); }

// Oracle: every family of subsets containing ∅ and X, closed under pairwise
// union and intersection.
std::size_t family_scan_count(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint32_t whole = static_cast<std::uint32_t>(subsets - 1);
  // Free choice for the subsets strictly between ∅ and X.
  const std::size_t free = subsets - 2;
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free); ++pick) {
    std::vector<std::uint32_t> family{0, whole};
    for (std::size_t i = 0; i < free; ++i)
      if (pick >> i & 1) family.push_back(static_cast<std::uint32_t>(i + 1));
    std::vector<bool> in(subsets, false);
    for (auto f : family) in[f] = true;
    bool ok = true;
    for (auto a : family)
      for (auto b : family)
        if (!in[a | b] || !in[a & b]) ok = false;
    if (ok) ++count;
  }
  return count;
}

FiniteSpace relabel(const FiniteSpace& s, const std::vector<std::size_t>& perm) {
  std::vector<PointSet> nb(s.points());
  for (std::size_t p = 0; p < s.points(); ++p) {
    PointSet image;
    for (auto q : s.min_nbhd(p).points()) image.insert(perm[q]);
    nb[perm[p]] = image;
  }
  return FiniteSpace(s.points(), nb);
}

// Oracle: number of orbits of labelled spaces under all relabellings.
std::size_t orbit_count(std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::size_t orbits = 0;
  std::vector<std::size_t> perm(n);
  for_each_labeled_space(n, [&](const FiniteSpace& s) {
    std::vector<std::uint32_t> key;
    for (std::size_t p = 0; p < n; ++p) key.push_back(s.min_nbhd(p).bits());
    if (seen.count(key)) return;
    ++orbits;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      const auto r = relabel(s, perm);
      std::vector<std::uint32_t> k;
      for (std::size_t p = 0; p < n; ++p) k.push_back(r.min_nbhd(p).bits());
      seen.insert(k);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return orbits;
}

void check_closure_axioms(const FiniteSpace& s, const std::vector<PointSet>& subsets) {
  const auto whole = s.full();
  CHECK(closure(s, PointSet{}) == PointSet{});
  for (auto a : subsets) {
    const auto ca = closure(s, a);
    REQUIRE(a.subset_of(ca));
    REQUIRE(closure(s, ca) == ca);
    REQUIRE(interior(s, a) == PointSet(~closure(s, PointSet(~a.bits() & whole.bits())).bits() & whole.bits()));
    for (auto b : subsets) {
      REQUIRE(closure(s, a | b) == (ca | closure(s, b)));
      if (a.subset_of(b)) REQUIRE(ca.subset_of(closure(s, b)));
    }
  }
}

std::vector<PointSet> all_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) out.push_back(PointSet(m));
  return out;
}

// Oracle: p lies in the hull of A iff it lies in a triangle, segment or
// point spanned by members of A.
bool in_hull(std::size_t w, std::size_t p, const std::vector<std::size_t>& a) {
  auto x = [&](std::size_t i) { return static_cast<long>(i % w); };
  auto y = [&](std::size_t i) { return static_cast<long>(i / w); };
  auto cross = [&](std::size_t o, std::size_t u, std::size_t v) {
    return (x(u) - x(o)) * (y(v) - y(o)) - (y(u) - y(o)) * (x(v) - x(o));
  };
  auto on_segment = [&](std::size_t u, std::size_t v) {
    return cross(u, v, p) == 0 && std::min(x(u), x(v)) <= x(p) && x(p) <= std::max(x(u), x(v)) &&
           std::min(y(u), y(v)) <= y(p) && y(p) <= std::max(y(u), y(v));
  };
  for (auto u : a)
    for (auto v : a) {
      if (on_segment(u, v)) return true;
      for (auto t : a) {
        const auto d1 = cross(u, v, p), d2 = cross(v, t, p), d3 = cross(t, u, p);
        const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
        const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
        if (cross(u, v, t) != 0 && !(has_neg && has_pos)) return true;
      }
    }
  return false;
}

}  // namespace

TEST_CASE("point sets and bitstrings", "[spaces]") {
  CHECK(bits("1010").points() == std::vector<std::size_t>{0, 2});
  CHECK(bits("1010").to_bitstring(4) == "1010");
  CHECK(bits("1").complement(3) == bits("011"));
  CHECK_THROWS_AS(PointSet::from_bitstring("10x"), InputError);
  CHECK_THROWS_AS(PointSet::from_bitstring("10000000000000001"), CapacityError);
}

TEST_CASE("spaces validate their neighbourhoods", "[spaces]") {
  CHECK_THROWS_AS(FiniteSpace(2, {bits("01"), bits("01")}), ValidationError);
  CHECK_THROWS_AS(FiniteSpace(3, {bits("110"), bits("011"), bits("001")}), ValidationError);
  CHECK_THROWS_AS(FiniteSpace(0, {}), CapacityError);
  CHECK_THROWS_AS(FiniteSpace(17, std::vector<PointSet>(17)), CapacityError);
}

TEST_CASE("open-set families are checked against the axioms", "[spaces]") {
  CHECK_THROWS_AS(validate_topology({bits("11")}, 2), ValidationError);
  CHECK_THROWS_AS(validate_topology({PointSet{}, bits("10")}, 2), ValidationError);
  CHECK_THROWS_AS(validate_topology({PointSet{}, bits("100"), bits("010"), bits("111")}, 3), ValidationError);
  CHECK_THROWS_AS(validate_topology({PointSet{}, bits("110"), bits("011"), bits("111")}, 3), ValidationError);
  const auto s = validate_topology({PointSet{}, bits("110"), bits("001"), bits("111")}, 3);
  CHECK(s.min_nbhd(0) == bits("110"));
  CHECK(s.min_nbhd(2) == bits("001"));
  CHECK(s.opens().size() == 4);
}

TEST_CASE("closure and interior on small spaces", "[spaces]") {
  const auto sierpinski = sierpinski_space();
  CHECK(closure(sierpinski, bits("10")) == bits("11"));
  CHECK(closure(sierpinski, bits("01")) == bits("01"));
  CHECK(interior(sierpinski, bits("01")) == PointSet{});
  CHECK(closure(discrete_space(3), bits("010")) == bits("010"));
  CHECK(closure(indiscrete_space(3), bits("010")) == bits("111"));
}

TEST_CASE("closure axioms on every space with at most 4 points", "[spaces]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto subsets = all_subsets(n);
    for_each_labeled_space(n, [&](const FiniteSpace& s) { check_closure_axioms(s, subsets); });
  }
}

TEST_CASE("closure axioms on random relabelled spaces with 5 to 7 points", "[spaces]") {
  std::mt19937 rng(5);
  for (std::size_t n = 5; n <= 7; ++n) {
    const auto& classes = homeomorphism_classes(n);
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    std::uniform_int_distribution<std::uint32_t> subset(0, (1u << n) - 1);
    for (int round = 0; round < 20; ++round) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto s = relabel(classes[pick(rng)], perm);
      std::vector<PointSet> sample;
      for (int j = 0; j < 24; ++j) sample.push_back(PointSet(subset(rng)));
      check_closure_axioms(s, sample);
    }
  }
}

TEST_CASE("labelled topology counts match a family scan", "[spaces]") {
  const std::vector<std::size_t> expected = {1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t count = 0;
    for_each_labeled_space(n, [&](const FiniteSpace&) { ++count; });
    CHECK(count == expected[n - 1]);
    CHECK(family_scan_count(n) == count);
  }
}

TEST_CASE("labelled enumeration is repeatable", "[spaces]") {
  CHECK(enumerate_spaces(4, false) == enumerate_spaces(4, false));
  std::size_t count = 0;
  for_each_labeled_space(5, [&](const FiniteSpace&) { ++count; });
  CHECK(count == 6942);
}

TEST_CASE("homeomorphism classes match relabelling orbits", "[spaces]") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(homeomorphism_classes(n).size() == orbit_count(n));
  CHECK(homeomorphism_classes(6).size() == 718);
  CHECK(homeomorphism_classes(7).size() == 4535);
  CHECK_THROWS_AS(homeomorphism_classes(8), CapacityError);
  CHECK_THROWS_AS(enumerate_spaces(0, true), CapacityError);
}

TEST_CASE("canonical forms ignore labelling", "[spaces]") {
  std::mt19937 rng(3);
  for (const auto& s : homeomorphism_classes(5)) {
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_space(relabel(s, perm)) == s);
  }
}

TEST_CASE("abstract operators are validated", "[spaces]") {
  // Not expansive: f({b}) = ∅.
  CHECK_THROWS_AS(abstract_operator(2, {PointSet{}, bits("10"), PointSet{}, bits("11")}), ValidationError);
  // Not idempotent: f(∅) = {a}, f({a}) = X.
  CHECK_THROWS_AS(abstract_operator(2, {bits("10"), bits("11"), bits("11"), bits("11")}), ValidationError);
  // Not increasing: f(∅) = {b} but f({a}) = {a}.
  CHECK_THROWS_AS(abstract_operator(2, {bits("01"), bits("10"), bits("01"), bits("11")}), ValidationError);
  CHECK_THROWS_AS(abstract_operator(2, {PointSet{}}), InputError);
  const auto op = abstract_operator(2, {bits("10"), bits("10"), bits("11"), bits("11")});
  CHECK(op.kind == OperatorKind::abstract);
  CHECK(op(PointSet{}) == bits("10"));
}

TEST_CASE("convex hulls agree with the triangle oracle", "[spaces]") {
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 3}, {2, 2}, {4, 1}}) {
    const auto op = convex_hull_operator(w, h);
    const auto n = w * h;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const PointSet a(m);
      const auto pts = a.points();
      PointSet expected;
      for (std::size_t p = 0; p < n; ++p)
        if (in_hull(w, p, pts)) expected.insert(p);
      REQUIRE(op(a) == expected);
    }
  }
}

TEST_CASE("orbits", "[spaces]") {
  const auto sierpinski = sierpinski_space();
  CHECK(kuratowski_orbit(sierpinski, bits("10")).size == 4);
  CHECK(kuratowski_orbit(discrete_space(3), bits("010")).size == 2);
  for (const auto& s : homeomorphism_classes(4)) CHECK(kuratowski_orbit(s, PointSet{}).size <= 2);
  CHECK(max_kuratowski_set(discrete_space(4)).orbit_size == 2);
  const auto best = max_kuratowski_set(sierpinski);
  CHECK(best.orbit_size == 4);
  CHECK(best.set == bits("10"));
  CHECK_THROWS_AS(kuratowski_orbit(sierpinski, bits("111")), InputError);
}

TEST_CASE("operation monoids of the standard examples", "[spaces]") {
  CHECK(operation_monoid(discrete_space(1)).size() == 2);
  CHECK(operation_monoid(indiscrete_space(3)).size() == 6);
  const auto s = operation_monoid(sierpinski_space());
  CHECK(s.size() == 8);
  CHECK(s.identifies(7, 8));
  CHECK(s.identifies(10, 13));
  CHECK(std::find(s.collapsed_relations.begin(), s.collapsed_relations.end(),
                  std::pair<ElementId, ElementId>{7, 8}) != s.collapsed_relations.end());
  const auto abstract = operation_monoid(abstract_operator(2, {bits("10"), bits("10"), bits("11"), bits("11")}));
  CHECK(abstract.identifies(2, 7));
  CHECK_FALSE(abstract.identifies(2, 8));
}

TEST_CASE("induced operations form a homomorphic image of M", "[spaces]") {
  const auto& M = kuratowski_monoid().table;
  auto check = [&](const OperatorMonoid& om) {
    for (ElementId i = 0; i < 14; ++i)
      for (ElementId k = 0; k < 14; ++k)
        REQUIRE(om.sigma_image[M.entry(i, k)] == om.table.entry(om.sigma_image[i], om.sigma_image[k]));
  };
  for (std::size_t n = 1; n <= 4; ++n) for_each_labeled_space(n, [&](const FiniteSpace& s) { check(operation_monoid(s)); });
  for (std::size_t w = 1; w <= 3; ++w)
    for (std::size_t h = 1; h <= 3; ++h) check(operation_monoid(convex_hull_operator(w, h)));
}

TEST_CASE("relations parse and print", "[spaces]") {
  CHECK(std::holds_alternative<Discreteness>(parse_relation("discrete")));
  const auto r = std::get<SigmaEquality>(parse_relation("s2=s7"));
  CHECK(r.lhs == 2);
  CHECK(r.rhs == 7);
  CHECK(to_string(parse_relation("s2=s7")) == "2=7");
  CHECK_THROWS_AS(parse_relation("2=14"), InputError);
  CHECK_THROWS_AS(parse_relation("27"), InputError);
}

TEST_CASE("implication checks", "[spaces]") {
  const auto v = check_implication(parse_relation("2=7"), parse_relation("2=8"), 5);
  CHECK(v.holds);
  CHECK(v.spaces_checked == 1 + 3 + 9 + 33 + 139);
  CHECK(check_implication(parse_relation("2=5"), parse_relation("discrete"), 5).holds);
  // Sierpinski space: s7=s8 but not discrete.
  const auto bad = check_implication(parse_relation("7=8"), parse_relation("discrete"), 3);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample.has_value());
  CHECK(operation_monoid(*bad.counterexample).identifies(7, 8));
  CHECK_FALSE(bad.counterexample->is_discrete());
  CHECK_THROWS_AS(check_implication(parse_relation("2=7"), parse_relation("2=8"), 7), CapacityError);
}

TEST_CASE("extremal search on small spaces", "[spaces]") {
  const auto rows = search_fourteen(5);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    CHECK(r.best_orbit <= 14);
    CHECK(kuratowski_orbit(r.witness, r.witness_set).size == r.best_orbit);
  }
  CHECK(rows[0].best_orbit == 2);
  CHECK(rows[3].best_orbit < 14);
  const auto serial = search_fourteen(6, 1);
  const auto parallel = search_fourteen(6, 3);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].best_orbit == parallel[i].best_orbit);
    CHECK(serial[i].witness == parallel[i].witness);
    CHECK(serial[i].witness_set == parallel[i].witness_set);
  }
}
