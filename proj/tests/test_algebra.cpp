#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "kuratowski/congruence.hpp"
#include "kuratowski/isomorphism.hpp"

using namespace kuratowski;

namespace {

// Small semigroups with known structure.
MagmaTable cyclic_group(std::size_t n) {
  std::vector<std::vector<ElementId>> rows(n, std::vector<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = static_cast<ElementId>((i + k) % n);
  return MagmaTable(rows);
}

MagmaTable left_zero(std::size_t n) {
  std::vector<std::vector<ElementId>> rows(n, std::vector<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = static_cast<ElementId>(i);
  return MagmaTable(rows);
}

MagmaTable transpose(const MagmaTable& t) {
  auto rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) rows[i][k] = t.entry(static_cast<ElementId>(k), static_cast<ElementId>(i));
  return MagmaTable(rows);
}

// Maps {0,1,2} -> {0,1,2} satisfying keep, composed as (f∘g)(x) = f(g(x)).
// The kept maps must be closed under composition.
template <class Keep>
MagmaTable transformations_3(Keep keep) {
  std::vector<std::array<int, 3>> maps;
  for (int code = 0; code < 27; ++code) {
    const std::array<int, 3> f{code % 3, code / 3 % 3, code / 9};
    if (keep(f)) maps.push_back(f);
  }
  std::vector<std::vector<ElementId>> rows(maps.size(), std::vector<ElementId>(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const std::array<int, 3> h{maps[i][maps[k][0]], maps[i][maps[k][1]], maps[i][maps[k][2]]};
      rows[i][k] = static_cast<ElementId>(std::find(maps.begin(), maps.end(), h) - maps.begin());
    }
  }
  return MagmaTable(rows);
}

// Permutations and constant maps: 9 elements.
MagmaTable permutations_and_constants() {
  return transformations_3([](const std::array<int, 3>& f) {
    const bool constant = f[0] == f[1] && f[1] == f[2];
    const bool bijective = f[0] != f[1] && f[1] != f[2] && f[0] != f[2];
    return constant || bijective;
  });
}

// Order-preserving maps: 10 elements.
MagmaTable order_preserving() {
  return transformations_3([](const std::array<int, 3>& f) { return f[0] <= f[1] && f[1] <= f[2]; });
}

// Oracle: direct closure test of every nonempty subset.
std::vector<ElementSet> naive_subsemigroups(const MagmaTable& t) {
  std::vector<ElementSet> out;
  for (std::uint32_t m = 1; m < (1u << t.order()); ++m) {
    bool closed = true;
    for (ElementId a = 0; a < t.order() && closed; ++a)
      for (ElementId b = 0; b < t.order() && closed; ++b)
        if ((m >> a & 1) && (m >> b & 1) && !(m >> t.entry(a, b) & 1)) closed = false;
    if (closed) out.push_back(ElementSet(m));
  }
  return out;
}

// Oracle: try every bijection.
bool naive_isomorphic(const MagmaTable& a, const MagmaTable& b) {
  if (a.order() != b.order()) return false;
  std::vector<ElementId> p(a.order());
  std::iota(p.begin(), p.end(), ElementId{0});
  do {
    bool ok = true;
    for (ElementId x = 0; x < a.order() && ok; ++x)
      for (ElementId y = 0; y < a.order() && ok; ++y)
        if (p[a.entry(x, y)] != b.entry(p[x], p[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Oracle: smallest equivalence containing the pairs and stable under
// multiplication, by fixpoint iteration on a boolean relation matrix.
std::vector<std::vector<bool>> naive_congruence(const MagmaTable& t,
                                                const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  const auto n = t.order();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (ElementId i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = r[b][a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        for (ElementId c = 0; c < n; ++c) {
          auto set = [&](ElementId x, ElementId y) {
            if (!r[x][y]) r[x][y] = r[y][x] = changed = true;
          };
          set(t.entry(a, c), t.entry(b, c));
          set(t.entry(c, a), t.entry(c, b));
          if (r[b][c]) set(a, c);
        }
      }
  }
  return r;
}

}  // namespace

TEST_CASE("element sets", "[algebra]") {
  const auto s = ElementSet::from_ids({8, 2, 3});
  CHECK(s.ids() == std::vector<ElementId>{2, 3, 8});
  CHECK(s.size() == 3);
  CHECK(angle_name(s) == "<2,3,8>");
  CHECK(ElementSet{2, 3}.subset_of(s));
  CHECK(size_then_bits_less(ElementSet{13}, ElementSet{0, 1}));
  CHECK_THROWS_AS(ElementSet::from_ids({kMaxOrder}), CapacityError);
}

TEST_CASE("magma tables validate their shape", "[algebra]") {
  CHECK_THROWS_AS(MagmaTable({{0, 1}, {1}}), InputError);
  CHECK_THROWS_AS(MagmaTable({{0, 2}, {1, 0}}), InputError);
  CHECK_THROWS_AS(MagmaTable(std::vector<std::vector<ElementId>>(21, std::vector<ElementId>(21, 0))),
                  CapacityError);
  const MagmaTable t(std::vector<std::vector<ElementId>>{{0}});
  CHECK(t.name(0) == "s0");
  CHECK(is_associative(t));
}

TEST_CASE("associativity finds a corrupted entry", "[algebra]") {
  auto rows = cyclic_group(5).rows();
  CHECK(is_associative(MagmaTable(rows)));
  rows[2][3] = 4;
  const auto v = find_associativity_violation(MagmaTable(rows));
  REQUIRE(v.has_value());
  const MagmaTable bad(rows);
  CHECK(bad.entry(bad.entry(v->a, v->b), v->c) != bad.entry(v->a, bad.entry(v->b, v->c)));
}

TEST_CASE("subsemigroup enumeration matches a subset scan", "[algebra]") {
  std::mt19937 rng(7);
  for (const auto& t : {cyclic_group(6), left_zero(4), transpose(left_zero(4)), cyclic_group(1)}) {
    auto expected = naive_subsemigroups(t);
    std::sort(expected.begin(), expected.end(), size_then_bits_less);
    CHECK(enumerate_subsemigroups(t) == expected);
  }
  for (const auto& t : {permutations_and_constants(), order_preserving()}) {
    auto expected = naive_subsemigroups(t);
    std::sort(expected.begin(), expected.end(), size_then_bits_less);
    CHECK(enumerate_subsemigroups(t) == expected);
  }
  const auto t3 = order_preserving();
  std::uniform_int_distribution<int> pick(0, 9);
  for (int round = 0; round < 50; ++round) {
    ElementSet gens;
    for (int j = 0; j < 3; ++j) gens.insert(static_cast<ElementId>(pick(rng)));
    const auto s = generate(t3, gens);
    CHECK(is_closed(t3, s));
    CHECK(gens.subset_of(s));
  }
}

TEST_CASE("generate rejects empty input", "[algebra]") {
  CHECK_THROWS_AS(generate(cyclic_group(3), ElementSet{}), InputError);
}

TEST_CASE("identities, groups and idempotents", "[algebra]") {
  const auto z6 = cyclic_group(6);
  CHECK(find_identity(z6, z6.all()) == ElementId{0});
  CHECK(is_group(z6, z6.all()));
  CHECK(is_group(z6, ElementSet{0, 2, 4}));
  CHECK(idempotents(z6, z6.all()) == ElementSet{0});
  const auto lz = left_zero(3);
  CHECK_FALSE(is_monoid(lz, lz.all()));
  CHECK(idempotents(lz, lz.all()) == lz.all());
}

TEST_CASE("element profiles agree with the power sequence", "[algebra]") {
  for (const auto& t : {permutations_and_constants(), order_preserving(), cyclic_group(7)}) {
    for (ElementId x = 0; x < t.order(); ++x) {
      // x^1..x^m distinct, x^(m+1) = x^j.
      std::vector<ElementId> powers{x};
      ElementId next = t.entry(x, x);
      while (std::find(powers.begin(), powers.end(), next) == powers.end()) {
        powers.push_back(next);
        next = t.entry(next, x);
      }
      const auto j = static_cast<std::size_t>(std::find(powers.begin(), powers.end(), next) - powers.begin()) + 1;
      const auto p = element_profile(t, x);
      CHECK(p.index == j);
      CHECK(p.period == powers.size() + 1 - j);
      CHECK(generate(t, ElementSet::single(x)).size() == powers.size());
    }
  }
}

TEST_CASE("generating collections", "[algebra]") {
  const auto z6 = cyclic_group(6);
  // Z6 is generated by 1 or 5 alone, and irredundantly by {2,3}, {3,4}.
  CHECK(minimal_generating_collections(z6, z6.all()) == std::vector<ElementSet>{ElementSet{1}, ElementSet{5}});
  const auto irr = irredundant_generating_collections(z6, z6.all());
  CHECK(std::find(irr.begin(), irr.end(), ElementSet{2, 3}) != irr.end());
  CHECK(std::find(irr.begin(), irr.end(), ElementSet{3, 4}) != irr.end());
  CHECK(std::find(irr.begin(), irr.end(), ElementSet{1, 2}) == irr.end());
  for (auto g : irr) {
    CHECK(generate(z6, g) == z6.all());
    g.for_each([&](ElementId x) {
      auto rest = g;
      rest.erase(x);
      CHECK((rest.empty() || generate(z6, rest) != z6.all()));
    });
  }
  CHECK(canonical_name(z6, z6.all()) == "<1>");
}

TEST_CASE("isomorphism search agrees with brute force", "[algebra]") {
  const std::vector<MagmaTable> tables = {cyclic_group(4), left_zero(4), transpose(left_zero(4)),
                                          MagmaTable({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}),
                                          MagmaTable({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}})};
  for (const auto& a : tables)
    for (const auto& b : tables) CHECK(isomorphic(a, b).has_value() == naive_isomorphic(a, b));
  // Left- and right-zero bands are anti-isomorphic but not isomorphic.
  CHECK(anti_isomorphic(left_zero(3), left_zero(3).all(), transpose(left_zero(3)), left_zero(3).all()));
  CHECK_FALSE(isomorphic(left_zero(3), transpose(left_zero(3))));
}

TEST_CASE("automorphisms of small groups", "[algebra]") {
  CHECK(automorphisms(cyclic_group(5), cyclic_group(5).all()).size() == 4);
  CHECK(automorphisms(cyclic_group(6), cyclic_group(6).all()).size() == 2);
  const MagmaTable klein({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  const auto autos = automorphisms(klein, klein.all());
  CHECK(autos.size() == 6);
  CHECK(autos.front().image == std::vector<ElementId>{0, 1, 2, 3});
}

TEST_CASE("morphism checks reject non-bijections", "[algebra]") {
  const auto z4 = cyclic_group(4);
  CHECK_THROWS_AS(check_morphism(z4, z4.all(), std::vector<ElementId>{0, 0, 0, 0}), InputError);
  CHECK(check_morphism(z4, z4.all(), std::vector<ElementId>{0, 3, 2, 1}));
  CHECK_FALSE(check_morphism(z4, z4.all(), std::vector<ElementId>{0, 2, 1, 3}));
}

TEST_CASE("classification groups isomorphic subsemigroups", "[algebra]") {
  const auto lz = left_zero(3);
  const auto subs = enumerate_subsemigroups(lz);
  const auto classes = classify(lz, subs);
  // Left-zero bands of sizes 1, 2, 3.
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].members.size() == 3);
  CHECK(classes[1].members.size() == 3);
  CHECK(classes[2].members.size() == 1);
}

TEST_CASE("congruence closure matches the fixpoint oracle", "[algebra]") {
  const auto t3 = permutations_and_constants();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 8);
  for (int round = 0; round < 25; ++round) {
    const std::vector<std::pair<ElementId, ElementId>> pairs = {
        {static_cast<ElementId>(pick(rng)), static_cast<ElementId>(pick(rng))}};
    const auto p = congruence_closure(t3, pairs);
    const auto r = naive_congruence(t3, pairs);
    for (ElementId a = 0; a < t3.order(); ++a)
      for (ElementId b = 0; b < t3.order(); ++b) CHECK(p.same_class(a, b) == r[a][b]);
    CHECK(is_congruence(t3, p));
    const auto q = quotient_table(t3, p);
    CHECK(q.table.order() == p.classes.size());
    CHECK(is_associative(q.table));
  }
}

TEST_CASE("quotients refuse partitions that are not congruences", "[algebra]") {
  const auto z4 = cyclic_group(4);
  Partition p = Partition::discrete(4);
  CHECK(quotient_table(z4, p).table == z4);
  const auto bad = congruence_closure(left_zero(1), {});
  CHECK(bad.classes.size() == 1);
  // {0,1} {2} {3} is not compatible with addition mod 4.
  Partition split;
  split.classes = {ElementSet{0, 1}, ElementSet{2}, ElementSet{3}};
  split.class_of = {0, 0, 1, 2};
  CHECK_FALSE(is_congruence(z4, split));
  CHECK_THROWS_AS(quotient_table(z4, split), InputError);
}

TEST_CASE("restriction renumbers in ascending order", "[algebra]") {
  const auto z6 = cyclic_group(6);
  const auto sub = restrict_table(z6, ElementSet{0, 2, 4});
  CHECK(sub.names() == std::vector<std::string>{"s0", "s2", "s4"});
  CHECK(naive_isomorphic(sub, cyclic_group(3)));
  CHECK_THROWS_AS(restrict_table(z6, ElementSet{1, 2}), InputError);
}
