#pragma once

// Golden-data verification: every check recomputes a published claim from
// the rewriting system and compares it with the embedded fixtures.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kuratowski/census.hpp"
#include "kuratowski/congruence.hpp"
#include "kuratowski/golden.hpp"
#include "kuratowski/spaces/search.hpp"

namespace kuratowski {

enum class CheckStatus { pass, fail, info, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return false;
    }
    return true;
  }
  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

struct TableDiscrepancy {
  ElementId row, column, derived, golden;
};

inline std::vector<TableDiscrepancy> table_discrepancies(const MagmaTable& derived,
                                                         const MagmaTable& golden) {
  if (derived.order() != golden.order()) throw InputError("tables differ in order");
  std::vector<TableDiscrepancy> out;
  for (ElementId i = 0; i < derived.order(); ++i) {
    for (ElementId k = 0; k < derived.order(); ++k) {
      if (derived.entry(i, k) != golden.entry(i, k)) {
        out.push_back({i, k, derived.entry(i, k), golden.entry(i, k)});
      }
    }
  }
  return out;
}

/// Derived Cayley table of M against the embedded golden table.
inline std::vector<TableDiscrepancy> verify_paper_table(const GoldenData& g = embedded_golden()) {
  return table_discrepancies(kuratowski_monoid().table, g.cayley);
}

namespace detail {

inline std::string set_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  return out + '}';
}

inline std::string sets_string(const std::vector<ElementSet>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += angle_name(v[i]);
  }
  return out + ']';
}

inline CheckResult compare(std::string expected, std::string computed) {
  CheckResult r;
  r.status = expected == computed ? CheckStatus::pass : CheckStatus::fail;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  return r;
}

inline std::string census_summary(const CensusReport& c, bool with_kinds) {
  std::string out = "semigroups=" + std::to_string(c.total_semigroups) +
                    " types=" + std::to_string(c.iso_types);
  if (with_kinds) {
    out += " groups=" + std::to_string(c.groups) + " monoids=" + std::to_string(c.monoids) +
           " non_monoids=" + std::to_string(c.non_monoid_count);
  }
  return out;
}

inline std::string partition_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (i) out += ' ';
    out += set_string(p.classes[i]);
  }
  return out;
}

inline std::vector<ElementId> map_image(const Morphism& m) {
  std::vector<ElementId> out;
  m.domain.for_each([&](ElementId x) { out.push_back(m.image[x]); });
  return out;
}

inline spaces::SetOperator abstract_example_10_4() {
  using spaces::PointSet;
  // X = {a, b}; f(∅) = f({a}) = {a}, f({b}) = f(X) = X.
  return spaces::abstract_operator(
      2, {PointSet::of({0}), PointSet::of({0}), PointSet::of({0, 1}), PointSet::of({0, 1})});
}

inline spaces::FiniteSpace three_point_example() {
  using spaces::PointSet;
  return spaces::validate_topology(
      {PointSet{}, PointSet::of({0, 1}), PointSet::of({2}), PointSet::of({0, 1, 2})}, 3);
}

inline bool lemma_identities_hold(const spaces::SetOperator& op) {
  const OpWord kckckck("KCKCKCK"), kck("KCK"), ckckckck("CKCKCKCK"), ckck("CKCK");
  for (std::size_t m = 0; m < op.images.size(); ++m) {
    const spaces::PointSet a(static_cast<spaces::PointSet::mask_type>(m));
    if (eval_word(op, kckckck, a) != eval_word(op, kck, a)) return false;
    if (eval_word(op, ckckckck, a) != eval_word(op, ckck, a)) return false;
  }
  return true;
}

/// sigma_image respects every entry of the Kuratowski table.
inline bool is_sigma_homomorphism(const spaces::OperatorMonoid& om) {
  const auto& t = kuratowski_monoid().table;
  for (ElementId i = 0; i < kOperationCount; ++i) {
    for (ElementId k = 0; k < kOperationCount; ++k) {
      if (om.sigma_image[t.entry(i, k)] != om.table.entry(om.sigma_image[i], om.sigma_image[k])) {
        return false;
      }
    }
  }
  return true;
}

inline constexpr std::size_t kS7eq13SearchPoints = 6;

inline bool is_s7eq13_model(const spaces::FiniteSpace& s) {
  const auto om = spaces::operation_monoid(s);
  return om.size() == 10 && om.identifies(7, 13) && !om.identifies(7, 8);
}

/// A set A with s_i(A) = s_k(A) exactly when s_i and s_k are identified in
/// M/(s7=s13).
inline std::optional<spaces::PointSet> s7eq13_evaluation_set(const spaces::FiniteSpace& s) {
  static const Partition p = congruence_closure(kuratowski_monoid().table, {{7, 13}});
  const std::size_t n = s.points();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const spaces::PointSet a(static_cast<spaces::PointSet::mask_type>(bits));
    const auto orbit = spaces::kuratowski_orbit(s, a);
    if (orbit.size != p.size()) continue;
    bool exact = true;
    for (ElementId i = 0; i < kOperationCount && exact; ++i) {
      for (ElementId k = 0; k < kOperationCount; ++k) {
        if ((orbit.images[i] == orbit.images[k]) != p.same_class(i, k)) exact = false;
      }
    }
    if (exact) return a;
  }
  return std::nullopt;
}

inline std::string relations_string(const std::vector<std::pair<ElementId, ElementId>>& r) {
  std::string out;
  for (auto [a, b] : r) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + '=' + std::to_string(b);
  }
  return out;
}

}  // namespace detail

/// A single verification step. criterion links it to the numbered
/// acceptance criteria (0 for supplementary checks).
struct CheckDefinition {
  std::string id;
  int criterion;
  std::string claim;
  std::function<CheckResult(const GoldenData&)> run;
};

inline const std::vector<CheckDefinition>& check_definitions() {
  using namespace detail;
  static const std::vector<CheckDefinition> defs = [] {
    std::vector<CheckDefinition> d;
    const auto& km = kuratowski_monoid();
    const auto& M = km.table;

    d.push_back({"table.golden", 1, "derived Cayley table equals the published table", [](const GoldenData& g) {
      const auto diffs = verify_paper_table(g);
      std::string computed = std::to_string(196 - diffs.size()) + "/196 equal";
      for (const auto& x : diffs) {
        computed += " (" + std::to_string(x.row) + "," + std::to_string(x.column) + "): derived s" +
                    std::to_string(x.derived) + " golden s" + std::to_string(x.golden);
      }
      return compare("196/196 equal", computed);
    }});

    d.push_back({"words.fourteen", 2, "rewriting closure yields the 14 listed reduced words", [&km](const GoldenData&) {
      const auto closure = reduced_word_closure();
      std::string listed, derived;
      for (std::size_t i = 0; i < kListedWords.size(); ++i) {
        listed += (i ? " " : "") + OpWord(kListedWords[i]).to_string();
      }
      for (std::size_t i = 0; i < km.words.size(); ++i) {
        derived += (i ? " " : "") + km.words[i].to_string();
      }
      return compare("14 words: " + listed,
                     std::to_string(closure.size()) + " words: " + derived);
    }});

    d.push_back({"words.coherence", 2, "reduce(words[k] ++ words[i]) = words[i∘k] for all 196 pairs", [&km](const GoldenData&) {
      std::size_t ok = 0;
      for (ElementId i = 0; i < kOperationCount; ++i) {
        for (ElementId k = 0; k < kOperationCount; ++k) {
          if (reduce_word(km.words[k].then(km.words[i])) == km.words[km.table.entry(i, k)]) ++ok;
        }
      }
      return compare("196/196", std::to_string(ok) + "/196");
    }});

    auto census_check = [&d, &M](std::string id, int crit, std::string claim, ElementSet scope,
                                std::string expected, bool kinds) {
      d.push_back({std::move(id), crit, std::move(claim),
                   [scope, expected, kinds, &M](const GoldenData&) {
                     return compare(expected, census_summary(census(M, scope), kinds));
                   }});
    };
    census_check("census.M", 3, "M contains 118 semigroups of 56 isomorphism types", M.all(),
                 "semigroups=118 types=56", false);
    census_check("census.3-4", 4, "<3,4> contains 57 semigroups: 10 groups, 14 monoids, 43 non-monoids, 28 types",
                 generate(M, {3, 4}), "semigroups=57 types=28 groups=10 monoids=14 non_monoids=43", true);
    census_check("census.2-5", 5, "<2,5> contains 20 semigroups of 9 types", generate(M, {2, 5}),
                 "semigroups=20 types=9", false);
    census_check("census.0-2-5", 5, "<0,2,5> contains 41 semigroups of 17 types", generate(M, {0, 2, 5}),
                 "semigroups=41 types=17", false);
    census_check("census.6-9", 5, "<6,9> contains 18 semigroups of 8 types", generate(M, {6, 9}),
                 "semigroups=18 types=8", false);

    d.push_back({"nonmonoids.element-sets", 6, "the 43 listed non-monoids have the published names and element sets", [&M](const GoldenData& g) {
      const auto computed = non_monoids_by_name(M);
      std::size_t ok = 0;
      std::string bad;
      for (std::size_t i = 0; i < g.nonmonoids.size(); ++i) {
        const auto& item = g.nonmonoids[i];
        if (i < computed.size() && item.number == static_cast<int>(i + 1) &&
            computed[i] == item.elements && canonical_generators(M, computed[i]) == item.name) {
          ++ok;
        } else {
          bad += " (" + std::to_string(item.number) + ")";
        }
      }
      auto r = compare("43 items match", std::to_string(ok) + " items match of " +
                                               std::to_string(computed.size()) + " computed");
      if (ok == 43 && computed.size() == 43 && g.nonmonoids.size() == 43) {
        r.computed = "43 items match";
        r.status = CheckStatus::pass;
      } else {
        r.computed += ";" + bad;
        r.status = CheckStatus::fail;
      }
      return r;
    }});

    d.push_back({"nonmonoids.listed-generators", 6, "every listed generator collection generates its item and is irredundant", [&M](const GoldenData& g) {
      const auto computed = non_monoids_by_name(M);
      std::size_t total = 0, ok = 0;
      std::string bad;
      for (std::size_t i = 0; i < g.nonmonoids.size() && i < computed.size(); ++i) {
        for (auto gens : g.nonmonoids[i].generators) {
          ++total;
          bool good = generate(M, gens) == computed[i];
          gens.for_each([&](ElementId x) {
            ElementSet rest = gens;
            rest.erase(x);
            if (!rest.empty() && generate(M, rest) == computed[i]) good = false;
          });
          if (good) ++ok;
          else bad += " (" + std::to_string(g.nonmonoids[i].number) + ")" + angle_name(gens);
        }
      }
      return compare(std::to_string(total) + "/" + std::to_string(total),
                     std::to_string(ok) + "/" + std::to_string(total) + bad);
    }});

    d.push_back({"nonmonoids.generator-completeness", 6, "each item lists all of its irredundant generator collections", [&M](const GoldenData& g) {
      const auto computed = non_monoids_by_name(M);
      std::size_t ok = 0;
      std::string missing;
      for (std::size_t i = 0; i < g.nonmonoids.size() && i < computed.size(); ++i) {
        auto listed = g.nonmonoids[i].generators;
        const auto all = irredundant_generating_collections(M, computed[i]);
        std::vector<ElementSet> absent;
        for (auto s : all) {
          if (std::find(listed.begin(), listed.end(), s) == listed.end()) absent.push_back(s);
        }
        bool extra = false;
        for (auto s : listed) {
          if (std::find(all.begin(), all.end(), s) == all.end()) extra = true;
        }
        if (absent.empty() && !extra) ++ok;
        else missing += " (" + std::to_string(g.nonmonoids[i].number) + ") missing " + sets_string(absent);
      }
      return compare("43/43 complete", std::to_string(ok) + "/43 complete" +
                                           (missing.empty() ? "" : ";" + missing));
    }});

    d.push_back({"automorphisms.M", 7, "the identity and A are the only automorphisms of M", [&M](const GoldenData&) {
      const auto autos = automorphisms(M, M.all());
      std::vector<ElementId> ident(kOperationCount);
      std::iota(ident.begin(), ident.end(), ElementId{0});
      std::string computed = std::to_string(autos.size()) + " automorphisms";
      bool has_id = false, has_a = false;
      for (const auto& a : autos) {
        has_id = has_id || a.image == ident;
        has_a = has_a || a.image == kAutomorphismA;
      }
      if (has_id && has_a) computed += ": identity, A";
      return compare("2 automorphisms: identity, A", computed);
    }});
    for (auto [id, gens] : {std::pair{std::string("automorphisms.2-5"), ElementSet{2, 5}},
                            std::pair{std::string("automorphisms.0-2-5"), ElementSet{0, 2, 5}}}) {
      const ElementSet s = generate(M, gens);
      d.push_back({id, 7, "exactly two automorphisms: identity and the restriction of A", [s, &M](const GoldenData&) {
        const auto autos = automorphisms(M, s);
        bool restriction = autos.size() == 2;
        if (restriction) {
          s.for_each([&](ElementId x) {
            if (autos[1].image[x] != kAutomorphismA[x]) restriction = false;
          });
        }
        return compare("2 (identity, A restricted)",
                       std::to_string(autos.size()) + (restriction ? " (identity, A restricted)" : ""));
      }});
    }

    d.push_back({"anti.I", 8, "I (swap s7, s8) is an anti-automorphism of <0,2,5>", [&M](const GoldenData&) {
      const ElementSet s = generate(M, {0, 2, 5});
      const bool anti = check_anti_morphism(M, s, kAntiAutomorphismI);
      const bool not_auto = !check_morphism(M, s, kAntiAutomorphismI);
      return compare("anti-automorphism, not an automorphism",
                     std::string(anti ? "anti-automorphism" : "not anti") + ", " +
                         (not_auto ? "not an automorphism" : "automorphism"));
    }});

    d.push_back({"iso.pairs", 8, "isomorphic pairs <6,7>≅<8,9>, <6,8>≅<7,9>, <7,10>≅<8,13>, <2,7>≅<5,8>", [&M](const GoldenData&) {
      const std::vector<std::pair<ElementSet, ElementSet>> pairs = {
          {{6, 7}, {8, 9}}, {{6, 8}, {7, 9}}, {{7, 10}, {8, 13}}, {{2, 7}, {5, 8}}};
      std::size_t ok = 0;
      for (auto [a, b] : pairs) {
        if (isomorphic(M, generate(M, a), M, generate(M, b))) ++ok;
      }
      return compare("4/4 isomorphic", std::to_string(ok) + "/4 isomorphic");
    }});

    d.push_back({"noniso.pairs", 8, "non-isomorphic pairs <7,10>/<7,13>, <2,7>/<2,8>, <6,7>/<6,8>, <3,6>/<3,9>, <2,9>/<3,8>", [&M](const GoldenData&) {
      const std::vector<std::pair<ElementSet, ElementSet>> pairs = {
          {{7, 10}, {7, 13}}, {{2, 7}, {2, 8}}, {{6, 7}, {6, 8}}, {{3, 6}, {3, 9}}, {{2, 9}, {3, 8}}};
      std::size_t ok = 0;
      std::string bad;
      for (auto [a, b] : pairs) {
        if (!isomorphic(M, generate(M, a), M, generate(M, b))) ++ok;
        else bad += " " + angle_name(a) + "≅" + angle_name(b);
      }
      return compare("5/5 non-isomorphic", std::to_string(ok) + "/5 non-isomorphic" + bad);
    }});

    auto quotient_check = [&d, &M](std::string id, std::string claim, ElementId a, ElementId b,
                                  std::string expected) {
      d.push_back({std::move(id), 9, std::move(claim), [a, b, expected, &M](const GoldenData&) {
        const auto p = congruence_closure(M, {{a, b}});
        const auto q = quotient_table(M, p);
        return compare(expected, std::to_string(q.table.order()) + " elements: " + partition_string(p));
      }});
    };
    quotient_check("quotient.2=7", "s2=s7 collapses M to 6 elements", 2, 7,
                   "6 elements: {0} {1} {2,7,10} {3,6,11} {4,9,12} {5,8,13}");
    quotient_check("quotient.7=8", "s7=s8 collapses M to 8 elements", 7, 8,
                   "8 elements: {0} {1} {2} {3} {4} {5} {6,9,11,12} {7,8,10,13}");
    quotient_check("quotient.7=10", "s7=s10 collapses M to 10 elements", 7, 10,
                   "10 elements: {0} {1} {2} {3} {4} {5} {6,11} {7,10} {8,13} {9,12}");

    quotient_check("quotient.2=8", "s2=s8 collapses M to 6 elements", 2, 8,
                   "6 elements: {0} {1} {2,8,10} {3,9,11} {4,6,12} {5,7,13}");

    d.push_back({"quotient.2=8-permutation", 9, "the permutation (s2 s5)(s3 s4) is an isomorphism M/(s2=s7) -> M/(s2=s8)", [&M](const GoldenData&) {
      const auto q27 = quotient_table(M, congruence_closure(M, {{2, 7}}));
      const auto q28 = quotient_table(M, congruence_closure(M, {{2, 8}}));
      const auto& p = kQuotientIsomorphism27to28;
      bool iso = q27.table.order() == p.size() && q28.table.order() == p.size();
      for (ElementId x = 0; iso && x < p.size(); ++x) {
        for (ElementId y = 0; y < p.size(); ++y) {
          if (p[q27.table.entry(x, y)] != q28.table.entry(p[x], p[y])) iso = false;
        }
      }
      std::string computed = iso ? "isomorphism" : "not a homomorphism";
      if (!iso) {
        computed += isomorphic(q27.table, q28.table) ? "; the quotients are isomorphic"
                                                     : "; no isomorphism exists";
        if (anti_isomorphic(q27.table, q27.table.all(), q28.table, q28.table.all())) {
          computed += "; the quotients are anti-isomorphic";
        }
      }
      return compare("isomorphism", computed);
    }});

    d.push_back({"quotient.7=13", 9, "s7=s13 gives the displayed 10-element table", [&M](const GoldenData& g) {
      const auto [a, b] = g.quotient_s7eq13.relation;
      const auto q = quotient_table(M, congruence_closure(M, {{a, b}}));
      std::string computed = std::to_string(q.table.order()) + " elements";
      if (q.table.order() == g.quotient_s7eq13.table.order()) {
        const auto diffs = table_discrepancies(q.table, g.quotient_s7eq13.table);
        computed += diffs.empty() ? ", table matches" : ", " + std::to_string(diffs.size()) + " entries differ";
      }
      return compare("10 elements, table matches", computed);
    }});

    d.push_back({"models.discrete", 10, "discrete spaces induce only s0 and s1", [](const GoldenData&) {
      std::string computed;
      for (std::size_t n = 1; n <= 5; ++n) {
        computed += (n > 1 ? " " : "") + std::to_string(spaces::operation_monoid(spaces::discrete_space(n)).size());
      }
      return compare("2 2 2 2 2", computed);
    }});

    d.push_back({"models.sierpinski", 10, "Sierpinski space: 8 operations, s7=s8, isomorphic to M/(s7=s8)", [&M](const GoldenData&) {
      const auto om = spaces::operation_monoid(spaces::sierpinski_space());
      const auto q = quotient_table(M, congruence_closure(M, {{7, 8}}));
      const bool iso = isomorphic(om.table, q.table).has_value();
      return compare("8 operations, s7=s8, isomorphic",
                     std::to_string(om.size()) + " operations, " +
                         (om.identifies(7, 8) ? "s7=s8" : "s7!=s8") + ", " + (iso ? "isomorphic" : "not isomorphic"));
    }});

    d.push_back({"models.three-point", 10, "opens {∅,{a,b},{c},X}: s2=s8 and the operation monoid is M/(s2=s8)", [&M](const GoldenData&) {
      const auto om = spaces::operation_monoid(three_point_example());
      const auto q = quotient_table(M, congruence_closure(M, {{2, 8}}));
      const bool iso = isomorphic(om.table, q.table).has_value();
      return compare("6 operations, s2=s8, isomorphic",
                     std::to_string(om.size()) + " operations, " +
                         (om.identifies(2, 8) ? "s2=s8" : "s2!=s8") + ", " + (iso ? "isomorphic" : "not isomorphic"));
    }});

    d.push_back({"models.abstract", 10, "the two-point expansive operator satisfies s2=s7 but not s2=s8", [&M](const GoldenData&) {
      const auto om = spaces::operation_monoid(abstract_example_10_4());
      const auto q = quotient_table(M, congruence_closure(M, {{2, 7}}));
      const bool iso = isomorphic(om.table, q.table).has_value();
      return compare("s2=s7, s2!=s8, isomorphic to M/(s2=s7)",
                     std::string(om.identifies(2, 7) ? "s2=s7" : "s2!=s7") + ", " +
                         (om.identifies(2, 8) ? "s2=s8" : "s2!=s8") + ", " +
                         (iso ? "isomorphic to M/(s2=s7)" : "not isomorphic to M/(s2=s7)"));
    }});

    auto implication = [&d](std::string id, std::string premise, std::string conclusion, std::string claim) {
      d.push_back({std::move(id), 11, std::move(claim), [premise, conclusion](const GoldenData&) {
        const auto v = spaces::check_implication(spaces::parse_relation(premise),
                                                 spaces::parse_relation(conclusion), 5);
        return compare("no counterexample",
                       v.holds ? "no counterexample" : "counterexample found");
      }});
    };
    implication("implications.2=5=>discrete", "2=5", "discrete", "s2=s5 forces a discrete space (<= 5 points)");
    implication("implications.2=7=>2=8", "2=7", "2=8", "s2=s7 implies s2=s8 in every space (<= 5 points)");
    implication("implications.2=7=>0=2", "2=7", "0=2", "s2=s7 implies s0=s2 in every space (<= 5 points)");
    implication("implications.2=10=>2=8", "2=10", "2=8", "s2=s10 implies s2=s8 (<= 5 points)");
    implication("implications.2=13=>2=8", "2=13", "2=8", "s2=s13 implies s2=s8 (<= 5 points)");

    d.push_back({"implications.equivalences", 11, "the five paired relations are equivalent on every space with <= 5 points", [](const GoldenData&) {
      const std::vector<std::pair<std::string, std::string>> pairs = {
          {"2=7", "5=8"}, {"2=8", "5=7"}, {"7=8", "10=13"}, {"7=10", "8=13"}, {"7=13", "8=10"}};
      std::size_t ok = 0;
      std::string bad;
      for (const auto& [a, b] : pairs) {
        const auto ra = spaces::parse_relation(a), rb = spaces::parse_relation(b);
        if (spaces::check_implication(ra, rb, 5).holds && spaces::check_implication(rb, ra, 5).holds) ++ok;
        else bad += " " + a + "<=>" + b;
      }
      return compare("5/5 equivalences hold", std::to_string(ok) + "/5 equivalences hold" + bad);
    }});

    d.push_back({"properties.associativity", 12, "every embedded and derived table is associative", [&M](const GoldenData& g) {
      std::size_t total = 0, ok = 0;
      auto check = [&](const MagmaTable& t) {
        ++total;
        if (is_associative(t)) ++ok;
      };
      check(M);
      check(g.cayley);
      check(g.quotient_s7eq13.table);
      for (const auto& s : g.small_tables) check(s.table);
      return compare(std::to_string(total) + "/" + std::to_string(total),
                     std::to_string(ok) + "/" + std::to_string(total));
    }});

    d.push_back({"properties.A-conjugation", 12, "A is an automorphism and equals conjugation by s1", [&M](const GoldenData&) {
      const bool morphism = check_morphism(M, M.all(), kAutomorphismA);
      bool conj = true;
      for (ElementId x = 0; x < kOperationCount; ++x) {
        if (kAutomorphismA[x] != M.entry(1, M.entry(x, 1))) conj = false;
      }
      return compare("automorphism, conjugation",
                     std::string(morphism ? "automorphism" : "not a morphism") + ", " +
                         (conj ? "conjugation" : "not conjugation"));
    }});

    d.push_back({"properties.homomorphism", 12, "every space with <= 4 points induces a homomorphic image of M", [](const GoldenData&) {
      std::size_t total = 0, ok = 0;
      for (std::size_t n = 1; n <= 4; ++n) {
        spaces::for_each_labeled_space(n, [&](const spaces::FiniteSpace& s) {
          ++total;
          const auto om = spaces::operation_monoid(s);
          if (om.size() <= kOperationCount && is_sigma_homomorphism(om)) ++ok;
        });
      }
      return compare("389/389", std::to_string(ok) + "/" + std::to_string(total));
    }});

    d.push_back({"properties.lemma-2.1", 12, "KCKCKCK=KCK and CKCKCKCK=CKCK for closures, the two-point operator and convex hulls", [](const GoldenData&) {
      std::size_t total = 0, ok = 0;
      auto check = [&](const spaces::SetOperator& op) {
        ++total;
        if (lemma_identities_hold(op)) ++ok;
      };
      for (std::size_t n = 1; n <= 4; ++n) {
        spaces::for_each_labeled_space(n, [&](const spaces::FiniteSpace& s) { check(spaces::closure_operator(s)); });
      }
      check(abstract_example_10_4());
      for (std::size_t w = 1; w <= 3; ++w) {
        for (std::size_t h = 1; h <= 3; ++h) check(spaces::convex_hull_operator(w, h));
      }
      return compare(std::to_string(total) + "/" + std::to_string(total),
                     std::to_string(ok) + "/" + std::to_string(total));
    }});

    d.push_back({"monoids.sigma1", 0, "the monoids containing s1 are <1>, M1 and M", [&M](const GoldenData&) {
      std::vector<ElementSet> with_one;
      for (auto s : enumerate_subsemigroups(M)) {
        if (s.contains(1)) with_one.push_back(s);
      }
      return compare(sets_string({ElementSet{0, 1}, generate(M, {1, 6}), M.all()}), sets_string(with_one));
    }});

    d.push_back({"idempotents.diagonal", 0, "the idempotents of M are s0,s2,s5,s7,s8,s10,s13 and generate <0,2,5>", [&M](const GoldenData&) {
      const auto idem = idempotents(M, M.all());
      return compare("{0,2,5,7,8,10,13} = <0,2,5>",
                     set_string(idem) + (idem == generate(M, {0, 2, 5}) ? " = <0,2,5>" : " != <0,2,5>"));
    }});

    d.push_back({"generators.3-4", 0, "<3,4> = {s2..s13} with unique minimal generators {s3,s4}", [&M](const GoldenData&) {
      const ElementSet s = generate(M, {3, 4});
      const auto gens = irredundant_generating_collections(M, s);
      return compare("{2,3,4,5,6,7,8,9,10,11,12,13} [<3,4>]", set_string(s) + " " + sets_string(gens));
    }});

    d.push_back({"smalltables.displays", 0, "the displayed small tables are the tables of their semigroups", [&M](const GoldenData& g) {
      std::size_t ok = 0;
      for (const auto& lt : g.small_tables) {
        const auto ids = lt.semigroup.ids();
        bool match = is_closed(M, lt.semigroup);
        for (ElementId i = 0; match && i < ids.size(); ++i) {
          for (ElementId k = 0; k < ids.size(); ++k) {
            if (ids[lt.table.entry(i, k)] != M.entry(ids[i], ids[k])) match = false;
          }
        }
        if (match) ++ok;
      }
      const auto total = std::to_string(g.small_tables.size());
      return compare(total + "/" + total, std::to_string(ok) + "/" + total);
    }});

    d.push_back({"spaces.s7eq13-finite-witness", 0, "search for a finite space whose operation monoid is M/(s7=s13) (exploratory)", [](const GoldenData&) {
      CheckResult r;
      r.status = CheckStatus::info;
      r.expected = "exploratory";
      const auto found = spaces::find_space(kS7eq13SearchPoints, is_s7eq13_model);
      r.computed = found ? "found with " + std::to_string(found->points()) + " points"
                         : "not found up to " + std::to_string(kS7eq13SearchPoints) + " points";
      return r;
    }});

    d.push_back({"spaces.s7eq13-table", 0, "a finite model of M/(s7=s13) evaluates to the displayed table", [](const GoldenData& g) {
      const auto found = spaces::find_space(kS7eq13SearchPoints, is_s7eq13_model);
      CheckResult r;
      if (!found) {
        r.status = CheckStatus::skipped;
        r.expected = "table matches";
        r.computed = "no finite witness up to " + std::to_string(kS7eq13SearchPoints) + " points";
        return r;
      }
      const auto om = spaces::operation_monoid(*found);
      const auto& t = g.quotient_s7eq13.table;
      bool match = true;
      for (ElementId i = 0; i < t.order(); ++i) {
        for (ElementId k = 0; k < t.order(); ++k) {
          if (om.sigma_image[t.entry(i, k)] != om.table.entry(om.sigma_image[i], om.sigma_image[k])) {
            match = false;
          }
        }
      }
      return compare("table matches", match ? "table matches" : "table differs");
    }});

    d.push_back({"spaces.s7eq13-evaluation", 0, "a finite model of M/(s7=s13) has a set whose images coincide exactly on the quotient classes", [](const GoldenData&) {
      std::optional<spaces::PointSet> set;
      const auto found = spaces::find_space(kS7eq13SearchPoints, [&set](const spaces::FiniteSpace& s) {
        if (!is_s7eq13_model(s)) return false;
        set = s7eq13_evaluation_set(s);
        return set.has_value();
      });
      if (!found) {
        CheckResult r;
        r.status = CheckStatus::skipped;
        r.expected = "set found";
        r.computed = "no such model up to " + std::to_string(kS7eq13SearchPoints) + " points";
        return r;
      }
      CheckResult r;
      r.expected = "set found";
      r.computed = "set found: " + std::to_string(found->points()) + " points, A=" +
                   set->to_bitstring(found->points());
      return r;
    }});

    return d;
  }();
  return defs;
}

/// Runs the selected checks (all when selection is empty) in declaration
/// order. A selection entry matches a check id exactly or as a dotted prefix
/// ("census" selects every census.* check). An explicitly empty selection
/// list runs nothing and passes.
inline VerificationReport verify_checks(const GoldenData& golden,
                                        const std::optional<std::vector<std::string>>& selection) {
  VerificationReport report;
  for (const auto& def : check_definitions()) {
    if (selection) {
      bool chosen = false;
      for (const auto& s : *selection) {
        if (def.id == s || def.id.rfind(s + ".", 0) == 0) chosen = true;
      }
      if (!chosen) continue;
    }
    CheckResult r;
    try {
      r = def.run(golden);
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.computed = std::string("error: ") + e.what();
    }
    r.id = def.id;
    r.claim = def.claim;
    report.checks.push_back(std::move(r));
  }
  return report;
}

inline VerificationReport verify_all(const GoldenData& golden = embedded_golden()) {
  return verify_checks(golden, std::nullopt);
}

}  // namespace kuratowski
