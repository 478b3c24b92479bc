#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuratowski/isomorphism.hpp"
#include "kuratowski/monoid.hpp"

namespace kuratowski {

struct SemigroupEntry {
  ElementSet elements;
  std::string name;  // canonical: fewest generators, then dictionary order
  std::optional<ElementId> identity;
  bool group = false;
  std::size_t type = 0;  // index into CensusReport::classes
  std::vector<ElementSet> minimum_generators;
  std::vector<ElementSet> irredundant_generators;
  /// Whether I maps the semigroup onto itself as an anti-automorphism; empty
  /// when the semigroup is not contained in the domain of I.
  std::optional<bool> i_anti_automorphism;
};

struct SizeRow {
  std::size_t count = 0;
  std::size_t types = 0;
  std::size_t monoids = 0;
  std::size_t groups = 0;
};

struct CensusReport {
  ElementSet scope;
  std::size_t total_semigroups = 0;
  std::size_t iso_types = 0;
  std::size_t non_monoid_count = 0;
  std::size_t groups = 0;
  std::size_t monoids = 0;  // groups included
  std::map<std::size_t, SizeRow> by_size;
  std::vector<SemigroupEntry> semigroups;  // sorted by (size, bit pattern)
  std::vector<IsoClass> classes;
};

namespace detail {

inline std::optional<bool> i_restriction(const MagmaTable& table, ElementSet s) {
  const ElementSet domain{0, 2, 5, 7, 8, 10, 13};
  if (table.order() != kOperationCount || !s.subset_of(domain)) return std::nullopt;
  ElementSet image;
  s.for_each([&](ElementId x) { image.insert(kAntiAutomorphismI[x]); });
  if (image != s) return false;
  return check_anti_morphism(table, s, kAntiAutomorphismI);
}

}  // namespace detail

/// Enumerates and classifies every semigroup inside the closed subset scope
/// of table (the Kuratowski monoid by default).
inline CensusReport census(const MagmaTable& table, ElementSet scope) {
  if (!is_closed(table, scope)) throw InputError("census scope is not closed");
  CensusReport r;
  r.scope = scope;
  const auto sets = subsemigroups_within(table, scope);
  r.classes = classify(table, sets);
  std::vector<std::size_t> type_of(sets.size());
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    for (auto m : r.classes[c].members) type_of[m] = c;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    SemigroupEntry e;
    e.elements = sets[i];
    e.minimum_generators = minimal_generating_collections(table, sets[i]);
    e.irredundant_generators = irredundant_generating_collections(table, sets[i]);
    e.name = angle_name(e.minimum_generators.front());
    e.identity = find_identity(table, sets[i]);
    e.group = e.identity && is_group(table, sets[i]);
    e.type = type_of[i];
    e.i_anti_automorphism = detail::i_restriction(table, sets[i]);
    auto& row = r.by_size[sets[i].size()];
    ++row.count;
    if (e.identity) ++row.monoids;
    if (e.group) ++row.groups;
    r.semigroups.push_back(std::move(e));
  }
  for (const auto& c : r.classes) ++r.by_size[c.representative.size()].types;
  r.total_semigroups = sets.size();
  r.iso_types = r.classes.size();
  for (const auto& e : r.semigroups) {
    if (e.identity) ++r.monoids;
    else ++r.non_monoid_count;
    if (e.group) ++r.groups;
  }
  return r;
}

inline CensusReport census(ElementSet scope) {
  return census(kuratowski_monoid().table, scope);
}

/// Semigroups without identity, sorted by the dictionary order of their
/// canonical names. For M this is the numbering (1)..(43) of the classical list.
inline std::vector<ElementSet> non_monoids_by_name(const MagmaTable& table) {
  std::vector<std::pair<ElementSet, ElementSet>> named;  // (name gens, set)
  for (auto s : enumerate_subsemigroups(table)) {
    if (!is_monoid(table, s)) named.emplace_back(canonical_generators(table, s), s);
  }
  std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) {
    return detail::dictionary_less(a.first, b.first);
  });
  std::vector<ElementSet> out;
  for (auto& [g, s] : named) out.push_back(s);
  return out;
}

namespace detail {

inline std::optional<std::vector<ElementId>> parse_id_list(std::string_view body) {
  std::vector<ElementId> ids;
  while (!body.empty()) {
    const auto comma = body.find(',');
    auto token = body.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && (token.front() == 's' || token.front() == 'S')) token.remove_prefix(1);
    ElementId v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      return std::nullopt;
    }
    ids.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (ids.empty()) return std::nullopt;
  return ids;
}

}  // namespace detail

/// Resolves "M", "M1", "<i,j,...>", "i,j,..." or "(k)" (the k-th semigroup
/// without identity in dictionary order of names, 1-based) to an element set
/// of the Kuratowski monoid.
inline ElementSet named_semigroup(std::string_view name) {
  const auto& m = kuratowski_monoid();
  if (name == "M") return m.table.all();
  if (name == "M1") return generate(m.table, ElementSet{1, 6});
  if (name.size() >= 3 && name.front() == '(' && name.back() == ')') {
    int k = 0;
    auto body = name.substr(1, name.size() - 2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec == std::errc{} && ptr == body.data() + body.size()) {
      const auto list = non_monoids_by_name(m.table);
      if (k >= 1 && static_cast<std::size_t>(k) <= list.size()) return list[k - 1];
    }
    throw LookupError("unknown list item " + std::string(name));
  }
  auto body = name;
  if (!body.empty() && body.front() == '<' && body.back() == '>') {
    body = body.substr(1, body.size() - 2);
  }
  if (auto ids = detail::parse_id_list(body)) {
    ElementSet gens;
    for (auto id : *ids) {
      if (id >= kOperationCount) throw LookupError("no operation s" + std::to_string(id));
      gens.insert(id);
    }
    return generate(m.table, gens);
  }
  throw LookupError("unknown semigroup name '" + std::string(name) + "'");
}

}  // namespace kuratowski
