#pragma once

// Reference data transcribed from the literature and shipped as JSON
// fixtures. The fixtures are compiled into the library so that verification
// needs no file access.

#include <algorithm>
#include <json.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuratowski/fixture_data.hpp"
#include "kuratowski/magma_table.hpp"

namespace kuratowski {

struct NonMonoidItem {
  int number = 0;
  ElementSet name;
  std::vector<ElementSet> generators;
  ElementSet elements;
};

/// A small table displayed with letters; letters[j] names semigroup.ids()[j].
struct LetterTable {
  ElementSet semigroup;
  std::vector<std::string> letters;
  MagmaTable table;
};

struct QuotientFixture {
  std::pair<ElementId, ElementId> relation;
  MagmaTable table;
};

struct GoldenData {
  MagmaTable cayley;
  std::vector<NonMonoidItem> nonmonoids;
  QuotientFixture quotient_s7eq13;
  std::vector<LetterTable> small_tables;
};

namespace detail {

inline ElementSet set_from_json(const nlohmann::json& j) {
  return ElementSet::from_ids(j.get<std::vector<ElementId>>());
}

}  // namespace detail

/// {"order": n, "entries": [[...]], "names": [...]}; names are optional.
inline MagmaTable table_from_json(const nlohmann::json& j) {
  auto rows = j.at("entries").get<std::vector<std::vector<ElementId>>>();
  if (j.at("order").get<std::size_t>() != rows.size()) {
    throw InputError("table order does not match number of rows");
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return MagmaTable(std::move(rows), std::move(names));
}

inline nlohmann::json table_to_json(const MagmaTable& t) {
  return {{"order", t.order()}, {"names", t.names()}, {"entries", t.rows()}};
}

inline std::vector<NonMonoidItem> nonmonoids_from_json(const nlohmann::json& j) {
  std::vector<NonMonoidItem> out;
  for (const auto& item : j.at("items")) {
    NonMonoidItem it;
    it.number = item.at("number").get<int>();
    it.name = detail::set_from_json(item.at("name"));
    for (const auto& g : item.at("generators")) it.generators.push_back(detail::set_from_json(g));
    it.elements = detail::set_from_json(item.at("elements"));
    out.push_back(std::move(it));
  }
  return out;
}

inline std::vector<LetterTable> small_tables_from_json(const nlohmann::json& j) {
  std::vector<LetterTable> out;
  for (const auto& t : j.at("tables")) {
    LetterTable lt;
    lt.semigroup = detail::set_from_json(t.at("semigroup"));
    lt.letters = t.at("letters").get<std::vector<std::string>>();
    const auto rows = t.at("rows").get<std::vector<std::string>>();
    std::vector<std::vector<ElementId>> entries;
    for (const auto& row : rows) {
      std::vector<ElementId> r;
      for (char c : row) {
        const auto pos = std::find(lt.letters.begin(), lt.letters.end(), std::string(1, c));
        if (pos == lt.letters.end()) throw InputError(std::string("unknown letter ") + c);
        r.push_back(static_cast<ElementId>(pos - lt.letters.begin()));
      }
      entries.push_back(std::move(r));
    }
    if (entries.size() != lt.semigroup.size()) {
      throw InputError("small table size does not match its semigroup");
    }
    lt.table = MagmaTable(std::move(entries), lt.letters);
    out.push_back(std::move(lt));
  }
  return out;
}

inline GoldenData parse_golden(std::string_view cayley, std::string_view nonmonoids,
                               std::string_view quotient, std::string_view small) {
  GoldenData g;
  g.cayley = table_from_json(nlohmann::json::parse(cayley));
  g.nonmonoids = nonmonoids_from_json(nlohmann::json::parse(nonmonoids));
  const auto q = nlohmann::json::parse(quotient);
  const auto rel = q.at("relation").get<std::vector<ElementId>>();
  g.quotient_s7eq13 = {{rel.at(0), rel.at(1)}, table_from_json(q)};
  g.small_tables = small_tables_from_json(nlohmann::json::parse(small));
  return g;
}

/// The fixtures compiled into the library.
inline const GoldenData& embedded_golden() {
  static const GoldenData g =
      parse_golden(fixtures::kCayleyM, fixtures::kNonMonoids43, fixtures::kQuotientS7eq13,
                   fixtures::kSmallTables);
  return g;
}

}  // namespace kuratowski
