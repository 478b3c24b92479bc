#pragma once

// Serialization: tables as JSON/CSV/ASCII, spaces and operators as JSON,
// and JSON payloads for every library result the command line exposes.

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "kuratowski/census.hpp"
#include "kuratowski/golden.hpp"
#include "kuratowski/spaces/search.hpp"
#include "kuratowski/verify.hpp"

namespace kuratowski::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// "s7" -> "σ7"; other names pass through.
inline std::string display_name(const std::string& name) {
  if (name.size() > 1 && name[0] == 's' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return "σ" + name.substr(1);
  }
  return name;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// ---- tables ----------------------------------------------------------------

/// Header row of names (after an empty corner cell), then one row per left
/// factor, labelled by its name.
inline std::string table_to_csv(const MagmaTable& t) {
  std::string out;
  for (ElementId k = 0; k < t.order(); ++k) out += ',' + t.name(k);
  out += '\n';
  for (ElementId i = 0; i < t.order(); ++i) {
    out += t.name(i);
    for (ElementId k = 0; k < t.order(); ++k) out += ',' + t.name(t.entry(i, k));
    out += '\n';
  }
  return out;
}

inline MagmaTable table_from_csv(std::string_view text) {
  std::vector<std::string> lines;
  for (auto& line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw InputError("empty csv table");
  auto header = split(lines[0], ',');
  if (header.empty() || !header[0].empty()) throw InputError("csv header must start with an empty cell");
  std::vector<std::string> names(header.begin() + 1, header.end());
  if (lines.size() != names.size() + 1) throw InputError("csv table is not square");
  auto id_of = [&](const std::string& name) -> ElementId {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("unknown element '" + name + "' in csv table");
    return static_cast<ElementId>(it - names.begin());
  };
  std::vector<std::vector<ElementId>> rows;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto cells = split(lines[i + 1], ',');
    if (cells.size() != names.size() + 1 || cells[0] != names[i]) {
      throw InputError("csv row " + std::to_string(i + 1) + " is malformed");
    }
    std::vector<ElementId> row;
    for (std::size_t k = 1; k < cells.size(); ++k) row.push_back(id_of(cells[k]));
    rows.push_back(std::move(row));
  }
  return MagmaTable(std::move(rows), std::move(names));
}

/// Display width of a UTF-8 string, in code points.
inline std::size_t columns(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

/// Grid in the layout of the published displays: σ names, and the identity
/// row and column left out when the table has an identity and more than one
/// element.
inline std::string table_to_ascii(const MagmaTable& t) {
  std::vector<ElementId> shown;
  const auto identity = t.order() > 1 ? find_identity(t, t.all()) : std::nullopt;
  for (ElementId i = 0; i < t.order(); ++i) {
    if (!identity || *identity != i) shown.push_back(i);
  }
  std::size_t width = 1;
  for (ElementId i = 0; i < t.order(); ++i) width = std::max(width, columns(display_name(t.name(i))));
  auto cell = [&](const std::string& name) {
    const auto text = display_name(name);
    return text + std::string(width - columns(text), ' ');
  };
  std::string out = std::string(width, ' ') + " |";
  for (auto k : shown) out += ' ' + cell(t.name(k));
  out.erase(out.find_last_not_of(' ') + 1);
  out += '\n' + std::string(width + 1, '-') + '+' + std::string(shown.size() * (width + 1), '-') + '\n';
  for (auto i : shown) {
    std::string line = cell(t.name(i)) + " |";
    for (auto k : shown) line += ' ' + cell(t.name(t.entry(i, k)));
    out += line.substr(0, line.find_last_not_of(' ') + 1) + '\n';
  }
  return out;
}

// ---- spaces ----------------------------------------------------------------

inline std::vector<std::string> bitstrings(const std::vector<spaces::PointSet>& sets, std::size_t n) {
  std::vector<std::string> out;
  for (auto s : sets) out.push_back(s.to_bitstring(n));
  return out;
}

inline spaces::PointSet parse_bitstring(const std::string& bits, std::size_t n) {
  if (bits.size() != n) {
    throw InputError("bitstring '" + bits + "' must have exactly " + std::to_string(n) + " characters");
  }
  return spaces::PointSet::from_bitstring(bits);
}

inline json space_to_json(const spaces::FiniteSpace& s) {
  const auto nb = s.min_nbhds();
  return {{"points", s.points()}, {"min_nbhd", bitstrings({nb.begin(), nb.begin() + s.points()}, s.points())}};
}

/// A finite space or an abstract operator read from the documented formats.
struct OperatorInput {
  spaces::SetOperator op;
  std::optional<spaces::FiniteSpace> space;
};

inline OperatorInput operator_from_json(const json& j) {
  const auto n = j.at("points").get<std::size_t>();
  if (n == 0 || n > spaces::kMaxPoints) {
    throw CapacityError("points must be in 1..16, got " + std::to_string(n));
  }
  const int forms = int(j.contains("opens")) + int(j.contains("min_nbhd")) + int(j.contains("images"));
  if (forms != 1) throw InputError("give exactly one of \"opens\", \"min_nbhd\" or \"images\"");
  if (j.contains("images")) {
    std::vector<spaces::PointSet> images;
    for (const auto& b : j.at("images")) images.push_back(parse_bitstring(b.get<std::string>(), n));
    return {spaces::abstract_operator(n, std::move(images)), std::nullopt};
  }
  spaces::FiniteSpace space;
  if (j.contains("opens")) {
    std::vector<spaces::PointSet> opens;
    for (const auto& o : j.at("opens")) {
      spaces::PointSet s;
      for (auto p : o.get<std::vector<std::size_t>>()) {
        if (p >= n) throw InputError("open set mentions point " + std::to_string(p));
        s.insert(p);
      }
      opens.push_back(s);
    }
    space = spaces::validate_topology(opens, n);
  } else {
    std::vector<spaces::PointSet> nb;
    for (const auto& b : j.at("min_nbhd")) nb.push_back(parse_bitstring(b.get<std::string>(), n));
    space = spaces::FiniteSpace(n, nb);
  }
  return {spaces::closure_operator(space), space};
}

// ---- payloads --------------------------------------------------------------

inline json ids_json(ElementSet s) { return s.ids(); }

inline json sets_json(const std::vector<ElementSet>& v) {
  json out = json::array();
  for (auto s : v) out.push_back(s.ids());
  return out;
}

inline json census_payload(const CensusReport& c) {
  json by_size = json::array();
  for (const auto& [size, row] : c.by_size) {
    by_size.push_back({{"size", size}, {"count", row.count}, {"types", row.types},
                       {"monoids", row.monoids}, {"groups", row.groups}});
  }
  json semigroups = json::array();
  for (const auto& s : c.semigroups) {
    semigroups.push_back({{"elements", s.elements.ids()},
                          {"name", s.name},
                          {"identity", s.identity ? json(*s.identity) : json(nullptr)},
                          {"group", s.group},
                          {"type", s.type},
                          {"minimum_generators", sets_json(s.minimum_generators)},
                          {"irredundant_generators", sets_json(s.irredundant_generators)},
                          {"i_anti_automorphism", s.i_anti_automorphism ? json(*s.i_anti_automorphism) : json(nullptr)}});
  }
  json classes = json::array();
  for (std::size_t t = 0; t < c.classes.size(); ++t) {
    const auto& cls = c.classes[t];
    json members = json::array();
    for (auto m : cls.members) members.push_back(c.semigroups[m].name);
    classes.push_back({{"type", t},
                       {"representative", cls.representative_name},
                       {"fingerprint", cls.fingerprint.to_string()},
                       {"members", members}});
  }
  return {{"scope", ids_json(c.scope)},
          {"totals", {{"semigroups", c.total_semigroups}, {"types", c.iso_types}, {"groups", c.groups},
                      {"monoids", c.monoids}, {"non_monoids", c.non_monoid_count}}},
          {"by_size", by_size},
          {"semigroups", semigroups},
          {"classes", classes}};
}

inline json non_monoid_list_payload(const MagmaTable& table) {
  json out = json::array();
  int number = 0;
  for (auto s : non_monoids_by_name(table)) {
    out.push_back({{"number", ++number},
                   {"name", canonical_name(table, s)},
                   {"elements", s.ids()},
                   {"generators", sets_json(irredundant_generating_collections(table, s))}});
  }
  return out;
}

inline json verification_payload(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id}, {"claim", c.claim}, {"expected", c.expected},
                      {"computed", c.computed}, {"status", to_string(c.status)}});
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

inline json quotient_payload(const std::vector<std::pair<ElementId, ElementId>>& relations,
                             const Partition& p, const Quotient& q) {
  json rel = json::array();
  for (auto [a, b] : relations) rel.push_back({a, b});
  json classes = json::array();
  for (auto c : p.classes) classes.push_back(c.ids());
  return {{"relations", rel}, {"classes", classes}, {"table", table_to_json(q.table)}};
}

inline json operation_monoid_json(const spaces::OperatorMonoid& om) {
  json rel = json::array();
  for (auto [a, b] : om.collapsed_relations) rel.push_back({a, b});
  return {{"size", om.size()},
          {"collapsed_relations", rel},
          {"sigma_image", om.sigma_image},
          {"table", table_to_json(om.table)}};
}

inline json implication_payload(const spaces::RelationSpec& premise, const spaces::RelationSpec& conclusion,
                                std::size_t max_n, const spaces::ImplicationVerdict& v) {
  return {{"premise", spaces::to_string(premise)},
          {"conclusion", spaces::to_string(conclusion)},
          {"max_n", max_n},
          {"holds", v.holds},
          {"spaces_checked", v.spaces_checked},
          {"premise_satisfied", v.premise_satisfied},
          {"counterexample", v.counterexample ? space_to_json(*v.counterexample) : json(nullptr)}};
}

inline json fourteen_payload(std::size_t max_n, const std::vector<spaces::FourteenRow>& rows) {
  json out = json::array();
  json first = nullptr;
  for (const auto& r : rows) {
    out.push_back({{"points", r.points},
                   {"spaces_checked", r.spaces_checked},
                   {"best_orbit", r.best_orbit},
                   {"witness", space_to_json(r.witness)},
                   {"witness_set", r.witness_set.to_bitstring(r.points)}});
    if (first.is_null() && r.best_orbit == kOperationCount) first = r.points;
  }
  return {{"max_n", max_n}, {"rows", out}, {"first_fourteen", first}};
}

// ---- rendering -------------------------------------------------------------
// csv and ascii renderings are computed from the JSON payload only.

inline std::string join(const json& ids, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i].is_string() ? ids[i].get<std::string>() : ids[i].dump();
  }
  return out;
}

inline std::string join_sets(const json& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ' ';
    out += '<' + join(sets[i], ",") + '>';
  }
  return out;
}

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string render_csv(const std::string& command, const json& payload) {
  if (payload.contains("table")) return table_to_csv(table_from_json(payload.at("table")));
  std::string out;
  if (command == "census") {
    out = "name,size,elements,type,identity,group,minimum_generators,irredundant_generators\n";
    for (const auto& s : payload.at("semigroups")) {
      out += csv_field(s.at("name").get<std::string>()) + ',' + std::to_string(s.at("elements").size()) + ',' +
             join(s.at("elements")) + ',' + s.at("type").dump() + ',' +
             (s.at("identity").is_null() ? "" : s.at("identity").dump()) + ',' +
             (s.at("group").get<bool>() ? "1" : "0") + ',' + join_sets(s.at("minimum_generators")) + ',' +
             join_sets(s.at("irredundant_generators")) + '\n';
    }
  } else if (command == "classify") {
    out = "type,representative,size,members\n";
    for (const auto& c : payload.at("classes")) {
      out += c.at("type").dump() + ',' + csv_field(c.at("representative").get<std::string>()) + ',' +
             std::to_string(c.at("size").get<std::size_t>()) + ',' + csv_field(join(c.at("members"))) + '\n';
    }
  } else if (command == "verify") {
    out = "id,status,expected,computed\n";
    for (const auto& c : payload.at("checks")) {
      out += csv_field(c.at("id").get<std::string>()) + ',' + c.at("status").get<std::string>() + ',' +
             csv_field(c.at("expected").get<std::string>()) + ',' +
             csv_field(c.at("computed").get<std::string>()) + '\n';
    }
  } else if (command == "space enumerate") {
    out = "index,min_nbhd\n";
    std::size_t i = 0;
    for (const auto& s : payload.value("spaces", json::array())) {
      out += std::to_string(i++) + ',' + join(s.at("min_nbhd")) + '\n';
    }
  } else if (command == "space fourteen") {
    out = "points,spaces_checked,best_orbit,witness_min_nbhd,witness_set\n";
    for (const auto& r : payload.at("rows")) {
      out += r.at("points").dump() + ',' + r.at("spaces_checked").dump() + ',' + r.at("best_orbit").dump() +
             ',' + join(r.at("witness").at("min_nbhd")) + ',' + r.at("witness_set").get<std::string>() + '\n';
    }
  } else {
    out = "key,value\n";
    for (const auto& [key, value] : payload.items()) {
      out += key + ',' + csv_field(value.is_string() ? value.get<std::string>() : value.dump()) + '\n';
    }
  }
  return out;
}

inline std::string render_ascii(const std::string& command, const json& payload) {
  std::ostringstream out;
  if (command == "census") {
    const auto& t = payload.at("totals");
    out << "scope <" << join(payload.at("scope"), ",") << ">\n"
        << "semigroups " << t.at("semigroups") << ", types " << t.at("types") << ", groups "
        << t.at("groups") << ", monoids " << t.at("monoids") << ", non-monoids " << t.at("non_monoids") << "\n\n"
        << "size  count  types  monoids  groups\n";
    for (const auto& r : payload.at("by_size")) {
      char line[64];
      std::snprintf(line, sizeof line, "%4zu  %5zu  %5zu  %7zu  %6zu\n", r.at("size").get<std::size_t>(),
                    r.at("count").get<std::size_t>(), r.at("types").get<std::size_t>(),
                    r.at("monoids").get<std::size_t>(), r.at("groups").get<std::size_t>());
      out << line;
    }
    return out.str();
  }
  if (command == "classify") {
    for (const auto& c : payload.at("classes")) {
      out << "type " << c.at("type") << "  " << c.at("representative").get<std::string>() << "  ("
          << c.at("size") << " elements): " << join(c.at("members")) << '\n';
    }
    if (payload.contains("non_monoids")) {
      out << '\n';
      for (const auto& n : payload.at("non_monoids")) {
        out << '(' << n.at("number") << ") " << n.at("name").get<std::string>() << " = {"
            << join(n.at("elements"), ",") << "}  generators: " << join_sets(n.at("generators")) << '\n';
      }
    }
    return out.str();
  }
  if (command == "verify") {
    for (const auto& c : payload.at("checks")) {
      std::string status = c.at("status").get<std::string>();
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << status << "  " << c.at("id").get<std::string>() << "  " << c.at("claim").get<std::string>() << '\n';
      if (c.at("status") == "fail") {
        out << "      expected: " << c.at("expected").get<std::string>() << '\n'
            << "      computed: " << c.at("computed").get<std::string>() << '\n';
      }
    }
    out << (payload.at("passed").get<bool>() ? "all checks passed\n" : "verification FAILED\n");
    return out.str();
  }
  if (command == "space fourteen") {
    for (const auto& r : payload.at("rows")) {
      out << "n=" << r.at("points") << "  spaces " << r.at("spaces_checked") << "  max orbit "
          << r.at("best_orbit") << "  witness N=[" << join(r.at("witness").at("min_nbhd"))
          << "] A=" << r.at("witness_set").get<std::string>() << '\n';
    }
    out << "first n with orbit 14: " << (payload.at("first_fourteen").is_null() ? std::string("none")
                                                                             : payload.at("first_fourteen").dump())
        << '\n';
    return out.str();
  }
  if (command == "space check") {
    out << payload.at("premise").get<std::string>() << " => " << payload.at("conclusion").get<std::string>()
        << " on spaces with <= " << payload.at("max_n") << " points: "
        << (payload.at("holds").get<bool>() ? "holds" : "FAILS") << " (" << payload.at("spaces_checked")
        << " spaces, premise true in " << payload.at("premise_satisfied") << ")\n";
    if (!payload.at("counterexample").is_null()) {
      out << "counterexample N=[" << join(payload.at("counterexample").at("min_nbhd")) << "]\n";
    }
    return out.str();
  }
  if (command == "space enumerate") {
    out << payload.at("count") << " spaces on " << payload.at("points") << " points"
        << (payload.at("up_to_homeo").get<bool>() ? " up to homeomorphism" : "") << '\n';
    for (const auto& s : payload.value("spaces", json::array())) out << join(s.at("min_nbhd")) << '\n';
    return out.str();
  }
  if (command == "space analyze") {
    const auto& om = payload.at("operation_monoid");
    out << payload.at("kind").get<std::string>() << " on " << payload.at("points") << " points: "
        << om.at("size") << " distinct operations\n";
    out << "relations: ";
    for (std::size_t i = 0; i < om.at("collapsed_relations").size(); ++i) {
      const auto& r = om.at("collapsed_relations")[i];
      out << (i ? ", " : "") << "σ" << r[0] << "=σ" << r[1];
    }
    out << "\nlargest orbit " << payload.at("max_orbit").at("size") << " at "
        << payload.at("max_orbit").at("set").get<std::string>() << '\n';
    if (payload.contains("orbit")) {
      for (const auto& [name, set] : payload.at("orbit").at("images").items()) {
        out << display_name(name) << "(A) = " << set.get<std::string>() << '\n';
      }
    }
    out << '\n' << table_to_ascii(table_from_json(om.at("table")));
    return out.str();
  }
  if (payload.contains("table")) {
    if (command == "quotient") {
      out << "classes: ";
      for (std::size_t i = 0; i < payload.at("classes").size(); ++i) {
        out << (i ? " " : "") << '{' << join(payload.at("classes")[i], ",") << '}';
      }
      out << "\n\n";
    }
    out << table_to_ascii(table_from_json(payload.at("table")));
    return out.str();
  }
  return payload.dump(2) + '\n';
}

}  // namespace kuratowski::io
