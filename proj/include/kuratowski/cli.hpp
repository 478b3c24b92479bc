#pragma once

// Command-line front end. run() parses arguments, dispatches to the library
// and writes one document (JSON, CSV or ASCII) to the output stream.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "kuratowski/io.hpp"

namespace kuratowski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using io::json;

struct Outcome {
  std::string command;
  json payload;
  bool failed = false;
};

/// "3,4", "<3,4>", "M", "M1" or "(15)"; empty means all of M.
inline ElementSet parse_scope(const std::string& text) {
  return text.empty() ? kuratowski_monoid().table.all() : named_semigroup(text);
}

inline std::pair<ElementId, ElementId> parse_equality(const std::string& text) {
  const auto r = spaces::parse_relation(text);
  if (!std::holds_alternative<spaces::SigmaEquality>(r)) {
    throw InputError("--relate expects i=k, got '" + text + "'");
  }
  const auto eq = std::get<spaces::SigmaEquality>(r);
  return {eq.lhs, eq.rhs};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Outcome table_command(const std::string& name, const std::string& within) {
  if (!name.empty() && !within.empty()) throw InputError("give at most one of --name and --within");
  const auto& M = kuratowski_monoid().table;
  const ElementSet s = parse_scope(name.empty() ? within : name);
  return {"table", {{"scope", s.ids()}, {"name", canonical_name(M, s)}, {"table", table_to_json(restrict_table(M, s))}}};
}

inline Outcome census_command(const std::string& within) {
  return {"census", io::census_payload(census(parse_scope(within)))};
}

inline Outcome classify_command(const std::string& within) {
  const auto& M = kuratowski_monoid().table;
  const auto c = census(parse_scope(within));
  json classes = json::array();
  for (std::size_t t = 0; t < c.classes.size(); ++t) {
    const auto& cls = c.classes[t];
    json members = json::array();
    for (auto m : cls.members) members.push_back(c.semigroups[m].name);
    classes.push_back({{"type", t},
                       {"representative", cls.representative_name},
                       {"size", cls.fingerprint.size},
                       {"fingerprint", cls.fingerprint.to_string()},
                       {"members", members}});
  }
  json non_monoids = json::array();
  for (const auto& item : io::non_monoid_list_payload(M)) {
    if (ElementSet::from_ids(item.at("elements").get<std::vector<ElementId>>()).subset_of(c.scope)) {
      non_monoids.push_back(item);
    }
  }
  return {"classify", {{"scope", c.scope.ids()}, {"classes", classes}, {"non_monoids", non_monoids}}};
}

inline Outcome verify_command(const std::vector<std::string>& selection) {
  std::optional<std::vector<std::string>> chosen;
  if (!(selection.size() == 1 && selection[0] == "all")) {
    for (const auto& s : selection) {
      bool known = false;
      for (const auto& def : check_definitions()) {
        if (def.id == s || def.id.rfind(s + ".", 0) == 0) known = true;
      }
      if (!known) throw LookupError("unknown check '" + s + "'");
    }
    chosen = selection;
  }
  const auto report = verify_checks(embedded_golden(), chosen);
  return {"verify", io::verification_payload(report), !report.passed()};
}

inline Outcome quotient_command(const std::vector<std::string>& relate) {
  const auto& M = kuratowski_monoid().table;
  std::vector<std::pair<ElementId, ElementId>> relations;
  for (const auto& r : relate) relations.push_back(parse_equality(r));
  const auto p = congruence_closure(M, relations);
  return {"quotient", io::quotient_payload(relations, p, quotient_table(M, p))};
}

inline Outcome analyze_command(const std::string& file, const std::string& set) {
  const auto input = io::operator_from_json(read_json_file(file));
  const auto& op = input.op;
  const auto om = spaces::operation_monoid(op);
  const auto best = spaces::max_kuratowski_set(op);
  json payload = {{"points", op.points},
                  {"kind", input.space ? "topology" : "operator"},
                  {"operation_monoid", io::operation_monoid_json(om)},
                  {"max_orbit", {{"set", best.set.to_bitstring(op.points)}, {"size", best.orbit_size}}}};
  if (input.space) {
    payload["space"] = io::space_to_json(*input.space);
    payload["extremally_disconnected"] = spaces::is_extremally_disconnected(*input.space);
  }
  if (!set.empty()) {
    const auto a = io::parse_bitstring(set, op.points);
    const auto orbit = spaces::kuratowski_orbit(op, a);
    json images = json::object();
    for (ElementId i = 0; i < kOperationCount; ++i) images[sigma_name(i)] = orbit.images[i].to_bitstring(op.points);
    payload["orbit"] = {{"set", set}, {"size", orbit.size}, {"images", images}};
  }
  return {"space analyze", payload};
}

inline Outcome enumerate_command(std::size_t n, bool up_to_homeo, bool count_only) {
  json payload = {{"points", n}, {"up_to_homeo", up_to_homeo}};
  std::size_t count = 0;
  json list = json::array();
  auto visit = [&](const spaces::FiniteSpace& s) {
    ++count;
    if (!count_only) list.push_back(io::space_to_json(s));
  };
  if (up_to_homeo) {
    for (const auto& s : spaces::homeomorphism_classes(n)) visit(s);
  } else {
    spaces::for_each_labeled_space(n, visit);
  }
  payload["count"] = count;
  if (!count_only) payload["spaces"] = std::move(list);
  return {"space enumerate", payload};
}

inline Outcome fourteen_command(std::size_t max_n, unsigned threads) {
  const auto rows = spaces::search_fourteen(max_n, threads);
  bool exceeded = false;
  for (const auto& r : rows) exceeded = exceeded || r.best_orbit > kOperationCount;
  return {"space fourteen", io::fourteen_payload(max_n, rows), exceeded};
}

inline Outcome check_command(const std::string& premise, const std::string& conclusion, std::size_t max_n) {
  const auto p = spaces::parse_relation(premise);
  const auto c = spaces::parse_relation(conclusion);
  const auto v = spaces::check_implication(p, c, max_n);
  return {"space check", io::implication_payload(p, c, max_n, v), !v.holds};
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kuratowski closure-complement monoid toolkit", "kuratowski"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "ascii"}));
  app.add_option("--output", output, "Write the document to PATH instead of stdout");
  app.add_flag("--timing", timing, "Record wall-clock time in the report");

  std::string name, within;
  auto* table = app.add_subcommand("table", "Cayley table of M or of a subsemigroup");
  table->add_option("--name", name, "M, M1, (k) or <i,j,...>");
  table->add_option("--within", within, "Generators i,j,...");

  auto* census_cmd = app.add_subcommand("census", "Enumerate and classify semigroups");
  census_cmd->add_option("--within", within, "Generators of the scope");

  auto* classify = app.add_subcommand("classify", "Isomorphism classes and the numbered non-monoid list");
  classify->add_option("--within", within, "Generators of the scope");

  std::vector<std::string> checks;
  auto* verify = app.add_subcommand("verify", "Check published claims against the embedded golden data");
  verify->add_option("checks", checks, "all, or check ids / id prefixes")->required();

  std::vector<std::string> relate;
  auto* quotient = app.add_subcommand("quotient", "Quotient of M by the congruence generated by relations");
  quotient->add_option("--relate", relate, "i=k (repeatable)")->required();

  auto* space = app.add_subcommand("space", "Finite topological spaces and operators");
  space->require_subcommand(1);
  std::string file, set;
  auto* analyze = space->add_subcommand("analyze", "Operation monoid and orbits of a space or operator");
  analyze->add_option("--file", file, "Space or operator JSON")->required()->check(CLI::ExistingFile);
  analyze->add_option("--set", set, "Subset as a little-endian bitstring");

  std::size_t n = 0;
  bool up_to_homeo = false, count_only = false;
  unsigned threads = 1;
  auto* enumerate = space->add_subcommand("enumerate", "All topologies on n points");
  enumerate->add_option("-n", n, "Number of points")->required()->check(CLI::Range(1, 7));
  enumerate->add_flag("--up-to-homeo", up_to_homeo, "One space per homeomorphism class");
  enumerate->add_flag("--count-only", count_only, "Report only the count");

  std::size_t max_n = 0;
  auto* fourteen = space->add_subcommand("fourteen", "Largest Kuratowski orbit for each n");
  fourteen->add_option("--max-n", max_n, "Largest number of points")->required()->check(CLI::Range(1, 7));
  fourteen->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string premise, conclusion;
  auto* check = space->add_subcommand("check", "Test an implication on every small space");
  check->add_option("--premise", premise, "i=k or discrete")->required();
  check->add_option("--conclusion", conclusion, "i=k or discrete")->required();
  check->add_option("--max-n", max_n, "Largest number of points")->required()->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "kuratowski: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  detail::Outcome outcome;
  try {
    if (*table) outcome = detail::table_command(name, within);
    else if (*census_cmd) outcome = detail::census_command(within);
    else if (*classify) outcome = detail::classify_command(within);
    else if (*verify) outcome = detail::verify_command(checks);
    else if (*quotient) outcome = detail::quotient_command(relate);
    else if (*analyze) outcome = detail::analyze_command(file, set);
    else if (*enumerate) outcome = detail::enumerate_command(n, up_to_homeo, count_only);
    else if (*fourteen) outcome = detail::fourteen_command(max_n, threads);
    else if (*check) outcome = detail::check_command(premise, conclusion, max_n);
  } catch (const InputError& e) {
    err << "kuratowski: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "kuratowski: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "kuratowski: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "kuratowski: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kuratowski: " << e.what() << '\n';
    return kExitFailed;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  std::string document;
  if (format == "json") {
    io::json report = {{"schema_version", io::kSchemaVersion},
                       {"command", {{"name", outcome.command}, {"args", args}}},
                       {"timing", timing ? io::json{{"elapsed_ms", elapsed.count()}} : io::json(nullptr)},
                       {"payload", outcome.payload}};
    document = report.dump(2) + '\n';
  } else if (format == "csv") {
    document = io::render_csv(outcome.command, outcome.payload);
  } else {
    document = io::render_ascii(outcome.command, outcome.payload);
  }

  if (output.empty()) {
    out << document;
  } else {
    std::ofstream file_out(output, std::ios::binary);
    if (!(file_out << document)) {
      err << "kuratowski: cannot write " << output << '\n';
      return kExitUsage;
    }
  }
  return outcome.failed ? kExitFailed : kExitOk;
}

}  // namespace kuratowski::cli
