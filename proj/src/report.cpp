#include "drd/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "drd/errors.hpp"
#include "drd/graph_io.hpp"

namespace drd {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw InvalidArgument("unknown output format '" + std::string(name) + "'");
}

Status Report::status() const {
  if (error) return Status::error;
  for (const auto& row : results)
    if (row.contains("holds") && row["holds"].is_boolean() && !row["holds"].get<bool>()) return Status::violation;
  return Status::ok;
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["status"] = to_string(status());
  j["elapsed_ms"] = elapsed_ms;
  if (error) j["error"] = *error;
  if (!notices.empty()) j["notices"] = notices;
  return j;
}

namespace {

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Union of row keys; id first, then the rest alphabetically.
std::vector<std::string> columns(const std::vector<json>& rows) {
  std::set<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items()) keys.insert(k);
  std::vector<std::string> out;
  if (keys.erase("id")) out.emplace_back("id");
  out.insert(out.end(), keys.begin(), keys.end());
  return out;
}

}  // namespace

std::string Report::render(OutputFormat format) const {
  if (format == OutputFormat::json) return to_json().dump(2) + "\n";

  const auto cols = columns(results);
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& row : results) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << csv_escape(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
      out << "\n";
    }
    return out.str();
  }

  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : results)
      if (row.contains(cols[i])) width[i] = std::max(width[i], cell(row[cols[i]]).size());
  }
  out << command << ": " << to_string(status());
  if (error) out << " (" << *error << ")";
  out << "\n";
  for (const auto& n : notices) out << "note: " << n << "\n";
  if (results.empty()) return out.str();
  auto line = [&](auto&& get) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string text = get(i);
      if (i + 1 < cols.size()) text.resize(width[i], ' ');
      out << (i ? "  " : "") << text;
    }
    out << "\n";
  };
  line([&](std::size_t i) { return cols[i]; });
  for (const auto& row : results) line([&](std::size_t i) { return row.contains(cols[i]) ? cell(row[cols[i]]) : ""; });
  return out.str();
}

std::string witness_text(const Witness& w) {
  return std::visit([](const auto& x) { return x.to_string(); }, w);
}

json solve_row(std::string id, json params, const SolveResult& r, bool witness, bool stats) {
  json row;
  row["id"] = std::move(id);
  row["params"] = std::move(params);
  row["value"] = r.value;
  if (witness) row["witness"] = witness_text(r.witness);
  if (stats) {
    row["nodes_explored"] = r.nodes_explored;
    row["method"] = to_string(r.method);
  }
  return row;
}

json formula_row(const FormulaResult& f, std::optional<long long> solver_value) {
  json row;
  row["id"] = f.family;
  row["params"] = f.params;
  row["value"] = f.value;
  row["theorem"] = f.theorem;
  bool holds = true;
  if (solver_value) {
    row["solver_value"] = *solver_value;
    holds = holds && *solver_value == f.value;
  }
  if (f.witness) {
    row["witness"] = f.witness->to_string();
    const bool valid = is_valid_drdf(f.graph, *f.witness).valid() && weight(*f.witness) == f.value;
    row["witness_valid"] = valid;
    holds = holds && valid;
  }
  if (solver_value || f.witness) row["holds"] = holds;
  return row;
}

json bound_row(const BoundReport& b) {
  json row;
  row["id"] = b.bound_id;
  row["params"] = b.context;
  if (b.skipped) {
    row["skipped"] = *b.skipped;
    return row;
  }
  row["lhs"] = b.lhs;
  row["rhs"] = b.rhs;
  if (b.rhs_upper) row["rhs_upper"] = *b.rhs_upper;
  row["relation"] = to_string(b.relation);
  row["holds"] = b.holds;
  if (!b.note.empty()) row["note"] = b.note;
  return row;
}

json scan_row(const PairScanResult& s) {
  json row;
  row["id"] = "pair_scan";
  row["params"] = {{"a", s.a}, {"b", s.b}, {"n_max", s.n_max}, {"connected_only", s.connected_only}};
  row["graphs_scanned"] = s.graphs_scanned;
  row["found"] = s.found ? json(serialize_graph(*s.found, GraphFormat::graph6)) : json(nullptr);
  return row;
}

json skipped_row(std::string id, json params, std::string reason) {
  json row;
  row["id"] = std::move(id);
  row["params"] = std::move(params);
  row["skipped"] = std::move(reason);
  return row;
}

}  // namespace drd
