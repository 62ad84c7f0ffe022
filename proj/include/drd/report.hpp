#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "drd/bounds.hpp"
#include "drd/formulas.hpp"
#include "drd/solvers.hpp"

namespace drd {

enum class Status { ok, violation, error };
enum class OutputFormat { table, json, csv };

std::string_view to_string(Status s);
OutputFormat parse_output_format(std::string_view name);

// Result envelope shared by every CLI command:
//   {command, inputs, results: [{id, params, value | lhs/rhs, holds?, witness?,
//   skipped?, ...}], status, elapsed_ms}
// Keys are emitted in sorted order so output is stable.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<nlohmann::json> results;
  long long elapsed_ms = 0;
  std::optional<std::string> error;
  /// Free-form remarks (excluded cases, capped sweeps); emitted only when non-empty.
  std::vector<std::string> notices;

  /// violation iff some row has holds == false; error iff `error` is set.
  Status status() const;

  nlohmann::json to_json() const;
  std::string render(OutputFormat format) const;
};

/// Row for an exact solve. `witness` / `stats` control the optional fields.
nlohmann::json solve_row(std::string id, nlohmann::json params, const SolveResult& r, bool witness, bool stats);

/// Row comparing a closed form with the exact solver. `solver_value` is
/// omitted when the instance was not solved. holds is false when the values
/// differ or the catalog witness fails validation or has the wrong weight.
nlohmann::json formula_row(const FormulaResult& f, std::optional<long long> solver_value);

nlohmann::json bound_row(const BoundReport& b);

nlohmann::json scan_row(const PairScanResult& s);

nlohmann::json skipped_row(std::string id, nlohmann::json params, std::string reason);

std::string witness_text(const Witness& w);

}  // namespace drd
