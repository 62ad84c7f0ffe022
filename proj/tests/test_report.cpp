#include <gtest/gtest.h>

#include "drd/errors.hpp"
#include "drd/formulas.hpp"
#include "drd/report.hpp"

using namespace drd;
using nlohmann::json;

TEST(Report, StatusFollowsRows) {
  Report r;
  r.command = "check";
  EXPECT_EQ(r.status(), Status::ok);
  r.results.push_back({{"id", "a"}, {"holds", true}});
  EXPECT_EQ(r.status(), Status::ok);
  r.results.push_back({{"id", "b"}, {"holds", false}});
  EXPECT_EQ(r.status(), Status::violation);
  r.error = "boom";
  EXPECT_EQ(r.status(), Status::error);
  EXPECT_EQ(r.to_json()["status"], "error");
  EXPECT_EQ(r.to_json()["error"], "boom");
}

TEST(Report, SkippedRowsAreNotViolations) {
  Report r;
  r.results.push_back(skipped_row("grid2", {{"n", 2}}, "excluded case"));
  EXPECT_EQ(r.status(), Status::ok);
}

TEST(Report, CsvColumnsAreTheUnionWithIdFirst) {
  Report r;
  r.command = "compute";
  r.results.push_back({{"id", "x"}, {"value", 3}});
  r.results.push_back({{"id", "y"}, {"witness", "0,3,0"}});
  EXPECT_EQ(r.render(OutputFormat::csv), "id,value,witness\nx,3,\ny,,\"0,3,0\"\n");
}

TEST(Report, TableHasHeaderLine) {
  Report r;
  r.command = "compute";
  r.results.push_back({{"id", "x"}, {"value", 3}});
  const auto text = r.render(OutputFormat::table);
  EXPECT_EQ(text, "compute: ok\nid  value\nx   3\n");
}

TEST(Report, JsonEnvelope) {
  Report r;
  r.command = "compute";
  r.inputs = {{"family", "cycle:7"}};
  const json j = json::parse(r.render(OutputFormat::json));
  EXPECT_EQ(j["command"], "compute");
  EXPECT_EQ(j["inputs"]["family"], "cycle:7");
  EXPECT_TRUE(j["results"].is_array());
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["elapsed_ms"], 0);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_output_format("xml"), InvalidArgument);
}

TEST(Rows, FormulaRowChecksWitness) {
  auto f = gamma_dr_grid2(3);
  json ok = formula_row(f, 6);
  EXPECT_TRUE(ok["holds"].get<bool>());
  EXPECT_TRUE(ok["witness_valid"].get<bool>());
  EXPECT_FALSE(formula_row(f, 7)["holds"].get<bool>());

  f.witness->set(2, 2);
  json bad = formula_row(f, 6);
  EXPECT_FALSE(bad["witness_valid"].get<bool>());
  EXPECT_FALSE(bad["holds"].get<bool>());

  json cyc = formula_row(gamma_dr_cycle(7), std::nullopt);
  EXPECT_FALSE(cyc.contains("holds"));
  EXPECT_EQ(cyc["value"], 8);
}
