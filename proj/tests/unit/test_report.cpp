#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "nacent/errors.hpp"
#include "nacent/report.hpp"

using namespace nacent;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = NACENT_FIXTURE_DIR;
const std::string kCli = NACENT_CLI_PATH;

int run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("analyze writes one JSON record per input") {
  RunConfig cfg;
  cfg.inputs = {"symmetric(3)", (kFixtures / "z2.json").string()};
  std::ostringstream out, err;
  CHECK(cmd_analyze(cfg, out, err) == 0);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 2);
  for (const auto& l : ls) {
    const auto j = ordered_json::parse(l);
    for (const char* key : {"group_id", "order", "center_order", "cent_count", "nacent_count", "category", "case",
                            "consequences", "violations"})
      CHECK(j.contains(key));
  }
  const auto s3 = ordered_json::parse(ls[1]);
  CHECK(s3["group_id"] == "symmetric(3)");
  CHECK(s3["cent_count"] == 5);
  CHECK(s3["category"] == "CA");
  CHECK(ordered_json::parse(ls[0])["group_id"].get<std::string>().find("#") != std::string::npos);
}

TEST_CASE("CSV output carries the same fields as JSON") {
  RunConfig cfg;
  cfg.inputs = {"dicyclic(2)"};
  std::ostringstream json_out, csv_out, err;
  REQUIRE(cmd_analyze(cfg, json_out, err) == 0);
  cfg.format = Format::kCsv;
  REQUIRE(cmd_analyze(cfg, csv_out, err) == 0);
  const auto record = ordered_json::parse(lines(json_out.str()).at(0));
  const auto flat = flatten_record(record);
  const auto csv = lines(csv_out.str());
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == csv_header(record));
  CHECK(csv[1] == csv_row(record));
  std::size_t commas = 0;
  for (char c : csv[0]) commas += c == ',';
  CHECK(commas + 1 == flat.size());
  bool found = false;
  for (const auto& [k, v] : flat) found = found || (k == "cent_count" && v == "4");
  CHECK(found);
}

TEST_CASE("analyze reports input errors with exit code 2") {
  RunConfig cfg;
  cfg.inputs = {(kFixtures / "s3_corrupted.json").string()};
  std::ostringstream out, err;
  CHECK(cmd_analyze(cfg, out, err) == 2);
  CHECK(err.str().find("latin square") != std::string::npos);
  cfg.inputs = {"bogus(("};
  CHECK(cmd_analyze(cfg, out, err) == 2);
}

TEST_CASE("verify over a small catalog summarises") {
  RunConfig cfg;
  cfg.command = Command::kVerify;
  cfg.max_order = 24;
  cfg.parallelism = 3;
  std::ostringstream out, err;
  CHECK(cmd_verify(cfg, out, err) == 0);
  const auto ls = lines(out.str());
  REQUIRE(!ls.empty());
  const auto summary = ordered_json::parse(ls.back());
  CHECK(summary["summary"] == true);
  CHECK(summary["groups"] == ls.size() - 1);
  CHECK(summary["violations"] == 0);
}

TEST_CASE("verify over a corpus directory") {
  RunConfig cfg;
  cfg.command = Command::kVerify;
  cfg.corpus_dir = kFixtures.string();
  std::ostringstream out, err;
  // The corrupted table is an input error; every other file is still verified.
  CHECK(cmd_verify(cfg, out, err) == 2);
  CHECK(err.str().find("s3_corrupted.json") != std::string::npos);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 7);
  const auto summary = ordered_json::parse(ls.back());
  CHECK(summary["groups"] == 6);
  CHECK(summary["input_errors"] == 1);
  CHECK(summary["violations"] == 0);
}

TEST_CASE("one bad analyze input does not hide the others") {
  RunConfig cfg;
  cfg.inputs = {"symmetric(3)", "bogus((", "dicyclic(2)"};
  std::ostringstream out, err;
  CHECK(cmd_analyze(cfg, out, err) == 2);
  CHECK(lines(out.str()).size() == 2);
  CHECK(err.str().find("bogus((") != std::string::npos);
}

TEST_CASE("run_reports propagates build errors") {
  const std::vector<GroupInput> inputs = {catalog_input(parse_spec("cyclic(3)")),
                                          {"broken", []() -> FiniteGroup { throw InvalidParams("broken"); }}};
  CHECK_THROWS_AS(run_reports(inputs, 2), InvalidParams);
  const auto res = run_reports_collecting(inputs, 2);
  CHECK(res.reports.size() == 1);
  REQUIRE(res.errors.size() == 1);
  CHECK(res.errors[0].id == "broken");
}

TEST_CASE("parallel runs match serial runs") {
  std::vector<GroupInput> inputs;
  for (const auto& spec : builtin_catalog(30)) inputs.push_back(catalog_input(spec));
  const auto serial = run_reports(inputs, 1);
  const auto parallel = run_reports(inputs, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(report_to_json(serial[i]) == report_to_json(parallel[i]));
  const auto s = summarize(serial);
  CHECK(s.groups == serial.size());
  CHECK(s.failed_groups == 0);
}

TEST_CASE("limits are checked") {
  RunConfig cfg;
  cfg.command = Command::kVerify;
  cfg.parallelism = 0;
  std::ostringstream out, err;
  CHECK(cmd_verify(cfg, out, err) == 2);
  cfg.parallelism = 1;
  cfg.max_order = 0;
  CHECK(cmd_verify(cfg, out, err) == 2);
}

TEST_CASE("catalog lists specs") {
  RunConfig cfg;
  cfg.command = Command::kCatalog;
  cfg.max_order = 6;
  std::ostringstream out, err;
  CHECK(cmd_catalog(cfg, out, err) == 0);
  CHECK(out.str().find("symmetric(3)") != std::string::npos);
}

TEST_CASE("command-line exit codes") {
  CHECK(run_cli("analyze 'symmetric(3)'") == 0);
  CHECK(run_cli("analyze --format csv 'dicyclic(2)'") == 0);
  CHECK(run_cli("analyze " + (kFixtures / "s3_corrupted.json").string()) == 2);
  CHECK(run_cli("analyze") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("verify --max-order 12") == 0);
  CHECK(run_cli("verify --max-order 0") == 2);
  CHECK(run_cli("catalog --max-order 10") == 0);
}
