#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nacent/classifier.hpp"
#include "nacent/corpus.hpp"

namespace nacent {

using ordered_json = nlohmann::ordered_json;

enum class Command { kAnalyze, kVerify, kCatalog };
enum class Format { kJson, kCsv };

struct RunConfig {
  Command command = Command::kAnalyze;
  std::vector<std::string> inputs;  // constructor specs or file paths
  std::string corpus_dir;           // verify: load every *.json file here
  std::size_t max_order = 64;
  std::size_t parallelism = 1;
  std::string output;               // empty means standard output
  Format format = Format::kJson;
};

/// One group to run: a stable id and a builder.
struct GroupInput {
  std::string id;
  std::function<FiniteGroup()> make;
};

/// A path to an existing file is loaded from disk (id = path#hash);
/// anything else is parsed as constructor notation.
GroupInput resolve_input(const std::string& spec_or_path, std::size_t max_order = default_max_order());
GroupInput catalog_input(const GroupSpec& spec, std::size_t max_order = default_max_order());

/// Runs verify_group over the inputs on `parallelism` workers. Results are
/// sorted by group id. Exceptions from building a group propagate.
std::vector<VerificationReport> run_reports(const std::vector<GroupInput>& inputs, std::size_t parallelism);

struct InputError {
  std::string id;
  std::string message;
};

/// Like run_reports, but a failing input is recorded and the rest still run.
struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<InputError> errors;  // in input order
};
RunResult run_reports_collecting(const std::vector<GroupInput>& inputs, std::size_t parallelism);

ordered_json report_to_json(const VerificationReport& r);

/// Dotted-key flattening of a report record; arrays are joined with ';'.
std::vector<std::pair<std::string, std::string>> flatten_record(const ordered_json& record);
std::string csv_header(const ordered_json& record);
std::string csv_row(const ordered_json& record);

struct RunSummary {
  std::size_t groups = 0;
  std::size_t failed_groups = 0;
  std::size_t violations = 0;
  std::size_t input_errors = 0;
  std::map<std::string, std::size_t> categories;
  std::map<std::string, std::size_t> cases;
  std::vector<std::string> failed_ids;

  ordered_json to_json() const;
};

RunSummary summarize(const std::vector<VerificationReport>& reports);

/// Subcommands. Return the process exit code: 0 all checks passed,
/// 1 mathematical violation found, 2 input or usage error.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nacent
