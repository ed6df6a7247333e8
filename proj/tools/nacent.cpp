#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nacent/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Centralizer structure analysis for finite groups"};
  app.require_subcommand(1);

  nacent::RunConfig config;
  std::string format = "json";

  auto* analyze = app.add_subcommand("analyze", "Report centralizer structure and classification per group");
  analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", config.output, "Output path (default: stdout)");
  analyze->add_option("--parallelism", config.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  analyze->add_option("inputs", config.inputs, "Constructor specs or group files")->required();

  auto* verify = app.add_subcommand("verify", "Check the two-nacent characterization over a corpus");
  verify->add_option("--max-order", config.max_order, "Largest catalog group order");
  verify->add_option("--parallelism", config.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--corpus", config.corpus_dir, "Directory of group files (replaces the catalog)");
  verify->add_option("--out", config.output, "Output path (default: stdout)");
  verify->add_option("inputs", config.inputs, "Additional constructor specs or group files");

  auto* catalog = app.add_subcommand("catalog", "List the built-in catalog");
  catalog->add_option("--max-order", config.max_order, "Largest group order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.format = format == "csv" ? nacent::Format::kCsv : nacent::Format::kJson;
  if (*analyze) {
    config.command = nacent::Command::kAnalyze;
    return nacent::cmd_analyze(config, std::cout, std::cerr);
  }
  if (*verify) {
    config.command = nacent::Command::kVerify;
    return nacent::cmd_verify(config, std::cout, std::cerr);
  }
  config.command = nacent::Command::kCatalog;
  return nacent::cmd_catalog(config, std::cout, std::cerr);
}
