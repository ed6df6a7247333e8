#include "nacent/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "nacent/errors.hpp"

namespace nacent {

namespace {

namespace fs = std::filesystem;

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string cases_string(const std::vector<Case>& cases) {
  std::string s;
  for (Case c : cases) s += to_string(c);
  return s;
}

std::string scalar_text(const ordered_json& v) {
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

void flatten_into(const std::string& prefix, const ordered_json& v, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten_into(prefix.empty() ? k : prefix + "." + k, child, out);
  } else if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + scalar_text(v[i]);
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

// Either stdout or a file named in the config.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// Resolution errors are deferred to the run so one bad input does not stop
// the others.
GroupInput resolve_or_defer(const std::string& spec_or_path) {
  try {
    return resolve_input(spec_or_path);
  } catch (...) {
    return {spec_or_path, [e = std::current_exception()]() -> FiniteGroup { std::rethrow_exception(e); }};
  }
}

std::vector<GroupInput> verify_inputs(const RunConfig& config) {
  std::vector<GroupInput> inputs;
  if (!config.corpus_dir.empty()) {
    if (!fs::is_directory(config.corpus_dir)) throw ParseError("corpus directory " + config.corpus_dir + " not found");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config.corpus_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) inputs.push_back(resolve_or_defer(f.string()));
  } else {
    for (const auto& spec : builtin_catalog(config.max_order)) inputs.push_back(catalog_input(spec));
  }
  for (const auto& extra : config.inputs) inputs.push_back(resolve_or_defer(extra));
  return inputs;
}

void check_limits(const RunConfig& config) {
  if (config.parallelism < 1) throw InvalidParams("parallelism must be at least 1");
  if (config.max_order < 1) throw InvalidParams("max order must be at least 1");
  if (config.max_order > default_max_order())
    throw InvalidParams("max order " + std::to_string(config.max_order) + " exceeds the global guard " +
                        std::to_string(default_max_order()) + " (set NACENT_MAX_ORDER to raise it)");
}

}  // namespace

GroupInput resolve_input(const std::string& spec_or_path, std::size_t max_order) {
  std::error_code ec;
  if (fs::is_regular_file(spec_or_path, ec)) {
    // Read once up front so the id carries the content hash.
    auto loaded = std::make_shared<LoadedGroup>(read_group_file(spec_or_path, max_order));
    return GroupInput{spec_or_path + "#" + loaded->content_hash, [loaded] { return loaded->group; }};
  }
  GroupSpec spec = parse_spec(spec_or_path);
  return catalog_input(spec, max_order);
}

GroupInput catalog_input(const GroupSpec& spec, std::size_t max_order) {
  return GroupInput{spec.to_string(), [spec, max_order] { return build(spec, max_order); }};
}

namespace {

std::vector<std::exception_ptr> run_into(const std::vector<GroupInput>& inputs, std::size_t parallelism,
                                         std::vector<VerificationReport>& reports) {
  reports.assign(inputs.size(), {});
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        const FiniteGroup g = inputs[i].make();
        reports[i] = verify_group(g, inputs[i].id);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, inputs.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  return errors;
}

void sort_by_id(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.group_id < b.group_id; });
}

}  // namespace

std::vector<VerificationReport> run_reports(const std::vector<GroupInput>& inputs, std::size_t parallelism) {
  std::vector<VerificationReport> reports;
  for (const auto& e : run_into(inputs, parallelism, reports))
    if (e) std::rethrow_exception(e);
  sort_by_id(reports);
  return reports;
}

RunResult run_reports_collecting(const std::vector<GroupInput>& inputs, std::size_t parallelism) {
  std::vector<VerificationReport> all;
  const auto errors = run_into(inputs, parallelism, all);
  RunResult out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!errors[i]) {
      out.reports.push_back(std::move(all[i]));
      continue;
    }
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      out.errors.push_back({inputs[i].id, e.what()});
    } catch (...) {
      out.errors.push_back({inputs[i].id, "unknown error"});
    }
  }
  sort_by_id(out.reports);
  return out;
}

ordered_json report_to_json(const VerificationReport& r) {
  const Classification& cls = r.classification;
  ordered_json j;
  j["group_id"] = r.group_id;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["cent_count"] = r.cent_count;
  j["nacent_count"] = r.nacent_count;
  j["category"] = to_string(cls.category);
  j["case"] = cls.which ? ordered_json(to_string(*cls.which)) : ordered_json(nullptr);
  j["case_data"] = {{"witness_a", opt(cls.witness_a)},
                    {"prime", opt(cls.data.prime)},
                    {"hughes_order", opt(cls.data.hughes_order)},
                    {"kernel_order", opt(cls.data.kernel_order)},
                    {"complement_order", opt(cls.data.complement_order)},
                    {"complement_witness", opt(cls.data.complement_witness)},
                    {"matched_cases", cases_string(cls.matched)}};
  const ConsequenceChecks& c = r.consequences;
  j["consequences"] = {{"a", opt(c.a)}, {"b", opt(c.b)}, {"c", opt(c.c)},         {"d", opt(c.d)},
                       {"e", opt(c.e)}, {"f", opt(c.f)}, {"normal_ca", opt(c.normal_ca)}, {"ca_group", opt(c.ca_group)}};
  j["counting"] = {{"cent_ca", opt(c.cent_ca)},
                   {"ca_mod_center", opt(c.ca_mod_center)},
                   {"formula_prime", opt(c.formula_prime)},
                   {"frobenius_count", opt(c.frobenius_count)},
                   {"partition_count", opt(c.partition_count)},
                   {"literal_count", opt(c.literal_count)},
                   {"formulas_matched", c.formulas_matched},
                   {"g_mod_ca", opt(c.g_mod_ca)},
                   {"p_part_order", opt(c.p_part_order)},
                   {"abelian_part_order", opt(c.abelian_part_order)},
                   {"p_part_prime", opt(c.p_part_prime)}};
  j["iff"] = {{"forward", r.iff ? ordered_json(r.iff->forward) : ordered_json(nullptr)},
              {"converse", r.iff ? ordered_json(r.iff->converse) : ordered_json(nullptr)}};
  const PartitionDiagnostics& d = r.partition;
  j["partition"] = {{"exists", opt(d.exists)},
                    {"components", d.components},
                    {"normal", opt(d.normal)},
                    {"nonsimple", opt(d.nonsimple)},
                    {"nonsimple_witness_order", opt(d.nonsimple_witness_order)},
                    {"elementary", opt(d.elementary)},
                    {"elementary_prime", opt(d.elementary_prime)},
                    {"frobenius", opt(d.frobenius)},
                    {"inner_centralizers_contained", opt(d.inner_centralizers_contained)},
                    {"outside_meet_center", opt(d.outside_meet_center)}};
  j["violations"] = r.violations;
  return j;
}

std::vector<std::pair<std::string, std::string>> flatten_record(const ordered_json& record) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into("", record, out);
  return out;
}

std::string csv_header(const ordered_json& record) {
  std::string line;
  for (const auto& [k, v] : flatten_record(record)) line += (line.empty() ? "" : ",") + csv_escape(k);
  return line;
}

std::string csv_row(const ordered_json& record) {
  std::string line;
  bool first = true;
  for (const auto& [k, v] : flatten_record(record)) {
    line += (first ? "" : ",") + csv_escape(v);
    first = false;
  }
  return line;
}

ordered_json RunSummary::to_json() const {
  ordered_json j;
  j["summary"] = true;
  j["groups"] = groups;
  j["failed_groups"] = failed_groups;
  j["violations"] = violations;
  j["input_errors"] = input_errors;
  j["categories"] = categories;
  j["cases"] = cases;
  j["failed_ids"] = failed_ids;
  return j;
}

RunSummary summarize(const std::vector<VerificationReport>& reports) {
  RunSummary s;
  for (const char* c : {"Abelian", "CA", "TwoNacent", "ManyNacent"}) s.categories[c] = 0;
  for (const char* c : {"A", "B", "C"}) s.cases[c] = 0;
  for (const auto& r : reports) {
    ++s.groups;
    ++s.categories[to_string(r.classification.category)];
    if (r.classification.which) ++s.cases[to_string(*r.classification.which)];
    if (r.failed()) {
      ++s.failed_groups;
      s.violations += r.violations.size();
      s.failed_ids.push_back(r.group_id);
    }
  }
  return s;
}

namespace {

void report_errors(const RunResult& run, std::ostream& err) {
  for (const auto& e : run.errors) err << "error: " << e.id << ": " << e.message << "\n";
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult run;
  try {
    check_limits(config);
    if (config.inputs.empty()) throw ParseError("analyze needs at least one SPEC_OR_FILE");
    std::vector<GroupInput> inputs;
    for (const auto& in : config.inputs) inputs.push_back(resolve_or_defer(in));
    run = run_reports_collecting(inputs, config.parallelism);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report_errors(run, err);
  try {
    Sink sink(config.output, out);
    bool header = false;
    for (const auto& r : run.reports) {
      const ordered_json j = report_to_json(r);
      if (config.format == Format::kJson) {
        sink.stream() << j.dump() << "\n";
      } else {
        if (!header) sink.stream() << csv_header(j) << "\n";
        header = true;
        sink.stream() << csv_row(j) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run.errors.empty() ? 0 : 2;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult run;
  try {
    check_limits(config);
    run = run_reports_collecting(verify_inputs(config), config.parallelism);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report_errors(run, err);
  RunSummary summary = summarize(run.reports);
  summary.input_errors = run.errors.size();
  try {
    Sink sink(config.output, out);
    for (const auto& r : run.reports) sink.stream() << report_to_json(r).dump() << "\n";
    sink.stream() << summary.to_json().dump() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& r : run.reports)
    for (const auto& v : r.violations) err << "violation: " << r.group_id << ": " << v << "\n";
  if (!run.errors.empty()) return 2;
  return summary.failed_groups ? 1 : 0;
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_limits(config);
    for (const auto& spec : builtin_catalog(config.max_order)) out << spec.to_string() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace nacent
