//
// Copyright 2026 The tclose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "tclose/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tclose/bench.hpp"
#include "tclose/error.hpp"
#include "tclose/report.hpp"
#include "tclose/table.hpp"

namespace tclose {
namespace {

struct AuditConfig {
  std::string input_path;
  std::string schema_path;
  std::string metric = "all";
  std::string attribute;
  std::string method = "auto";
  std::string order;
  std::string format = "text";
  std::string missing = "error";
  int precision = 4;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  int repetitions = 5;
  bool efficient_only = false;
};

std::string ReadFile(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, std::string("cannot read ") + what + " file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int RunAudit(const AuditConfig& config, std::ostream& out) {
  const Schema schema = Schema::FromJson(ReadFile(config.schema_path, "schema"));
  const std::string csv = ReadFile(config.input_path, "input");
  const Table table =
      ParseCsv(csv, schema,
               config.missing == "drop" ? MissingValuePolicy::kDropRow
                                        : MissingValuePolicy::kError);

  AuditOptions options;
  options.want_k = config.metric == "k" || config.metric == "all";
  options.want_l = config.metric == "l" || config.metric == "all";
  options.want_t = config.metric == "t" || config.metric == "all";
  if (!config.attribute.empty()) options.attribute = config.attribute;
  options.method = *ParseMethod(config.method);
  if (!config.order.empty()) options.ordering = ParsePolicy(config.order);

  PrivacyReport report = Audit(table, options);
  report.input = config.input_path;
  report.schema = config.schema_path;
  report.precision = config.precision;
  out << (config.format == "json" ? RenderJson(report) : RenderText(report));
  return kExitOk;
}

int RunBench(const BenchConfig& config, std::ostream& out) {
  BenchOptions options;
  options.sizes = config.sizes;
  options.repetitions = config.repetitions;
  options.include_naive = !config.efficient_only;
  out << RenderBenchTable(RunBenchmark(options));
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Privacy metrics (k-anonymity, l-diversity, t-closeness) for "
               "anonymized tables"};
  app.require_subcommand(1);

  AuditConfig audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Compute privacy metrics of a CSV table");
  audit_cmd->add_option("--input", audit.input_path, "CSV file with header")
      ->required();
  audit_cmd->add_option("--schema", audit.schema_path, "Schema JSON file")
      ->required();
  audit_cmd->add_option("--metric", audit.metric, "k, l, t or all")
      ->check(CLI::IsMember({"k", "l", "t", "all"}));
  audit_cmd->add_option("--attribute", audit.attribute,
                        "Restrict l and t to one sensitive attribute");
  audit_cmd
      ->add_option("--method", audit.method,
                   "definition, efficient, transport, variational or auto")
      ->check(CLI::IsMember(
          {"definition", "efficient", "transport", "variational", "auto"}));
  audit_cmd
      ->add_option("--order", audit.order,
                   "Domain ordering: value, freq-desc or appearance")
      ->check(CLI::IsMember({"value", "freq-desc", "appearance"}));
  audit_cmd->add_option("--format", audit.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  audit_cmd->add_option("--precision", audit.precision, "Decimal places")
      ->check(CLI::Range(1, 100));
  audit_cmd->add_option("--missing", audit.missing,
                        "Empty required cell: error or drop")
      ->check(CLI::IsMember({"error", "drop"}));

  BenchConfig bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time the quadratic and single-pass EMD on random data");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated domain sizes")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per size")
      ->check(CLI::Range(1, 1000000));
  bench_cmd->add_flag("--efficient-only", bench.efficient_only,
                      "Skip the quadratic method");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*audit_cmd) return RunAudit(audit, out);
    return RunBench(bench, out);
  } catch (const Error& e) {
    err << "tclose: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kInternal ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "tclose: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace tclose
