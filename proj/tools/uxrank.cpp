// Copyright 2026 The uxrank Authors
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

// uxrank command-line interface.
//
// Exit codes: 0 success, 1 fatal error, 2 completed with warnings.

#include <algorithm>
#include <atomic>
#include <csignal>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "uxrank/core/criteria.hpp"
#include "uxrank/io/bench.hpp"
#include "uxrank/io/http_server.hpp"
#include "uxrank/io/markdown.hpp"
#include "uxrank/io/pipeline.hpp"
#include "uxrank/io/project_loader.hpp"
#include "uxrank/io/serialize.hpp"
#include "uxrank/util/strings.hpp"

namespace {

using namespace uxrank;

constexpr int kOk = 0;
constexpr int kFatal = 1;
constexpr int kWarnings = 2;

std::atomic<bool> g_stop{false};

EvalMethod parse_method(const std::string& token) {
  auto method = method_from_token(token);
  if (!method) throw std::invalid_argument("unknown method '" + token + "' (nielsen|walkthrough)");
  return *method;
}

std::vector<int> parse_ks(const std::string& text) {
  std::vector<int> ks;
  for (const auto& part : util::split(text, ',')) {
    const auto t = std::string(util::trim(part));
    std::size_t used = 0;
    const int k = std::stoi(t, &used);
    if (used != t.size() || k < 1) throw std::invalid_argument("bad k value '" + t + "'");
    ks.push_back(k);
  }
  if (ks.empty()) throw std::invalid_argument("no k values");
  return ks;
}

struct EvaluateArgs {
  std::string project;
  std::string method;
  std::vector<std::string> models;
  bool replay = false;
  std::string out;
  std::string markdown;
  std::string audit_dir;
  int parallelism = 4;
};

int evaluate(const EvaluateArgs& args, bool record) {
  const auto project = io::load_project(args.project);
  io::EvaluationOptions options;
  options.method = parse_method(args.method);
  options.models = args.models;
  options.parallelism = args.parallelism;
  if (!args.audit_dir.empty()) options.audit_dir = args.audit_dir;
  options.mode = args.replay ? io::ProviderMode::Replay : io::ProviderMode::Live;
  if (record) {
    options.mode = io::ProviderMode::Live;
    options.record_into = std::make_shared<gateway::FixtureStore>(project.root / "fixtures");
  }
  const auto report = io::run_evaluation(project, options);
  if (!args.out.empty()) io::write_text_file(args.out, io::dump(io::to_json(report)));
  if (!args.markdown.empty()) io::write_text_file(args.markdown, io::render_markdown(report));

  std::size_t tasks = 0;
  for (const auto& r : report.results) tasks = std::max(tasks, r.ranking.entries.size());
  std::cout << report.raw_assessments.size() << " assessments, " << tasks << " ranked tasks, "
            << report.warnings.size() << " warnings\n";
  return report.warnings.empty() ? kOk : kWarnings;
}

int bench(const std::vector<std::string>& reports, const std::string& truth,
          const std::string& ks_text, const std::string& out) {
  const auto ks = parse_ks(ks_text);
  std::vector<std::filesystem::path> paths(reports.begin(), reports.end());
  const auto result = io::run_bench(paths, truth, ks);
  if (!out.empty()) io::write_text_file(out, io::dump(io::to_json(result)));
  std::cout << io::render_tables(result);
  const bool missing = std::any_of(result.kappa.begin(), result.kappa.end(),
                                   [](const auto& cell) { return !cell.kappa.has_value(); });
  return missing ? kWarnings : kOk;
}

int report(const std::string& in, const std::string& format, const std::string& out) {
  const auto doc = io::load_report(in);
  std::string text;
  if (format == "md") {
    text = io::render_markdown(doc);
  } else if (format == "json") {
    text = io::dump(io::to_json(doc));
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (md|json)");
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out, text);
  }
  return kOk;
}

int serve(const std::string& project_dir, const std::string& report_path, const std::string& addr,
          const std::string& ui) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("--addr must be host:port");
  const auto host = addr.substr(0, colon);
  const int port = std::stoi(addr.substr(colon + 1));

  auto service = std::make_shared<io::ReviewService>(io::load_project(project_dir), report_path);
  std::optional<std::filesystem::path> ui_dir;
  if (!ui.empty()) ui_dir = ui;
  io::ReviewServer server(service, ui_dir);
  const int bound = server.bind(host, port);
  std::cout << "serving " << report_path << " on http://" << host << ":" << bound << "\n"
            << "triage journal: " << service->journal().path().string() << std::endl;

  std::signal(SIGINT, [](int) { g_stop = true; });
  std::signal(SIGTERM, [](int) { g_stop = true; });
  std::jthread watcher([&server](std::stop_token token) {
    while (!g_stop && !token.stop_requested()) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });
  server.run();
  return kOk;
}

int list_criteria(const std::string& method_token, const std::string& project_dir) {
  const auto method = parse_method(method_token);
  std::vector<Criterion> criteria;
  if (project_dir.empty()) {
    criteria = builtin_criteria(method);
  } else {
    criteria = io::load_project(project_dir).project.criteria_for(method);
  }
  for (const auto& c : criteria) std::cout << c.id << "\t" << c.title << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multimodal LLM usability evaluation and expert agreement benchmarking"};
  app.require_subcommand(1);

  EvaluateArgs eval;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate task screenshots with LLMs");
  evaluate_cmd->add_option("--project", eval.project, "Project directory")->required();
  evaluate_cmd->add_option("--method", eval.method, "nielsen | walkthrough")->required();
  evaluate_cmd->add_option("--model", eval.models, "Model id (repeatable; default: all)");
  evaluate_cmd->add_flag("--replay", eval.replay, "Serve responses from recorded fixtures");
  evaluate_cmd->add_option("--out", eval.out, "Report JSON output file")->required();
  evaluate_cmd->add_option("--markdown", eval.markdown, "Also write a Markdown report");
  evaluate_cmd->add_option("--audit-dir", eval.audit_dir, "Write one audit record per request");
  evaluate_cmd->add_option("--parallel", eval.parallelism, "Concurrent requests")->check(CLI::PositiveNumber);

  std::vector<std::string> bench_reports;
  std::string bench_truth, bench_ks = "3,5,10", bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Compare reports with expert ground truth");
  bench_cmd->add_option("--report", bench_reports, "Evaluation report (repeatable)")->required();
  bench_cmd->add_option("--ground-truth", bench_truth, "Ground truth file")->required();
  bench_cmd->add_option("--k", bench_ks, "Comma-separated k values");
  bench_cmd->add_option("--out", bench_out, "Agreement report JSON output file")->required();

  std::string report_in, report_format = "md", report_out;
  auto* report_cmd = app.add_subcommand("report", "Render a stored evaluation report");
  report_cmd->add_option("--in", report_in, "Report JSON")->required();
  report_cmd->add_option("--format", report_format, "md | json");
  report_cmd->add_option("--out", report_out, "Output file (default: stdout)");

  std::string serve_project, serve_report, serve_addr = "127.0.0.1:8080", serve_ui;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the review API for a report");
  serve_cmd->add_option("--project", serve_project, "Project directory")->required();
  serve_cmd->add_option("--report", serve_report, "Report JSON")->required();
  serve_cmd->add_option("--addr", serve_addr, "host:port");
  serve_cmd->add_option("--ui", serve_ui, "Directory with the built review UI");

  EvaluateArgs record;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Manage replay fixtures");
  fixtures_cmd->require_subcommand(1);
  auto* record_cmd = fixtures_cmd->add_subcommand("record", "Capture live responses into <project>/fixtures");
  record_cmd->add_option("--project", record.project, "Project directory")->required();
  record_cmd->add_option("--method", record.method, "nielsen | walkthrough")->required();
  record_cmd->add_option("--model", record.models, "Model id (repeatable; default: all)");
  record_cmd->add_option("--out", record.out, "Also write the report");
  record_cmd->add_option("--parallel", record.parallelism, "Concurrent requests")->check(CLI::PositiveNumber);

  std::string criteria_method, criteria_project;
  auto* criteria_cmd = app.add_subcommand("criteria", "Inspect evaluation criteria");
  criteria_cmd->require_subcommand(1);
  auto* list_cmd = criteria_cmd->add_subcommand("list", "List criteria of a method");
  list_cmd->add_option("--method", criteria_method, "nielsen | walkthrough")->required();
  list_cmd->add_option("--project", criteria_project, "Show the project's selection instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFatal;
  }

  try {
    if (*evaluate_cmd) return evaluate(eval, false);
    if (*bench_cmd) return bench(bench_reports, bench_truth, bench_ks, bench_out);
    if (*report_cmd) return report(report_in, report_format, report_out);
    if (*serve_cmd) return serve(serve_project, serve_report, serve_addr, serve_ui);
    if (*record_cmd) return evaluate(record, true);
    if (*list_cmd) return list_criteria(criteria_method, criteria_project);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  }
  return kFatal;
}
