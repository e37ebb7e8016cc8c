#include <iostream>

#include "CLI11.hpp"
#include "ncg/app.hpp"
#include "ncg/errors.hpp"

using ncg::app::JobSpec;
using ncg::app::Mode;

namespace {

void common_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--out", job.out, "Write the report to this file instead of standard output");
  sub->add_option("--format", job.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", job.threads, "Worker threads (0: hardware concurrency)");
  sub->add_option("--time-budget", job.time_budget, "Seconds before giving up")->check(CLI::PositiveNumber);
  sub->add_option("--max-order", job.max_order, "Largest group order to tabulate");
  sub->add_option("--max-vertices", job.max_vertices, "Largest quotient vertex count");
}

void graph_options(CLI::App* sub, JobSpec& job, std::string& kind) {
  sub->add_option("--group", job.group, "Group descriptor, e.g. alt:7, psl:2:11, psu:3:3, file:gens.txt")->required();
  sub->add_option("--graph", kind, "nc, nongen or intersection")->check(CLI::IsMember({"nc", "nongen", "intersection"}));
  sub->add_flag("!--no-plan", job.use_plan, "Evaluate every vertex pair instead of class representatives");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameters of non-commuting, non-generating graphs of finite groups"};
  app.require_subcommand(1);
  JobSpec job;
  std::string kind = "nc";
  std::string q, n;

  auto* diam = app.add_subcommand("diam", "Exact diameter with a witness path");
  graph_options(diam, job, kind);
  common_options(diam, job);

  auto* dist = app.add_subcommand("dist", "Distance and shortest path between two elements");
  graph_options(dist, job, kind);
  dist->add_option("--x", job.x, "First element in cycle notation")->required();
  dist->add_option("--y", job.y, "Second element in cycle notation")->required();
  common_options(dist, job);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", job.suite, "Suite name or 'all'")->required();
  verify->add_option("--q", q, "Restrict the sweep to these field orders (comma separated)");
  verify->add_option("--n", n, "Restrict the sweep to these dimensions or degrees (comma separated)");
  verify->add_option("--group", job.group, "Restrict group-based suites to these descriptors (comma separated)");
  common_options(verify, job);

  auto* table = app.add_subcommand("table", "Reproduce the table of known diameters");
  table->add_flag("--include-long", job.include_long, "Also run long-running rows");
  table->add_option("--data-dir", job.data_dir, "Directory holding generator files for file-based rows");
  common_options(table, job);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ncg::app::kOk : ncg::app::kParseError;
  }

  if (diam->parsed()) job.mode = Mode::diameter;
  if (dist->parsed()) job.mode = Mode::distance;
  if (verify->parsed()) {
    job.mode = Mode::verify;
    if (!q.empty()) job.params["q"] = q;
    if (!n.empty()) job.params["n"] = n;
    if (!job.group.empty()) job.params["group"] = job.group;
  }
  if (table->parsed()) job.mode = Mode::table;
  try {
    job.kind = ncg::graph::parse_graph_kind(kind);
  } catch (const ncg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ncg::app::kParseError;
  }
  return ncg::app::run(job, std::cout, std::cerr);
}
