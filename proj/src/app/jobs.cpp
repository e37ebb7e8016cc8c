#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ncg/app.hpp"
#include "ncg/errors.hpp"
#include "ncg/parallel.hpp"
#include "ncg/subgroups.hpp"

namespace ncg::app {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

graph::BuildOptions build_options(const JobSpec& job) {
  graph::BuildOptions bo;
  bo.max_order = job.max_order;
  bo.max_vertices = job.max_vertices;
  bo.use_plan = job.use_plan;
  bo.deadline = Deadline::after(job.time_budget);
  return bo;
}

struct Output {
  Json json;
  std::string csv;
  int code = kOk;
};

Output diameter_job(const JobSpec& job) {
  const auto g = load_group(job.group);
  graph::DiameterReport r;
  if (job.kind == graph::GraphKind::intersection) {
    r = graph::intersection_graph_diameter(g, std::min<std::uint64_t>(job.max_order, 100'000));
  } else {
    const auto bo = build_options(job);
    const graph::QuotientGraph q(g, job.kind, bo);
    r = graph::graph_diameter(q, job.use_plan, bo.deadline);
  }
  Output o;
  o.json = Json{{"schema", graph::kReportSchema}, {"job", job.to_json()}};
  o.json.update(graph::report_json(r));
  o.csv = graph::csv_header() + "\n" + graph::csv_row(r) + "\n";
  return o;
}

Output distance_job(const JobSpec& job) {
  if (job.kind == graph::GraphKind::intersection) throw Unsupported("distance queries need the nc or nongen graph");
  const auto g = load_group(job.group);
  const auto x = Permutation::parse(g.degree(), job.x);
  const auto y = Permutation::parse(g.degree(), job.y);
  for (const auto* p : {&x, &y})
    if (!g.contains(*p)) throw ParseError(p->to_string() + " is not an element of " + g.name());
  const graph::QuotientGraph q(g, job.kind, build_options(job));
  const auto r = graph::distance_and_path(q, x, y);
  Output o;
  o.json = Json{{"schema", graph::kReportSchema}, {"job", job.to_json()}};
  o.json.update(graph::path_json(r, x, y));
  std::string path;
  for (const auto& p : r.path) path += (path.empty() ? "" : " ") + p.to_string();
  o.csv = "group,graph,x,y,distance,path\n" + csv_field(g.name()) + "," + std::string(graph::to_string(job.kind)) + "," +
          csv_field(x.to_string()) + "," + csv_field(y.to_string()) + "," +
          (r.distance ? std::to_string(*r.distance) : std::string("inf")) + "," + csv_field(path) + "\n";
  return o;
}

Output verify_job(const JobSpec& job) {
  std::vector<std::string> names;
  if (job.suite == "all")
    names = suite_names();
  else
    names.push_back(job.suite);
  Output o;
  Json suites = Json::array();
  o.csv = "suite,params,status,detail\n";
  bool all = true;
  for (const auto& n : names) {
    const auto r = run_suite(n, job.params);
    all = all && r.pass();
    suites.push_back(suite_json(r));
    for (const auto& c : r.cases)
      o.csv += n + "," + csv_field(c.params) + "," + (c.pass ? "PASS" : "FAIL") + "," + csv_field(c.detail) + "\n";
  }
  o.json = Json{{"schema", graph::kReportSchema}, {"job", job.to_json()}, {"status", all ? "PASS" : "FAIL"}, {"suites", suites}};
  o.code = all ? kOk : kVerificationFailed;
  return o;
}

Output table_job(const JobSpec& job) {
  TableOptions opt;
  opt.include_long = job.include_long;
  opt.time_budget = job.time_budget;
  opt.max_order = job.max_order;
  opt.max_vertices = job.max_vertices;
  opt.data_dir = job.data_dir;
  const auto rows = reproduce_table(opt);
  Output o;
  o.json = Json{{"schema", graph::kReportSchema}, {"job", job.to_json()}};
  o.json.update(table_json(rows));
  o.csv = "group,graph,expected,computed,status,scale,seconds\n";
  bool ok = true;
  for (const auto& r : rows) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    o.csv += csv_field(r.row.name) + "," + std::string(graph::to_string(r.row.kind)) + "," +
             (r.row.upper_bound ? "<=" : "") + std::to_string(r.row.expected) + "," +
             (r.computed ? std::to_string(*r.computed) : std::string()) + "," + r.status + "," + to_string(r.row.scale) +
             "," + secs.str() + "\n";
    if (r.status == "FAIL" || (r.row.scale == Scale::desk && r.status != "PASS")) ok = false;
  }
  o.code = ok ? kOk : kVerificationFailed;
  return o;
}

void emit(const JobSpec& job, const Output& o, std::ostream& out) {
  const std::string text = job.format == "csv" ? o.csv : o.json.dump(2) + "\n";
  if (job.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + job.out + " for writing");
  f << text;
  if (!f.flush()) throw IoError("cannot write " + job.out);
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.format != "json" && job.format != "csv") throw ParseError("unknown format '" + job.format + "'");
    set_thread_count(job.threads);
    Output o;
    switch (job.mode) {
      case Mode::diameter: o = diameter_job(job); break;
      case Mode::distance: o = distance_job(job); break;
      case Mode::verify: o = verify_job(job); break;
      case Mode::table: o = table_job(job); break;
    }
    emit(job, o, out);
    return o.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const TimeBudgetExceeded& e) {
    err << "time budget exceeded: " << e.what() << "\n";
    return kTimeBudget;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace ncg::app
