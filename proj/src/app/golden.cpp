#include <filesystem>

#include "ncg/app.hpp"
#include "ncg/errors.hpp"

namespace ncg::app {

namespace {

using graph::GraphKind;

GoldenRow row(std::string group, unsigned expected, std::string citation, Scale scale = Scale::desk, std::string note = {}) {
  GoldenRow r;
  r.group = std::move(group);
  r.name = r.group.rfind("file:", 0) == 0 ? r.group.substr(5) : perm::parse_group_spec(r.group).display_name();
  r.expected = expected;
  r.citation = std::move(citation);
  r.scale = scale;
  r.note = std::move(note);
  return r;
}

GoldenRow named_row(std::string name, GraphKind kind, unsigned expected, bool upper, std::string citation, std::string note) {
  GoldenRow r;
  r.group = name;
  r.name = std::move(name);
  r.kind = kind;
  r.expected = expected;
  r.upper_bound = upper;
  r.citation = std::move(citation);
  r.scale = Scale::excluded;
  r.note = std::move(note);
  return r;
}

std::vector<GoldenRow> build_table() {
  std::vector<GoldenRow> t;
  for (int n = 5; n <= 9; ++n) t.push_back(row("alt:" + std::to_string(n), 2, "alternating: exact value 2 for 5 <= n <= 10"));
  for (int q : {4, 5, 7, 8, 9}) t.push_back(row("psl:2:" + std::to_string(q), 2, "simple table: PSL(2,q), q even or q <= 9"));
  for (int q : {11, 13}) t.push_back(row("psl:2:" + std::to_string(q), 3, "simple table: PSL(2,q), q odd and q >= 11"));
  t.push_back(row("mathieu:11", 2, "simple table: M11, M12, M22, J2"));
  t.push_back(row("mathieu:12", 2, "simple table: M11, M12, M22, J2"));
  t.push_back(row("psu:3:3", 2, "unitary computations: PSU(3,3), PSU(3,4), PSU(4,2)"));
  t.push_back(row("psu:3:4", 2, "unitary computations: PSU(3,3), PSU(3,4), PSU(4,2)"));
  t.push_back(row("psu:4:2", 3, "unitary computations: PSU(3,3), PSU(3,4), PSU(4,2)"));
  t.push_back(row("sym:5", 3, "symmetric groups: bound 3 attained by S5, S7, S9"));
  t.push_back(row("sym:7", 3, "symmetric groups: bound 3 attained by S5, S7, S9"));
  t.push_back(row("pgl:2:7", 3, "projective general linear: bound 3 attained by PGL(2,7), PGL(3,4)"));
  t.push_back(row("pgl:3:4", 3, "projective general linear: bound 3 attained by PGL(2,7), PGL(3,4)"));
  t.push_back(row("psl:3:4", 2, "linear computations: PSL(3,4), PSL(4,2) have diameter 2",
                  Scale::desk, "corrected value; an earlier report gave 3"));
  t.push_back(row("psl:4:2", 2, "linear computations: PSL(3,4), PSL(4,2) have diameter 2"));
  t.push_back(row("psl:3:3", 3, "linear computations: PSL(3,3), PSL(3,5), PSL(3,7), PSL(4,3) have diameter 3"));

  t.push_back(row("mathieu:22", 2, "simple table: M11, M12, M22, J2", Scale::long_running));
  t.push_back(row("mathieu:23", 3, "simple table: M23, J1", Scale::long_running,
                  "order 10200960 exceeds the desk order cap; one to two days in a computer algebra system"));
  for (const char* g : {"psl:3:5", "psl:3:7", "psl:4:3"})
    t.push_back(row(g, 3, "linear computations: PSL(3,3), PSL(3,5), PSL(3,7), PSL(4,3) have diameter 3", Scale::long_running));
  t.push_back(row("sym:9", 3, "symmetric groups: bound 3 attained by S5, S7, S9", Scale::long_running));
  t.push_back(row("alt:10", 2, "alternating: exact value 2 for 5 <= n <= 10", Scale::long_running));
  t.push_back(row("file:sz8.txt", 3, "exceptional computations: Sz(8) has diameter 3", Scale::long_running,
                  "user-supplied generators"));
  t.push_back(row("file:g2_3.txt", 2, "exceptional computations: G2(3) has diameter 2", Scale::long_running,
                  "user-supplied generators"));

  t.push_back(named_row("B", GraphKind::nc, 4, false, "simple table: B, PSU(7,2)", "beyond desk scale"));
  t.push_back(named_row("PSU(7,2)", GraphKind::nc, 4, false, "simple table: B, PSU(7,2)", "beyond desk scale"));
  t.push_back(named_row("B", GraphKind::nongen, 4, false, "non-generating graph: diameter 4 for B, PSU(7,2)", "beyond desk scale"));
  t.push_back(named_row("PSU(7,2)", GraphKind::nongen, 4, false, "non-generating graph: diameter 4 for B, PSU(7,2)",
                        "beyond desk scale"));
  t.push_back(named_row("Th", GraphKind::nc, 4, true, "sporadic groups: diameter at most 4", "beyond desk scale"));
  t.push_back(named_row("M", GraphKind::nc, 4, true, "sporadic groups: diameter at most 4", "beyond desk scale"));
  t.push_back(named_row("J1", GraphKind::nc, 3, false, "simple table: M23, J1", "beyond desk scale"));
  t.push_back(named_row("J2", GraphKind::nc, 2, false, "simple table: M11, M12, M22, J2", "beyond desk scale"));
  return t;
}

}  // namespace

std::string to_string(Scale s) {
  switch (s) {
    case Scale::desk: return "desk";
    case Scale::long_running: return "long";
    case Scale::excluded: return "excluded";
  }
  return "?";
}

const std::vector<GoldenRow>& golden_table() {
  static const std::vector<GoldenRow> table = build_table();
  return table;
}

RowOutcome evaluate_row(const GoldenRow& row, const TableOptions& opt) {
  RowOutcome out;
  out.row = row;
  if (row.scale == Scale::excluded) {
    out.status = "EXCLUDED";
    out.detail = "excluded: beyond desk scale";
    return out;
  }
  if (row.scale == Scale::long_running && !opt.include_long) {
    out.status = "SKIPPED";
    out.detail = "long-running row; enable with --include-long";
    return out;
  }
  std::string descriptor = row.group;
  if (descriptor.rfind("file:", 0) == 0) {
    const auto path = std::filesystem::path(opt.data_dir) / descriptor.substr(5);
    if (!std::filesystem::exists(path)) {
      out.status = "SKIPPED";
      out.detail = "generator file " + path.string() + " not supplied";
      return out;
    }
    descriptor = "file:" + path.string();
  }
  const auto start = Deadline::Clock::now();
  try {
    const auto g = load_group(descriptor);
    graph::BuildOptions bo;
    bo.max_order = opt.max_order;
    bo.max_vertices = opt.max_vertices;
    bo.deadline = Deadline::after(opt.time_budget);
    const graph::QuotientGraph q(g, row.kind, bo);
    const auto r = graph::graph_diameter(q, true, bo.deadline);
    out.connected = r.connected;
    out.computed = r.diameter;
    const bool ok = r.diameter && (row.upper_bound ? *r.diameter <= row.expected : *r.diameter == row.expected);
    out.status = ok ? "PASS" : "FAIL";
    out.detail = "computed " + (r.diameter ? std::to_string(*r.diameter) : std::string("infinite")) + ", expected " +
                 (row.upper_bound ? "<= " : "") + std::to_string(row.expected);
  } catch (const CapExceeded& e) {
    out.status = "ERROR";
    out.detail = std::string("cap exceeded: ") + e.what();
  } catch (const TimeBudgetExceeded& e) {
    out.status = "ERROR";
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.status = "ERROR";
    out.detail = e.what();
  }
  out.seconds = seconds_since(start);
  return out;
}

std::vector<RowOutcome> reproduce_table(const TableOptions& opt) {
  std::vector<RowOutcome> out;
  for (const auto& r : golden_table()) out.push_back(evaluate_row(r, opt));
  return out;
}

Json table_json(const std::vector<RowOutcome>& rows) {
  Json j;
  j["schema"] = graph::kReportSchema;
  Json list = Json::array();
  std::map<std::string, int> counts;
  bool desk_ok = true;
  for (const auto& o : rows) {
    Json r;
    r["group"] = o.row.group;
    r["name"] = o.row.name;
    r["graph"] = std::string(graph::to_string(o.row.kind));
    r["expected"] = o.row.expected;
    r["comparison"] = o.row.upper_bound ? "<=" : "==";
    r["citation"] = o.row.citation;
    r["scale"] = to_string(o.row.scale);
    if (!o.row.note.empty()) r["note"] = o.row.note;
    r["status"] = o.status;
    r["computed"] = o.computed ? Json(*o.computed) : Json(nullptr);
    r["detail"] = o.detail;
    r["timings"] = Json{{"seconds", o.seconds}};
    list.push_back(std::move(r));
    ++counts[o.status];
    if (o.row.scale == Scale::desk && o.status != "PASS") desk_ok = false;
  }
  j["rows"] = std::move(list);
  j["summary"] = counts;
  j["desk_pass"] = desk_ok;
  return j;
}

}  // namespace ncg::app
