#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/report.hpp"

namespace ncg::app {

using graph::Json;
using perm::PermGroup;
using perm::Permutation;

// Process exit codes; each failure class has its own value.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kUnsupported = 3,
  kCapExceeded = 4,
  kTimeBudget = 5,
  kIoError = 6,
  kInternalError = 7,
};

enum class Mode { diameter, distance, verify, table };

struct JobSpec {
  Mode mode = Mode::diameter;
  std::string group;  // descriptor, e.g. "psl:2:11" or "file:gens.txt"
  graph::GraphKind kind = graph::GraphKind::nc;
  std::string x, y;   // distance endpoints in cycle notation
  std::string suite;  // verify: suite name or "all"
  std::map<std::string, std::string> params;  // verify: e.g. {"q", "7"}
  std::string out;    // empty: standard output
  std::string format = "json";
  std::uint64_t max_order = 10'000'000;
  std::size_t max_vertices = 100'000;
  double time_budget = 3600;
  unsigned threads = 0;
  bool include_long = false;
  bool use_plan = true;
  std::string data_dir = "data";  // generator files named by long table rows

  // Everything except the output location, so reports are self-describing.
  Json to_json() const;
};

// Runs one job and writes its report; returns an ExitCode.  Errors are
// reported on err with the matching exit code.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Group from a descriptor "family:params" or "file:path".
PermGroup load_group(const std::string& descriptor);

// Whether a desk-scale simple group has a maximal subgroup of odd order, by
// the classification list: A_p with p prime, p = 3 mod 4, p not in {7, 11,
// 23}; PSL(n, q) with n prime, (n, q) != (3, 4), q = 3 mod 4 when n = 2;
// PSU(n, q) with n an odd prime, (n, q) not in {(3,3), (3,5), (5,2)}; M23.
// None for groups outside these families.
std::optional<bool> has_odd_order_maximal(const perm::GroupSpec& spec);

// ---- golden diameters ----

enum class Scale { desk, long_running, excluded };
std::string to_string(Scale s);

struct GoldenRow {
  std::string group;  // descriptor
  std::string name;   // display name
  graph::GraphKind kind = graph::GraphKind::nc;
  unsigned expected = 0;
  bool upper_bound = false;  // checked as computed <= expected
  std::string citation;
  Scale scale = Scale::desk;
  std::string note;
};

const std::vector<GoldenRow>& golden_table();

struct RowOutcome {
  GoldenRow row;
  std::string status;  // PASS, FAIL, ERROR, SKIPPED, EXCLUDED
  std::optional<unsigned> computed;
  bool connected = false;
  std::string detail;
  double seconds = 0;
};

struct TableOptions {
  bool include_long = false;
  double time_budget = 3600;  // per row
  std::uint64_t max_order = 10'000'000;
  std::size_t max_vertices = 100'000;
  std::string data_dir = "data";
};

RowOutcome evaluate_row(const GoldenRow& row, const TableOptions& opt);
std::vector<RowOutcome> reproduce_table(const TableOptions& opt);
Json table_json(const std::vector<RowOutcome>& rows);

// ---- verification suites ----

struct SuiteCase {
  std::string params;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string description;
  std::vector<SuiteCase> cases;
  double seconds = 0;
  bool pass() const;
};

std::vector<std::string> suite_names();
// Throws ParseError for an unknown suite name.  params restrict the sweep,
// e.g. {"q", "7"} or {"n", "3"}.
SuiteResult run_suite(const std::string& name, const std::map<std::string, std::string>& params = {});
Json suite_json(const SuiteResult& r);

}  // namespace ncg::app
