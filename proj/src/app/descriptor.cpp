#include <set>

#include "ncg/app.hpp"

namespace ncg::app {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::diameter: return "diam";
    case Mode::distance: return "dist";
    case Mode::verify: return "verify";
    case Mode::table: return "table";
  }
  return "?";
}

}  // namespace

Json JobSpec::to_json() const {
  Json j;
  j["mode"] = mode_name(mode);
  if (mode == Mode::diameter || mode == Mode::distance) {
    j["group"] = group;
    j["graph"] = std::string(graph::to_string(kind));
  }
  if (mode == Mode::distance) {
    j["x"] = x;
    j["y"] = y;
  }
  if (mode == Mode::verify) {
    j["suite"] = suite;
    j["params"] = params;
  }
  if (mode == Mode::table) {
    j["include_long"] = include_long;
    j["data_dir"] = data_dir;
  }
  j["max_order"] = max_order;
  j["max_vertices"] = max_vertices;
  j["time_budget"] = time_budget;
  j["reduction_plan"] = use_plan;
  return j;
}

PermGroup load_group(const std::string& descriptor) { return perm::make_group(perm::parse_group_spec(descriptor)); }

std::optional<bool> has_odd_order_maximal(const perm::GroupSpec& spec) {
  const auto& f = spec.family;
  const auto& p = spec.params;
  if (f == "alt") {
    const std::uint64_t n = p.at(0);
    return is_prime(n) && n % 4 == 3 && !std::set<std::uint64_t>{7, 11, 23}.count(n);
  }
  if (f == "psl") {
    const std::uint64_t n = p.at(0), q = p.at(1);
    if (!is_prime(n) || (n == 3 && q == 4)) return false;
    return n != 2 || q % 4 == 3;
  }
  if (f == "psu") {
    const std::uint64_t n = p.at(0), q = p.at(1);
    if (n == 2) return q % 4 == 3;
    if (!is_prime(n)) return false;
    return !std::set<std::pair<std::uint64_t, std::uint64_t>>{{3, 3}, {3, 5}, {5, 2}}.count({n, q});
  }
  if (f == "mathieu") return p.at(0) == 23;
  return std::nullopt;
}

}  // namespace ncg::app
