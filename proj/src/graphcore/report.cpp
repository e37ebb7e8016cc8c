#include "ncg/report.hpp"

#include <sstream>

namespace ncg::graph {

namespace {

Json cycles(const std::vector<Permutation>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

Json optional_int(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json report_json(const DiameterReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["graph"] = std::string(to_string(r.kind));
  j["group"] = r.group;
  j["group_order"] = r.group_order;
  j["connected"] = r.connected;
  j["diameter"] = optional_int(r.diameter);
  j["quotient_diameter"] = optional_int(r.quotient_diameter);
  j["vertices"] = r.vertex_count;
  j["edges"] = r.edge_count;
  j["quotient_vertices"] = r.quotient_vertices;
  j["quotient_edges"] = r.quotient_edges;
  if (r.kind == GraphKind::intersection) {
    j["witness_pair"] = r.witness_labels.empty() ? Json::array() : Json{r.witness_labels.front(), r.witness_labels.back()};
    j["witness_path"] = r.witness_labels;
  } else {
    j["witness_pair"] = cycles(r.witness_pair);
    j["witness_path"] = cycles(r.witness_path);
  }
  j["isolated"] = cycles(r.isolated);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["quotient_vertices"] = c.vertices;
    cj["elements"] = c.elements;
    cj["diameter"] = c.diameter;
    cj["multiplicity"] = c.multiplicity;
    cj["representative"] = c.representative.to_string();
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  Json stats;
  stats["plan_used"] = r.plan_used;
  stats["bfs_sources"] = r.bfs_sources;
  stats["pairs_evaluated"] = r.pairs_evaluated;
  stats["generation_tests"] = r.generation_tests;
  j["statistics"] = std::move(stats);
  Json t;
  t["build_seconds"] = r.build_seconds;
  t["diameter_seconds"] = r.diameter_seconds;
  j["timings"] = std::move(t);
  return j;
}

Json path_json(const PathResult& p, const Permutation& x, const Permutation& y) {
  Json j;
  j["schema"] = kReportSchema;
  j["x"] = x.to_string();
  j["y"] = y.to_string();
  j["connected"] = p.distance.has_value();
  j["distance"] = optional_int(p.distance);
  j["path"] = cycles(p.path);
  return j;
}

std::string csv_header() {
  return "group,graph,order,vertices,edges,quotient_vertices,connected,diameter,witness_x,witness_y,seconds";
}

std::string csv_row(const DiameterReport& r) {
  std::ostringstream s;
  s << csv_field(r.group) << ',' << to_string(r.kind) << ',' << r.group_order << ',' << r.vertex_count << ','
    << r.edge_count << ',' << r.quotient_vertices << ',' << (r.connected ? "true" : "false") << ','
    << (r.diameter ? std::to_string(*r.diameter) : "inf") << ',';
  if (r.witness_pair.size() == 2)
    s << csv_field(r.witness_pair[0].to_string()) << ',' << csv_field(r.witness_pair[1].to_string());
  else if (r.witness_labels.size() >= 2)
    s << csv_field(r.witness_labels.front()) << ',' << csv_field(r.witness_labels.back());
  else
    s << ',';
  s << ',' << r.build_seconds + r.diameter_seconds;
  return s.str();
}

}  // namespace ncg::graph
