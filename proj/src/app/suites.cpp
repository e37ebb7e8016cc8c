#include <algorithm>
#include <functional>
#include <sstream>

#include "ncg/app.hpp"
#include "ncg/classes.hpp"
#include "ncg/classical.hpp"
#include "ncg/derangement.hpp"
#include "ncg/errors.hpp"
#include "ncg/poly.hpp"
#include "ncg/subgroups.hpp"
#include "ncg/verification.hpp"

namespace ncg::app {

namespace {

using graph::GraphKind;
using Params = std::map<std::string, std::string>;

std::vector<std::uint64_t> sweep(const Params& p, const std::string& key, std::vector<std::uint64_t> defaults) {
  auto it = p.find(key);
  if (it == p.end()) return defaults;
  std::vector<std::uint64_t> out;
  std::stringstream s(it->second);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("suite parameter " + key + " expects integers, got '" + it->second + "'");
    }
  }
  return out;
}

std::vector<std::string> groups(const Params& p, std::vector<std::string> defaults) {
  auto it = p.find("group");
  if (it == p.end()) return defaults;
  std::vector<std::string> out;
  std::stringstream s(it->second);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(item);
  return out;
}

template <class T>
bool wanted(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Pairs (n, q) from the defaults, restricted by optional "n" and "q" lists.
std::vector<std::pair<unsigned, std::uint32_t>> pairs(const Params& p, std::vector<std::pair<unsigned, std::uint32_t>> defaults) {
  std::vector<std::uint64_t> ns, qs;
  for (auto [n, q] : defaults) {
    ns.push_back(n);
    qs.push_back(q);
  }
  ns = sweep(p, "n", ns);
  qs = sweep(p, "q", qs);
  std::vector<std::pair<unsigned, std::uint32_t>> out;
  const bool explicit_both = p.count("n") && p.count("q");
  if (explicit_both) {
    for (auto n : ns)
      for (auto q : qs) out.push_back({static_cast<unsigned>(n), static_cast<std::uint32_t>(q)});
    return out;
  }
  for (auto [n, q] : defaults)
    if (wanted<std::uint64_t>(ns, n) && wanted<std::uint64_t>(qs, q)) out.push_back({n, q});
  return out;
}

SuiteCase from_report(std::string params, const mat::VerificationReport& r) {
  SuiteCase c;
  c.params = std::move(params);
  c.pass = r.ok();
  std::string failed;
  for (const auto& ch : r.checks)
    if (!ch.pass) failed += (failed.empty() ? "" : "; ") + ch.name + (ch.detail.empty() ? "" : " (" + ch.detail + ")");
  c.detail = c.pass ? std::to_string(r.checks.size()) + " checks" : "failed: " + failed;
  return c;
}

std::string nq(unsigned n, std::uint32_t q) { return "n=" + std::to_string(n) + " q=" + std::to_string(q); }

graph::DiameterReport diameter(const PermGroup& g, GraphKind kind) { return graph::graph_diameter(graph::QuotientGraph(g, kind)); }

std::string show(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : "inf"; }

// Irreducible factors of degree d have no factor of degree <= d/2; check by
// dividing by every monic polynomial of those degrees when that is cheap.
std::optional<bool> trial_division_irreducible(const ff::Poly& f, std::uint64_t budget) {
  const auto& F = f.field();
  const std::uint64_t q = F->q();
  std::uint64_t spent = 0;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    spent += count;
    if (spent > budget) return std::nullopt;
    std::vector<ff::Code> c(d + 1, 0);
    c[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i, v /= q) c[i] = static_cast<ff::Code>(v % q);
      if ((f % ff::Poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

SuiteResult binomial_suite(const Params& p) {
  SuiteResult r;
  for (auto q : sweep(p, "q", {4, 5, 7, 8, 9, 11, 13, 16, 25})) {
    const auto f = mat::field_of_order(q);
    SuiteCase c;
    c.params = "q=" + std::to_string(q);
    c.pass = true;
    int trial = 0;
    for (ff::Code a = 1; a < q; ++a) {
      const auto factors = ff::binomial_factors(f, {f, a});
      auto prod = ff::Poly::constant(f, 1);
      for (const auto& g : factors) {
        prod = prod * g;
        const bool irreducible = ff::poly_is_irreducible(g);
        const auto td = trial_division_irreducible(g, 200'000);
        if (td) ++trial;
        if (!irreducible || (td && !*td) || g.degree() != static_cast<int>(f->order(a))) {
          c.pass = false;
          c.detail += "bad factor " + g.to_string() + " for a=" + std::to_string(a) + "; ";
        }
      }
      auto sorted = factors;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        c.pass = false;
        c.detail += "repeated factor for a=" + std::to_string(a) + "; ";
      }
      if (!(prod == ff::Poly::binomial(f, static_cast<unsigned>(q - 1), a))) {
        c.pass = false;
        c.detail += "product differs for a=" + std::to_string(a) + "; ";
      }
    }
    if (c.pass) c.detail = std::to_string(q - 1) + " binomials; " + std::to_string(trial) + " factors confirmed by trial division";
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult sl2_suite(const Params& p) {
  SuiteResult r;
  for (auto q : sweep(p, "q", {3, 4, 5, 7, 9, 11, 13}))
    r.cases.push_back(from_report("q=" + std::to_string(q), mat::verify_sl2_irreducible(static_cast<std::uint32_t>(q))));
  return r;
}

SuiteResult line_stabilisers_suite(const Params& p) {
  SuiteResult r;
  for (auto [n, q] : pairs(p, {{2, 4}, {2, 5}, {2, 7}, {3, 2}, {3, 3}, {4, 2}}))
    r.cases.push_back(from_report(nq(n, q), mat::verify_line_stabilisers(n, q)));
  return r;
}

SuiteResult unitary_suite(const Params& p) {
  SuiteResult r;
  for (auto [n, q] : pairs(p, {{3, 2}, {3, 3}, {3, 4}, {4, 2}, {5, 2}}))
    r.cases.push_back(from_report(nq(n, q), mat::verify_unitary_witnesses(n, q)));
  return r;
}

SuiteResult diagonal_triple_suite(const Params& p) {
  SuiteResult r;
  for (auto q : sweep(p, "q", {2, 3, 4, 5}))
    r.cases.push_back(from_report("q=" + std::to_string(q), mat::verify_diagonal_triple(static_cast<std::uint32_t>(q), q <= 3)));
  return r;
}

SuiteResult cyclic_shift_suite(const Params& p) {
  SuiteResult r;
  std::vector<std::pair<unsigned, std::uint32_t>> defaults;
  for (unsigned n : {3, 5, 7})
    for (std::uint32_t q : {2, 3, 4}) defaults.push_back({n, q});
  for (auto [n, q] : pairs(p, defaults)) r.cases.push_back(from_report(nq(n, q), mat::verify_cyclic_shift(n, q)));
  return r;
}

SuiteResult singer_suite(const Params& p) {
  SuiteResult r;
  for (auto [n, q] : pairs(p, {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}))
    for (bool unitary : {false, true})
      r.cases.push_back(from_report(nq(n, q) + (unitary ? " unitary" : " linear"), mat::verify_singer(n, q, unitary)));
  return r;
}

SuiteResult derangement_suite(const Params& p) {
  SuiteResult r;
  for (auto n : sweep(p, "n", {6, 7, 8, 9})) {
    const auto g = perm::alternating_group(static_cast<unsigned>(n));
    SuiteCase c;
    c.params = "n=" + std::to_string(n);
    c.pass = true;
    int tested = 0;
    for (const auto& cls : perm::conjugacy_classes(g).classes) {
      const auto d = perm::derangement_data(cls.rep);
      if (!d.is_derangement || d.orbits.size() < 2) continue;
      ++tested;
      const auto y = perm::derangement_neighbor(g, cls.rep);
      if (!graph::nc_adjacent(g, cls.rep, y)) {
        c.pass = false;
        c.detail += cls.rep.to_string() + " not adjacent to " + y.to_string() + "; ";
      }
    }
    if (c.pass) c.detail = std::to_string(tested) + " derangement classes adjacent to their constructed neighbour";
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult no_isolated_suite(const Params& p) {
  SuiteResult r;
  for (const auto& d : groups(p, {"alt:5", "alt:6", "alt:7", "alt:8", "sym:5", "sym:6", "psl:2:7", "psl:2:8", "psl:2:11",
                                  "psl:2:13", "pgl:2:7", "psl:3:3", "psu:3:3", "mathieu:11"})) {
    const auto g = load_group(d);
    const graph::QuotientGraph q(g, GraphKind::nc);
    const auto iso = graph::isolated_vertices(q);
    SuiteCase c;
    c.params = d;
    c.pass = iso.empty();
    c.detail = std::to_string(q.vertex_count()) + " vertices, " + std::to_string(iso.size()) + " isolated";
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult maximal_subgraphs_suite(const Params& p) {
  SuiteResult r;
  for (const auto& d : groups(p, {"alt:5", "alt:6", "alt:7", "psl:2:7"})) {
    const auto g = load_group(d);
    SuiteCase c;
    c.params = d;
    c.pass = true;
    const auto maximals = graph::maximal_subgroups(g);
    for (const auto& m : maximals) {
      const auto induced = graph::induced_nc_diameter(g, m.representative);
      if (induced.vertices == 0) continue;
      c.detail += "order " + std::to_string(m.order) + ": " + (induced.connected ? std::to_string(induced.diameter) : "inf") + "; ";
      c.pass = c.pass && induced.connected && induced.diameter == 2;
    }
    c.detail = std::to_string(maximals.size()) + " classes of maximal subgroups; induced diameters " + c.detail;
    r.cases.push_back(std::move(c));
  }
  return r;
}

SuiteResult intersection_graph_suite(const Params& p) {
  SuiteResult r;
  for (const auto& d : groups(p, {"alt:5", "psl:2:7"})) {
    const auto g = load_group(d);
    const auto delta = graph::intersection_graph_diameter(g);
    for (auto kind : {GraphKind::nc, GraphKind::nongen}) {
      const auto gamma = diameter(g, kind);
      SuiteCase c;
      c.params = d + " " + std::string(graph::to_string(kind));
      c.pass = delta.diameter && gamma.diameter && *gamma.diameter + 1 >= *delta.diameter;
      c.detail = "diameter " + show(gamma.diameter) + ", intersection graph diameter " + show(delta.diameter) + " over " +
                 std::to_string(delta.vertex_count) + " subgroups";
      r.cases.push_back(std::move(c));
    }
  }
  return r;
}

SuiteResult bounds_suite(const Params& p) {
  SuiteResult r;
  for (const auto& d : groups(p, {"alt:5", "alt:6", "alt:7", "alt:8", "alt:9", "psl:2:4", "psl:2:5", "psl:2:7", "psl:2:8",
                                  "psl:2:9", "psl:2:11", "psl:2:13", "psl:3:3", "psl:3:4", "psl:4:2", "psu:3:3", "psu:3:4",
                                  "psu:4:2", "mathieu:11", "mathieu:12"})) {
    const auto spec = perm::parse_group_spec(d);
    const auto g = perm::make_group(spec);
    const auto nc = diameter(g, GraphKind::nc);
    const auto ng = diameter(g, GraphKind::nongen);
    unsigned nc_bound = 5;
    std::string why = "<= 5 (simple)";
    if (spec.family == "alt") {
      nc_bound = spec.params[0] % 2 == 0 ? 3 : 4;
      why = spec.params[0] % 2 == 0 ? "<= 3 (A_n, n even)" : "<= 4 (A_n, n odd)";
    } else if (spec.family == "psl") {
      nc_bound = 4;
      why = "<= 4 (PSL)";
    }
    const auto odd = has_odd_order_maximal(spec);
    const unsigned ng_bound = odd.value_or(true) ? 4 : 3;
    SuiteCase c;
    c.params = d;
    c.pass = nc.diameter && ng.diameter && *nc.diameter <= nc_bound && *nc.diameter <= 5 && *ng.diameter <= ng_bound;
    c.detail = "nc " + show(nc.diameter) + " " + why + "; nongen " + show(ng.diameter) + " <= " + std::to_string(ng_bound) +
               (odd.value_or(true) ? " (odd-order maximal subgroup)" : " (all maximal subgroups even order)");
    r.cases.push_back(std::move(c));
  }
  return r;
}

struct SuiteDef {
  const char* name;
  const char* description;
  std::function<SuiteResult(const Params&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> s = {
      {"binomial", "irreducible factors of x^(q-1) - a over GF(q)", binomial_suite},
      {"sl2-irreducible", "SL(2,q) elements with irreducible characteristic polynomial and A^(q-1) central", sl2_suite},
      {"line-stabilisers", "commutators and centralisers of the stabilisers of two points in SL(n,q)", line_stabilisers_suite},
      {"unitary", "SU(n,q) witnesses fixing subspaces pointwise or acting as scalars", unitary_suite},
      {"diagonal-triple", "diagonal matrices in SU(3,q) and their monomial conjugators", diagonal_triple_suite},
      {"cyclic-shift", "cyclic shift companion matrix and involution in SU(n,q)", cyclic_shift_suite},
      {"singer", "Singer cycle normalisers", singer_suite},
      {"derangement", "neighbours of intransitive derangements in A_n", derangement_suite},
      {"no-isolated", "no isolated vertices in nc(G) for insoluble G", no_isolated_suite},
      {"maximal-subgraphs", "induced subgraph on maximal subgroups is connected with diameter 2", maximal_subgraphs_suite},
      {"intersection-graph", "diameter at least the intersection graph diameter minus one", intersection_graph_suite},
      {"bounds", "diameter bounds for nc(G) and the non-generating graph of simple groups", bounds_suite},
  };
  return s;
}

}  // namespace

bool SuiteResult::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, const Params& params) {
  for (const auto& s : suites())
    if (name == s.name) {
      const auto start = Deadline::Clock::now();
      SuiteResult r = s.run(params);
      r.name = s.name;
      r.description = s.description;
      r.seconds = seconds_since(start);
      return r;
    }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw ParseError("unknown suite '" + name + "' (known: " + known + ")");
}

Json suite_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["description"] = r.description;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(Json{{"params", c.params}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  j["cases"] = std::move(cases);
  j["timings"] = Json{{"seconds", r.seconds}};
  return j;
}

}  // namespace ncg::app
