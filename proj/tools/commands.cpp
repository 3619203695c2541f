#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "gqkit/arith.hpp"
#include "gqkit/geometry.hpp"
#include "gqkit/incidence.hpp"
#include "gqkit/lambert.hpp"
#include "gqkit/maximal_subgroups.hpp"
#include "gqkit/permgroup.hpp"
#include "gqkit/pipeline.hpp"
#include "gqkit/section_tables.hpp"

namespace gqkit::cli {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json big(const BigInt& v) { return to_decimal(v); }

json optional_big(const std::optional<BigInt>& v) { return v ? json(to_decimal(*v)) : json(nullptr); }

bool is_gq35(const std::string& family) { return family == "GQ35"; }

IncidenceStructure build_named(const std::string& family, int q) {
  if (is_gq35(family)) {
    if (q != 4) throw usage_error("GQ35 is defined over GF(4); pass q = 4");
    return build_gq35();
  }
  const auto f = parse_gq_family(family);
  if (!f) throw usage_error("unknown family '" + family + "' (expected W3, Q4, Q5minus, H3, H4 or GQ35)");
  if (q < 2) throw usage_error("q must be a prime power of at least 2");
  return build_classical_gq(*f, q);
}

std::string violation_kind(GqViolation::Kind k) {
  switch (k) {
    case GqViolation::Kind::empty: return "empty";
    case GqViolation::Kind::line_size: return "line-size";
    case GqViolation::Kind::point_degree: return "point-degree";
    case GqViolation::Kind::axiom: return "axiom";
  }
  return "unknown";
}

json violation_json(const GqViolation& v) {
  return {{"kind", violation_kind(v.kind)},
          {"point", v.point},
          {"line", v.line},
          {"collinear_count", v.collinear_count},
          {"message", v.message}};
}

json params_json(const GqParameters& p) {
  return {{"order", {p.s, p.t}}, {"n_points", p.n_points}, {"n_lines", p.n_lines}, {"n_flags", p.n_flags}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tsv_escape(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

}  // namespace

CommandResult cmd_construct(const std::string& family, int q, const std::optional<std::string>& out_file,
                            const std::string& format) {
  const IncidenceStructure inc = build_named(family, q);
  const GqVerification v = verify_gq_axiom(inc);
  const std::string gqi = to_gqi(inc);
  if (out_file) {
    std::ofstream out(*out_file, std::ios::binary);
    if (!out) throw usage_error("cannot write " + *out_file);
    out << gqi;
  }
  CommandResult r;
  r.exit_code = v.ok() ? ok : negative;
  if (format == "json") {
    json j = {{"family", family}, {"q", q}, {"verified", v.ok()}};
    if (v.params) j.update(params_json(*v.params));
    if (v.violation) j["violation"] = violation_json(*v.violation);
    j["lines"] = inc.lines();
    if (out_file) j["file"] = *out_file;
    r.output = dump(j);
  } else if (!out_file) {
    r.output = gqi;
  }
  return r;
}

CommandResult cmd_verify(const std::string& file) {
  const IncidenceStructure inc = parse_gqi(read_file(file));
  const GqVerification v = verify_gq_axiom(inc);
  json j = {{"file", file}, {"gq", v.ok()}, {"n_points", inc.n_points()}, {"n_lines", inc.n_lines()}};
  const GraphMetrics m = graph_metrics(incidence_graph(inc));
  j["diameter"] = m.diameter;
  j["girth"] = m.girth;
  j["connected"] = m.connected;
  bool certified = false;
  try {
    certify_incidence_graph(inc);
    certified = true;
  } catch (const structural_error& e) {
    j["certification_error"] = e.what();
  }
  j["certified"] = certified;
  if (v.params) j.update(params_json(*v.params));
  if (v.violation) j["violation"] = violation_json(*v.violation);
  return {v.ok() && certified ? ok : negative, dump(j)};
}

CommandResult cmd_local2t(const std::string& family, int q, const std::string& group, std::optional<int> arcs) {
  const IncidenceStructure inc = build_named(family, q);
  const GqVerification v = verify_gq_axiom(inc);
  if (!v.ok()) throw std::logic_error("constructed structure failed the GQ axiom");
  const Graph graph = incidence_graph(inc);

  PermGroup g;
  if (group == "auto") {
    std::vector<int> pts(inc.n_points()), lns(inc.n_lines());
    for (int i = 0; i < inc.n_points(); ++i) pts[i] = i;
    for (int i = 0; i < inc.n_lines(); ++i) lns[i] = inc.n_points() + i;
    g = graph_autos(graph, {pts, lns});
  } else {
    g = parse_prm(read_file(group));
    if (g.domain_size() != graph.n)
      throw std::invalid_argument("group acts on " + std::to_string(g.domain_size()) + " letters, expected " +
                                  std::to_string(graph.n));
    require_automorphisms(graph, g);
  }

  const LocalTwoTransitivityReport rep = local_two_transitivity(inc, g);
  const GqParameters& p = *v.params;
  json j = {{"family", family},
            {"q", q},
            {"group", group},
            {"order", {p.s, p.t}},
            {"group_order", big(group_order(g))},
            {"preserves_sides", rep.preserves_sides},
            {"points_ok", rep.points_ok},
            {"lines_ok", rep.lines_ok},
            {"locally_2_transitive", rep.ok()},
            {"point_representatives", rep.point_representatives},
            {"line_representatives", rep.line_representatives},
            {"point_stabilizer_order", big(rep.point_stabilizer_order)},
            {"line_stabilizer_order", big(rep.line_stabilizer_order)}};

  bool good = rep.ok();
  if (rep.preserves_sides && rep.point_stabilizer_order != 0) {
    const Rational ratio(rep.line_stabilizer_order, rep.point_stabilizer_order);
    const Rational expected(p.s + 1, p.t + 1);
    j["stabilizer_ratio"] = {{"line_over_point", ratio.str()},
                             {"expected", std::to_string(p.s + 1) + "/" + std::to_string(p.t + 1)},
                             {"matches", ratio == expected}};
  }
  if (arcs) {
    const ArcOrbitReport a = local_arc_report(graph, g, *arcs);
    j["arcs"] = {{"s", a.s},
                 {"transitive", a.transitive},
                 {"representatives", a.representatives},
                 {"arc_counts", a.arc_counts},
                 {"orbit_sizes", a.orbit_sizes}};
    good = good && a.transitive;
  }
  return {good ? ok : negative, dump(j)};
}

CommandResult cmd_sieve(long long s_max, long long t_max, const std::string& format) {
  if (s_max < 2 || t_max < 2) throw usage_error("--smax and --tmax must be at least 2");
  const auto pairs = enumerate_feasible(s_max, t_max);
  CommandResult r;
  r.exit_code = pairs.empty() ? negative : ok;
  if (format == "json") {
    json list = json::array();
    for (const auto& [s, t] : pairs) list.push_back({s, t});
    r.output = dump({{"smax", s_max}, {"tmax", t_max}, {"pairs", list}});
  } else {
    std::ostringstream out;
    out << "# s\tt\n";
    for (const auto& [s, t] : pairs) out << s << '\t' << t << '\n';
    r.output = out.str();
  }
  return r;
}

CommandResult cmd_solve_root(const std::string& t_text, const std::string& n_text) {
  const BigInt t = parse_bigint(t_text);
  const BigInt n = parse_bigint(n_text);
  if (t < 1 || n < 1) throw usage_error("--t and --n must be positive");
  const auto s = solve_point_count(t, n);
  return {s ? ok : negative, dump({{"t", big(t)}, {"n", big(n)}, {"s", optional_big(s)}})};
}

CommandResult cmd_identities() {
  const IdentitySuiteReport rep = verify_identity_suite();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"label", c.label},
                      {"dividend", c.dividend.to_string()},
                      {"divisor", c.divisor.to_string()},
                      {"quotient", c.quotient.to_string()},
                      {"remainder", c.remainder.to_string()},
                      {"printed_remainder", c.printed_remainder.to_string()},
                      {"printed_quotient", c.printed_quotient ? json(c.printed_quotient->to_string()) : json(nullptr)},
                      {"remainder_ok", c.remainder_ok},
                      {"quotient_ok", c.quotient_ok ? json(*c.quotient_ok) : json(nullptr)},
                      {"diagnostic", c.diagnostic}});
  }
  const bool all_ok = rep.all_remainders_ok();
  return {all_ok ? ok : negative, dump({{"checks", checks}, {"all_remainders_ok", all_ok}})};
}

CommandResult cmd_lie_pipeline(const std::string& alpha, bool finish, const std::string& format) {
  const std::vector<int> alphas = alpha == "all" ? std::vector<int>{1, 2, 3} : std::vector<int>{std::stoi(alpha)};
  const SubgroupCatalog catalog = SubgroupCatalog::load_default();
  const CandidatePipelineReport rep = run_candidate_pipeline(catalog, alphas);
  std::optional<SurvivorEliminationReport> elim;
  if (finish) elim = run_survivor_elimination(rep, catalog);

  CommandResult r;
  r.exit_code = elim && elim->all_eliminated() ? negative : ok;

  if (format == "tsv") {
    std::ostringstream out;
    out << "# alpha\tgroup\tq\tout\tmu\torder\tnotion\tprovenance\tpassed_stage\telimination_reason\n";
    for (const auto& c : rep.records) {
      out << c.alpha << '\t' << to_string(c.id) << '\t' << c.id.q << '\t' << c.out << '\t'
          << (c.mu ? to_decimal(*c.mu) : "-") << '\t' << c.order << '\t' << to_string(c.notion) << '\t'
          << to_string(c.provenance) << '\t' << to_string(c.passed_stage) << '\t'
          << (c.elimination_reason.empty() ? "-" : tsv_escape(c.elimination_reason)) << '\n';
    }
    if (elim) {
      out << "# group\tstabilizer_order\tdegree\ts\tt\tstabilizer_mod_t_plus_1\tdegree_mod_t_plus_1\teliminated\treason\n";
      for (const auto& e : elim->eliminations) {
        out << to_string(e.triple.id) << '\t' << e.triple.stabilizer_order << '\t' << e.triple.degree << '\t'
            << e.triple.s << '\t' << e.triple.t << '\t' << e.stabilizer_mod_t_plus_1 << '\t' << e.degree_mod_t_plus_1
            << '\t' << (e.eliminated ? "yes" : "no") << '\t' << tsv_escape(e.reason) << '\n';
      }
    }
    r.output = out.str();
    return r;
  }

  json stages = json::array();
  for (const auto& s : rep.stages) {
    stages.push_back({{"alpha", s.alpha},
                      {"tp_bound", big(s.thresholds.tp_bound)},
                      {"t_bound", big(s.thresholds.t_bound)},
                      {"order_bound", big(s.order_bound)},
                      {"digits", s.thresholds.digits},
                      {"scope", s.scope}});
  }
  json records = json::array();
  for (const auto& c : rep.records) {
    records.push_back({{"group", to_string(c.id)},
                       {"alpha", c.alpha},
                       {"order", big(c.order)},
                       {"out", big(c.out)},
                       {"mu", optional_big(c.mu)},
                       {"notion", to_string(c.notion)},
                       {"provenance", to_string(c.provenance)},
                       {"passed_stage", to_string(c.passed_stage)},
                       {"elimination_reason", c.elimination_reason}});
  }
  json ree = json::array();
  for (const auto& c : rep.ree_checks) {
    ree.push_back({{"q", c.q},
                   {"out_cubed", big(c.out_cubed)},
                   {"smallest_maximal", big(c.smallest_maximal)},
                   {"holds", c.holds}});
  }
  json survivors = json::array();
  for (const auto& id : rep.survivors()) survivors.push_back(to_string(id));

  json j = {{"alphas", alphas},
            {"stages", stages},
            {"records", records},
            {"ree_checks", ree},
            {"psl2_cutoff", rep.psl2_cutoff},
            {"survivors", survivors}};
  if (elim) {
    json examined = json::array();
    for (const auto& id : elim->examined) examined.push_back(to_string(id));
    json elims = json::array();
    for (const auto& e : elim->eliminations) {
      elims.push_back({{"group", to_string(e.triple.id)},
                       {"stabilizer_order", big(e.triple.stabilizer_order)},
                       {"degree", big(e.triple.degree)},
                       {"order", {e.triple.s, e.triple.t}},
                       {"t_plus_1_divides_stabilizer", e.t_plus_1_divides_stabilizer},
                       {"stabilizer_mod_t_plus_1", big(e.stabilizer_mod_t_plus_1)},
                       {"degree_mod_t_plus_1", big(e.degree_mod_t_plus_1)},
                       {"eliminated", e.eliminated},
                       {"reason", e.reason}});
    }
    j["elimination"] = {{"examined", examined}, {"eliminations", elims}, {"all_eliminated", elim->all_eliminated()}};
  }
  r.output = dump(j);
  return r;
}

CommandResult cmd_tables(const std::string& which, const std::string& format) {
  const SubgroupCatalog catalog = SubgroupCatalog::load_default();
  const TableReport rep = reproduce_table(which, catalog);
  CommandResult r;
  r.exit_code = rep.clean() ? ok : negative;
  if (format == "tsv") {
    std::ostringstream out;
    out << "# table\tkey\texpected\tactual\tstatus\tnote\n";
    for (const auto& e : rep.entries) {
      out << e.table << '\t' << e.key << '\t' << tsv_escape(e.expected) << '\t' << tsv_escape(e.actual) << '\t'
          << to_string(e.status) << '\t' << (e.note.empty() ? "-" : tsv_escape(e.note)) << '\n';
    }
    r.output = out.str();
    return r;
  }
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"table", e.table},
                       {"key", e.key},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"status", to_string(e.status)},
                       {"note", e.note}});
  }
  json counts = json::object();
  for (auto s : {DiffStatus::match, DiffStatus::differs, DiffStatus::missing, DiffStatus::extra, DiffStatus::flagged})
    counts[to_string(s)] = rep.count(s);
  r.output = dump({{"which", rep.which}, {"clean", rep.clean()}, {"counts", counts}, {"entries", entries}});
  return r;
}

}  // namespace gqkit::cli
