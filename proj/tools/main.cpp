#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gqkit/finite_field.hpp"
#include "gqkit/geometry.hpp"
#include "gqkit/incidence.hpp"

using namespace gqkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"gqkit: generalized quadrangles, their groups and the arithmetic around them"};
  app.require_subcommand(1);
  std::function<CommandResult()> run;

  std::string family, format = "gqi", file, group = "auto", alpha = "all", which, t_text, n_text;
  int q = 0;
  std::optional<std::string> out_file;
  std::optional<int> arcs;
  long long s_max = 0, t_max = 0;
  bool finish = false;

  auto* construct = app.add_subcommand("construct", "Build a quadrangle, verify its axioms and write GQI v1");
  construct->add_option("family", family, "W3, Q4, Q5minus, H3, H4 or GQ35")->required();
  construct->add_option("q", q, "field order (4 for GQ35)")->required();
  construct->add_option("--out", out_file, "write the GQI file here instead of stdout");
  construct->add_option("--format", format, "gqi or json")->check(CLI::IsMember({"gqi", "json"}));
  construct->callback([&] { run = [&] { return cmd_construct(family, q, out_file, format); }; });

  auto* verify = app.add_subcommand("verify", "Check the GQ axiom and certify the incidence graph of a GQI file");
  verify->add_option("file", file, "GQI v1 file")->required();
  verify->callback([&] { run = [&] { return cmd_verify(file); }; });

  auto* local2t = app.add_subcommand("local2t", "Local 2-transitivity and stabilizer orders");
  local2t->add_option("family", family, "W3, Q4, Q5minus, H3, H4 or GQ35")->required();
  local2t->add_option("q", q, "field order (4 for GQ35)")->required();
  local2t->add_option("--group", group, "auto, or a PRM v1 file acting on points then lines");
  local2t->add_option("--arcs", arcs, "also test local s-arc transitivity for this s")->check(CLI::Range(1, 8));
  local2t->callback([&] { run = [&] { return cmd_local2t(family, q, group, arcs); }; });

  auto* sieve = app.add_subcommand("sieve", "Feasible orders 2 <= s <= t as TSV");
  sieve->add_option("--smax", s_max, "largest s")->required();
  sieve->add_option("--tmax", t_max, "largest t")->required();
  std::string sieve_format = "tsv";
  sieve->add_option("--format", sieve_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  sieve->callback([&] { run = [&] { return cmd_sieve(s_max, t_max, sieve_format); }; });

  auto* solve = app.add_subcommand("solve-root", "Integer s with (s+1)(st+1) = N");
  solve->add_option("--t", t_text, "t")->required();
  solve->add_option("--n", n_text, "N")->required();
  solve->callback([&] { run = [&] { return cmd_solve_root(t_text, n_text); }; });

  auto* identities = app.add_subcommand("identities", "Recompute the polynomial division identities");
  identities->callback([&] { run = [&] { return cmd_identities(); }; });

  auto* pipeline = app.add_subcommand("lie-pipeline", "Candidate socles of Lie type with non-large point stabilizers");
  pipeline->add_option("--alpha", alpha, "1, 2, 3 or all")->check(CLI::IsMember({"1", "2", "3", "all"}));
  pipeline->add_flag("--finish", finish, "also run the point-action elimination on the survivors");
  std::string pipeline_format = "json";
  pipeline->add_option("--format", pipeline_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  pipeline->callback([&] { run = [&] { return cmd_lie_pipeline(alpha, finish, pipeline_format); }; });

  auto* tables = app.add_subcommand("tables", "Reproduce a golden table and diff it");
  tables->add_option("--which", which, "3.3, 6.2, 7.3, 7.4 or 7.5")
      ->required()
      ->check(CLI::IsMember({"3.3", "6.2", "7.3", "7.4", "7.5"}));
  std::string tables_format = "json";
  tables->add_option("--format", tables_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  tables->callback([&] { run = [&] { return cmd_tables(which, tables_format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    const CommandResult r = run();
    std::cout << r.output;
    if (!r.output.empty() && r.output.back() != '\n') std::cout << '\n';
    return r.exit_code;
  } catch (const usage_error& e) {
    std::cerr << "gqkit: " << e.what() << "\n\n" << app.help();
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gqkit: " << e.what() << '\n';
    return usage;
  } catch (const gqkit::field_error& e) {
    std::cerr << "gqkit: " << e.what() << '\n';
    return usage;
  } catch (const gqkit::geometry_error& e) {
    std::cerr << "gqkit: " << e.what() << '\n';
    return usage;
  } catch (const gqkit::gqi_parse_error& e) {
    std::cerr << "gqkit: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "gqkit: internal error: " << e.what() << '\n';
    return internal;
  }
}
