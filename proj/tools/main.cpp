#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ppring/cli.hpp"

int main(int argc, char** argv) {
  ppring::RunConfig config;
  std::string out_path;

  CLI::App app{"Species and primitive idempotents of the trivial source ring"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"pairs", "list the pairs (P, s) up to conjugacy"},
      {"lattice", "subgroup classes and Möbius values to the top"},
      {"burnside", "table of marks and Gluck-Yoshida idempotents"},
      {"species-table", "species of the standard generators"},
      {"idempotents", "primitive idempotents with delta and two-route checks"},
      {"verify", "run the identity suite"},
      {"oracle-check", "compare species with the finite-field Brauer quotient"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group", config.group, "group name or JSON spec")->required();
    sub->add_option("--p", config.p, "characteristic")->required();
    sub->add_option("--format", config.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--max-order", config.max_order, "group order cap");
    sub->add_option("--oracle-n-cap", config.oracle_n_cap, "oracle conductor cap");
    sub->add_option("--oracle-dim-cap", config.oracle_dim_cap, "oracle module dimension cap");
    sub->add_option("--samples", config.samples, "random samples per check");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--out", out_path, "write the report to a file");
    sub->callback([&config, name = name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const ppring::RunResult result = ppring::run(config);
  if (result.exit_code == 2) {
    std::cerr << result.report;
    return 2;
  }
  if (out_path.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 2;
    }
    out << result.report;
  }
  return result.exit_code;
}
