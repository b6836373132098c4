#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "henson/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Henson graph workbench: computable presentation, partition "
               "witness search, adversarial coloring, trace verification"};
  app.require_subcommand(1);

  int n = 3, m = 0, k = 1, max_vertices = 8;
  std::string format = "graph6", out_path, config_path, trace_path, coloring_path;

  CLI::App* present = app.add_subcommand("present", "emit a presentation prefix");
  present->add_option("--n", n, "forbidden clique size (>= 3)")->required();
  present->add_option("--m", m, "number of vertices")->required();
  present->add_option("--format", format, "graph6 or adjlist")
      ->check(CLI::IsMember({"graph6", "adjlist"}));
  present->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* folkman = app.add_subcommand("folkman", "search for a partition witness");
  folkman->add_option("--n", n, "forbidden clique size (>= 3)")->required();
  folkman->add_option("--k", k, "number of partition blocks")->required();
  folkman->add_option("--max-vertices", max_vertices, "search cap");
  folkman->add_option("--out", out_path, "graph6 output file (default stdout)");

  CLI::App* color = app.add_subcommand("color", "run the coloring construction");
  color->add_option("--config", config_path, "roster config file")->required();
  color->add_option("--out", out_path, "output prefix")->required();

  CLI::App* verify = app.add_subcommand("verify", "audit a trace/coloring pair");
  verify->add_option("--config", config_path, "roster config file")->required();
  verify->add_option("--trace", trace_path, "trace file")->required();
  verify->add_option("--coloring", coloring_path, "coloring file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return henson::cli::kExitUsage;
  }

  try {
    if (present->parsed())
      return henson::cli::cmd_present(n, m, format, out_path, std::cout, std::cerr);
    if (folkman->parsed())
      return henson::cli::cmd_folkman(n, k, max_vertices, out_path, std::cout,
                                      std::cerr);
    if (color->parsed())
      return henson::cli::cmd_color(config_path, out_path, std::cout, std::cerr);
    if (verify->parsed())
      return henson::cli::cmd_verify(config_path, trace_path, coloring_path,
                                     std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return henson::cli::kExitUsage;
  }
  return henson::cli::kExitUsage;
}
