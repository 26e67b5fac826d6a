// eulerclass: order of the Euler class of split crystallographic groups.
//
//   eulerclass analyze <file> --char <p> [--json] [--cap N]
//   eulerclass catalog [name] [--char p] [--json]
//   eulerclass selftest

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eulerclass/commands.hpp"

int main(int argc, char** argv) {
  using namespace eulerclass;

  CLI::App app{"Decide finiteness and compute the order of the Euler class of Z^n x| G"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a group file");
  std::string path, characteristic;
  bool json = false;
  std::size_t cap = kDefaultClosureCap;
  analyze->add_option("file", path, "GroupFile (JSON) describing rank and generators")->required();
  analyze->add_option("--char", characteristic, "Field characteristic: 0 or a prime")->required();
  analyze->add_flag("--json", json, "Machine-readable output");
  analyze->add_option("--cap", cap, "Closure cap (maximum point-group order)")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "List the built-in wallpaper groups or analyze one of them");
  std::optional<std::string> name, catalog_char;
  bool catalog_json = false;
  catalog->add_option("name", name, "Crystallographic symbol, e.g. p4m");
  catalog->add_option("--char", catalog_char, "Field characteristic: 0 or a prime");
  catalog->add_flag("--json", catalog_json, "Machine-readable output");

  auto* selftest = app.add_subcommand("selftest", "Run the catalog regression and identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return cli::kInputError;
  }

  if (*analyze) return cli::cmd_analyze(path, characteristic, json, cap, std::cout, std::cerr);
  if (*catalog) return cli::cmd_catalog(name, catalog_char, catalog_json, std::cout, std::cerr);
  if (*selftest) return cli::cmd_selftest(std::cout, std::cerr);
  return cli::kInputError;
}
