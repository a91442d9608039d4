#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fermereo/assembly.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fermereo: fermionic composition calculus and mereology model checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fermereo 0.1.0");

  fermereo::RunConfig config;
  std::string json_path;
  app.add_option("--seed", config.seed, "seed for every random draw")->capture_default_str();
  app.add_option("--epsilon", config.epsilon, "numeric tolerance")->capture_default_str();
  app.add_option("--samples", config.samples, "sampler size")->capture_default_str();
  app.add_option("--json", json_path, "write a JSON report to this path");

  std::string demo_name;
  CLI::App* demo = app.add_subcommand("demo", "run a scripted scenario");
  demo->fallthrough();
  demo->add_option("name", demo_name, "scenario name")
      ->required()
      ->check(CLI::IsMember(
          {"singlet", "xi-square", "distributivity", "no-fusion", "boolean", "union-fix"}));

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "axiom-check an assembly input file");
  check->fallthrough();
  check->add_option("file", check_file, "state document or vector-list JSON")->required();

  std::string algebra_op;
  std::vector<std::string> algebra_files;
  CLI::App* algebra = app.add_subcommand("algebra", "exterior-algebra and lattice utilities");
  algebra->fallthrough();
  algebra->add_option("op", algebra_op, "operation")
      ->required()
      ->check(CLI::IsMember({"wedge", "decompose", "fuse", "meet"}));
  algebra->add_option("files", algebra_files, "input JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.validate();
    if (demo->parsed()) return fermereo::cli::run_demo(demo_name, config, json_path);
    if (check->parsed()) return fermereo::cli::run_check(check_file, config, json_path);
    return fermereo::cli::run_algebra(algebra_op, algebra_files, config, json_path);
  } catch (const fermereo::GmwEntangledError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
