#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  toric::cli::CommandRequest req;
  try {
    req = toric::cli::parse_args(args);
  } catch (const toric::cli::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "commands: bound | gens | connect | verify | oracle (all take --a v1,v2,...)\n";
    return 2;
  }

  const toric::cli::RunOutcome outcome = toric::cli::run(req);
  std::cout << outcome.output;
  if (!req.out_path.empty()) {
    std::ofstream out(req.out_path);
    if (!out) {
      std::cerr << "cannot open " << req.out_path << "\n";
      return 2;
    }
    out << outcome.output;
  }
  return outcome.exit_code;
}
