#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

#ifdef CLUSTER_LATTICE_WITH_ACCEPTANCE
#include "criteria.hpp"
#endif

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cluster_lattice::cli::CliHooks hooks;
#ifdef CLUSTER_LATTICE_WITH_ACCEPTANCE
  hooks.verify = [](const cluster_lattice::cli::VerifyRequest& req, std::ostream& out) {
    return cluster_lattice::acceptance::run_all(req.seed, req.json, out);
  };
#endif
  return cluster_lattice::cli::run_cli(args, std::cout, std::cerr, hooks);
}
