// Copyright 2026 The matfunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace matfunc::cli;

  CLI::App app{"Prepare f(A)|b> by contour quadrature on an exact statevector simulator"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat 'key = value' file; command-line flags take precedence");
  app.allow_config_extras(false);

  ExperimentConfig cfg;
  std::uint64_t seed = 0;
  app.add_option("--matrix", cfg.matrix_path, "Matrix Market file for A");
  app.add_option("--rhs", cfg.rhs_path, "Vector file for b (default e_0)");
  app.add_option("--function", cfg.function, "exp|cos|sin|geometric|poly|custom")
      ->capture_default_str();
  app.add_option("--radius", cfg.radius, "Disk radius R (default 2)");
  app.add_option("--pole", cfg.pole, "Pole s of the geometric function");
  app.add_option("--coeffs", cfg.coeffs_path, "Coefficient file for poly/custom");
  app.add_option("--beta", cfg.beta, "Contour radius (default sqrt(R))");
  app.add_option("--epsilon", cfg.epsilon, "Target accuracy (default 0.1)");
  app.add_option("--nodes", cfg.nodes, "Quadrature nodes M (with --order and --hhl-error)");
  app.add_option("--order", cfg.order, "Series truncation L");
  app.add_option("--hhl-error", cfg.hhl_error, "Injected linear-solver error eps'");
  app.add_option("--seed", seed, "Seed for error injection and random instances")
      ->capture_default_str();
  app.add_flag("--normalize", cfg.normalize, "Rescale A to spectral norm 1");
  app.add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  app.add_option("--trials", cfg.trials, "Also sample this many measurements (run)");

  auto* run = app.add_subcommand("run", "Run the algorithm once and print a JSON report");
  auto* sweep = app.add_subcommand("sweep", "Run a list of targets or node counts; CSV out");
  std::vector<double> eps_list;
  std::vector<std::size_t> nodes_list;
  sweep->add_option("--eps-list", eps_list, "Comma-separated epsilons")->delimiter(',');
  sweep->add_option("--nodes-list", nodes_list, "Comma-separated node counts")
      ->delimiter(',');
  auto* verify = app.add_subcommand("verify", "Check every invariant on seeded instances");
  std::string only;
  verify->add_option("--only", only, "Restrict to a module or one invariant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  cfg.seed = seed;

  if (run->parsed()) return cmd_run(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(cfg, eps_list, nodes_list, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(seed, only, cfg.out_path, std::cout, std::cerr);
  return kExitUsage;
}
