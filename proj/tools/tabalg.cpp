// Copyright 2026 The tabalg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: tabalg <chars|spectrum|krein|ngon|verify> [flags]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tabalg/cli.hpp"

namespace {

using tabalg::cli::Command;
using tabalg::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format,
                std::string& output, std::string& sweep, bool homogeneous) {
  sub->add_option("--d", cfg.d, "dimension index d (basis x_0..x_d)");
  if (homogeneous) {
    sub->add_option("--k", cfg.k, "valency k >= 2")->required();
    sub->add_option("--alpha", cfg.alpha, "override alpha (validated)");
  }
  sub->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tol", cfg.tol, "bisection width (default 1e-12, env TABALG_TOL)");
  sub->add_option("--grid-density", cfg.grid_density, "root scan cells per (d+2)");
  sub->add_option("--output", output, "write the report to this path");
  sub->add_option("--sweep", sweep, "evaluate d_min..d_max concurrently");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters, spectra and Krein parameters of homogeneous "
               "monotonic P-polynomial table algebras"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("TABALG_TOL")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << R"({"error":"InvalidParams","message":"TABALG_TOL is not a number"})" << '\n';
      return tabalg::cli::kExitInvalidParams;
    }
  }
  std::string format = "json";
  std::string output;
  std::string sweep;
  std::string parity = "odd";

  auto* chars = app.add_subcommand("chars", "eigenvalues and character table");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of B1 only");
  auto* krein = app.add_subcommand("krein", "multiplicities and Krein tensor");
  auto* ngon = app.add_subcommand("ngon", "the (2d+1)-gon or 2d-gon scheme");
  auto* verify = app.add_subcommand("verify", "cross-validation checks");
  for (auto* sub : {chars, spectrum, krein, verify}) {
    add_common(sub, cfg, format, output, sweep, true);
  }
  add_common(ngon, cfg, format, output, sweep, false);
  ngon->add_option("--parity", parity, "odd (2d+1-gon) or even (2d-gon)")
      ->check(CLI::IsMember({"odd", "even"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tabalg::cli::kExitInvalidParams;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = *tabalg::cli::parse_command(sub->get_name());
    if (sub->count("--d") == 0 && sweep.empty()) {
      std::cerr << R"({"error":"InvalidParams","message":"--d or --sweep is required"})" << '\n';
      return tabalg::cli::kExitInvalidParams;
    }
  }
  cfg.format = format == "csv" ? tabalg::cli::Format::Csv : tabalg::cli::Format::Json;
  cfg.parity = parity == "even" ? tabalg::cli::Parity::Even : tabalg::cli::Parity::Odd;
  if (!output.empty()) cfg.output_path = output;
  if (!sweep.empty()) {
    cfg.sweep = tabalg::cli::parse_sweep(sweep);
    if (!cfg.sweep) {
      std::cerr << R"({"error":"InvalidParams","message":"--sweep expects d_min..d_max"})" << '\n';
      return tabalg::cli::kExitInvalidParams;
    }
  }

  const auto result = tabalg::cli::run(cfg);
  std::cerr << result.err;
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      std::cerr << R"({"error":"IOError","message":"cannot open output path"})" << '\n';
      return tabalg::cli::kExitError;
    }
    file << result.out;
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}
