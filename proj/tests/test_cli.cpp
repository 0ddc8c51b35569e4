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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tabalg/cli.hpp"

using namespace tabalg::cli;
using nlohmann::json;

namespace {

RunConfig config(Command command, int d, double k) {
  RunConfig c;
  c.command = command;
  c.d = d;
  c.k = k;
  return c;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("chars emits the odd polygon table") {
  const auto r = run(config(Command::Chars, 5, 2.0));
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.err.empty());
  const auto j = json::parse(r.out);
  for (const char* key : {"d", "k", "alpha", "lambdas", "thetas", "P", "valencies", "order_n"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["method"] == "closed_form");
  CHECK(j["order_n"].get<double>() == 11.0);
  const auto row1 = j["P"][1].get<std::vector<double>>();
  REQUIRE(row1.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(row1[i] - 2.0 * std::cos(2.0 * i * std::numbers::pi / 11.0)) <= 1e-9);
  }
}

TEST_CASE("verify passes for d = 6, k = 4") {
  const auto r = run(config(Command::Verify, 6, 4.0));
  CHECK(r.exit_code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["passed"].get<bool>());
  for (const auto& check : j["checks"]) {
    CHECK(check["passed"].get<bool>());
    CHECK(check["max_residual"].get<double>() < 1e-7);
  }
  // Informational only; this table algebra violates the Krein condition.
  CHECK(j["krein_condition_min"].get<double>() < 0.0);
}

TEST_CASE("verify covers small d through the oracle") {
  auto c = config(Command::Verify, 3, 5.0);
  c.alpha = 2.0;
  const auto r = run(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(json::parse(r.out)["passed"].get<bool>());
}

TEST_CASE("invalid alpha maps to exit code 2 with a structured error") {
  auto c = config(Command::Chars, 5, 4.0);
  c.alpha = 1.0;
  const auto r = run(c);
  CHECK(r.exit_code == kExitInvalidParams);
  CHECK(r.out.empty());
  const auto e = json::parse(r.err);
  CHECK(e["error"] == "InvalidParams");
  CHECK(e["message"].get<std::string>().find("(3k - 6)/4") != std::string::npos);
}

TEST_CASE("config validation") {
  auto c = config(Command::Spectrum, 5, 2.0);
  c.tol = 0.0;
  CHECK(run(c).exit_code == kExitInvalidParams);
  c.tol = 1e-12;
  c.grid_density = 7;
  CHECK(run(c).exit_code == kExitInvalidParams);
  auto g = config(Command::Ngon, 4, 2.0);
  CHECK(run(g).exit_code == kExitInvalidParams);
  g.parity = Parity::Even;
  CHECK(run(g).exit_code == kExitOk);
}

TEST_CASE("root count mismatch falls back to the oracle with exit code 3") {
  // For very large k one interior root crowds against pi and a coarse scan
  // loses it.
  auto c = config(Command::Chars, 5, 1000.0);
  c.grid_density = 8;
  const auto r = run(c);
  CHECK(r.exit_code == kExitRootCountMismatch);
  const auto e = json::parse(r.err);
  CHECK(e["error"] == "RootCountMismatch");
  CHECK(e["expected"].get<int>() == 5);
  const auto j = json::parse(r.out);
  CHECK(j["method"] == "oracle");
  CHECK(j["character_method"] == "three_term_recursion");
  CHECK(j["lambdas"].size() == 6);
}

TEST_CASE("krein and ngon reports") {
  const auto k = json::parse(run(config(Command::Krein, 6, 3.0)).out);
  CHECK(k["multiplicities"].size() == 7);
  CHECK(k["krein"].size() == 7);
  CHECK(k["krein"][0][0].size() == 7);

  auto odd = config(Command::Ngon, 5, 2.0);
  const auto jo = json::parse(run(odd).out);
  CHECK(jo["parity"] == "odd");
  CHECK(jo["n"] == 11);
  for (double m : jo["multiplicities"].get<std::vector<double>>()) CHECK(m == doctest::Approx(m < 1.5 ? 1.0 : 2.0));

  odd.parity = Parity::Even;
  const auto je = json::parse(run(odd).out);
  CHECK(je["parity"] == "even");
  CHECK(je["n"] == 10);
  CHECK(je["b1"]["sup"].back() == 2.0);
  CHECK(je["valencies"].back() == 1.0);
}

TEST_CASE("property: JSON output round-trips") {
  for (auto command : {Command::Chars, Command::Spectrum, Command::Krein, Command::Verify, Command::Ngon}) {
    for (int d : {5, 7}) {
      const auto r = run(config(command, d, 2.0));
      REQUIRE(r.exit_code == kExitOk);
      const auto parsed = json::parse(r.out);
      CHECK(parsed.dump(2) + "\n" == r.out);
      CHECK(json::parse(parsed.dump()) == parsed);
    }
  }
}

TEST_CASE("property: CSV and JSON carry identical numbers") {
  for (double k : {2.0, 3.0, 4.5}) {
    auto c = config(Command::Chars, 6, k);
    const auto j = json::parse(run(c).out);
    c.format = Format::Csv;
    const auto rows = csv_rows(run(c).out);
    REQUIRE(rows.front() == std::vector<std::string>{"i", "j", "value"});
    REQUIRE(rows.size() == 1 + 49);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto i = std::stoul(rows[r][0]);
      const auto jj = std::stoul(rows[r][1]);
      CHECK(std::strtod(rows[r][2].c_str(), nullptr) == j["P"][i][jj].get<double>());
    }

    auto kc = config(Command::Krein, 5, k);
    const auto kj = json::parse(run(kc).out);
    kc.format = Format::Csv;
    const auto krows = csv_rows(run(kc).out);
    REQUIRE(krows.front() == std::vector<std::string>{"i", "j", "w", "value"});
    REQUIRE(krows.size() == 1 + 216);
    for (std::size_t r = 1; r < krows.size(); ++r) {
      const auto i = std::stoul(krows[r][0]);
      const auto jj = std::stoul(krows[r][1]);
      const auto w = std::stoul(krows[r][2]);
      CHECK(std::strtod(krows[r][3].c_str(), nullptr) == kj["krein"][i][jj][w].get<double>());
    }
  }
}

TEST_CASE("property: identical configs give byte-identical output") {
  auto c = config(Command::Krein, 8, 6.0);
  CHECK(run(c).out == run(c).out);
  c.sweep = std::make_pair(5, 9);
  const auto a = run(c);
  const auto b = run(c);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == kExitOk);
}

TEST_CASE("sweep output is ordered by d and matches single runs") {
  auto c = config(Command::Spectrum, 5, 3.0);
  c.sweep = std::make_pair(5, 10);
  const auto j = json::parse(run(c).out);
  REQUIRE(j["sweep"].size() == 6);
  for (int d = 5; d <= 10; ++d) {
    const auto& entry = j["sweep"][d - 5];
    CHECK(entry["d"] == d);
    CHECK(entry == json::parse(run(config(Command::Spectrum, d, 3.0)).out));
  }
  c.format = Format::Csv;
  const auto rows = csv_rows(run(c).out);
  CHECK(rows.front() == std::vector<std::string>{"d", "j", "theta", "lambda"});
  CHECK(rows[1][0] == "5");
  CHECK(rows.back()[0] == "10");
}

TEST_CASE("parse helpers") {
  CHECK(parse_sweep("5..9") == std::make_pair(5, 9));
  CHECK_FALSE(parse_sweep("5-9"));
  CHECK_FALSE(parse_sweep("a..9"));
  CHECK(parse_command("verify") == Command::Verify);
  CHECK_FALSE(parse_command("bogus"));
}
