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

#include "tabalg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tabalg/characters.hpp"
#include "tabalg/checks.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/spectral.hpp"

namespace tabalg::cli {

namespace {

using json = nlohmann::json;

struct PointResult {
  int exit_code = kExitOk;
  json report;
  std::vector<json> diagnostics;
};

json error_record(std::string_view kind, std::string_view message) {
  return json{{"error", kind}, {"message", message}};
}

std::string format_number(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

json params_json(const TableAlgebraParams& p) {
  return json{{"d", p.d()}, {"k", p.k()}, {"alpha", p.alpha()}};
}

// Closed form where it applies, oracle otherwise or on RootCountMismatch.
Spectrum spectrum_with_fallback(const TableAlgebraParams& p, const RunConfig& c,
                                PointResult& result) {
  if (p.d() < 5) return oracle_spectrum(p, c.tol);
  try {
    return find_spectrum(p, c.grid_density, c.tol);
  } catch (const RootCountMismatch& e) {
    result.exit_code = kExitRootCountMismatch;
    auto record = error_record(e.kind(), e.what());
    record["found"] = e.found();
    record["expected"] = e.expected();
    record["fallback"] = "oracle";
    result.diagnostics.push_back(std::move(record));
    return oracle_spectrum(p, c.tol);
  }
}

CharacterMethod method_for(const TableAlgebraParams& p, const Spectrum& s) {
  return s.method == SpectrumMethod::ClosedForm && p.d() >= 5
             ? CharacterMethod::ClosedForm
             : CharacterMethod::ThreeTermRecursion;
}

void put_spectrum(json& j, const Spectrum& s) {
  j["method"] = to_string(s.method);
  j["lambdas"] = s.lambdas;
  j["thetas"] = s.thetas;
}

void put_table(json& j, const CharacterTable& ct) {
  j["P"] = ct.P;
  j["valencies"] = ct.valencies;
  j["order_n"] = ct.order_n;
}

json krein_json(const KreinTensor& kt) {
  json q = json::array();
  for (std::size_t i = 0; i < kt.n; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < kt.n; ++j) {
      std::vector<double> row(kt.n);
      for (std::size_t w = 0; w < kt.n; ++w) row[w] = kt(i, j, w);
      plane.push_back(std::move(row));
    }
    q.push_back(std::move(plane));
  }
  return q;
}

void put_krein(json& j, const CharacterTable& ct) {
  const auto m = multiplicities(ct);
  const auto kt = krein_tensor(ct, m);
  j["multiplicities"] = m;
  j["krein"] = krein_json(kt);
}

void run_homogeneous(const RunConfig& c, int d, PointResult& result) {
  const auto p = TableAlgebraParams::create(d, c.k, c.alpha);
  json& out = result.report;
  out = params_json(p);
  if (c.command == Command::Verify) {
    const auto checks = verify_params(p, c.grid_density, c.tol);
    json list = json::array();
    bool all = true;
    for (const auto& check : checks) {
      all = all && check.passed;
      list.push_back({{"name", check.name},
                      {"passed", check.passed},
                      {"max_residual", check.max_residual},
                      {"threshold", check.threshold}});
    }
    out["checks"] = std::move(list);
    out["passed"] = all;
    // Informational: table algebras need not satisfy the Krein condition.
    const auto table = character_table(p, oracle_spectrum(p, c.tol),
                                       CharacterMethod::ThreeTermRecursion);
    const auto kt = krein_tensor(table, multiplicities(table));
    out["krein_condition_min"] = *std::min_element(kt.q.begin(), kt.q.end());
    if (!all) result.exit_code = kExitVerificationFailed;
    return;
  }

  const Spectrum s = spectrum_with_fallback(p, c, result);
  put_spectrum(out, s);
  if (c.command == Command::Spectrum) return;
  const auto ct = character_table(p, s, method_for(p, s));
  out["character_method"] = to_string(method_for(p, s));
  if (c.command == Command::Chars) {
    put_table(out, ct);
    return;
  }
  out["order_n"] = ct.order_n;
  put_krein(out, ct);
}

void run_ngon(const RunConfig& c, int d, PointResult& result) {
  json& out = result.report;
  if (c.parity == Parity::Odd) {
    const auto g = ngon_odd(d);
    out = params_json(g.params);
    out["parity"] = "odd";
    out["n"] = 2 * d + 1;
    put_spectrum(out, g.spectrum);
    out["character_method"] = to_string(CharacterMethod::ClosedForm);
    put_table(out, g.table);
    put_krein(out, g.table);
  } else {
    const auto g = ngon_even(d);
    out = json{{"d", d}, {"k", 2.0}};
    out["parity"] = "even";
    out["n"] = 2 * d;
    out["b1"] = {{"diag", g.b1.diag()}, {"sub", g.b1.sub()}, {"sup", g.b1.sup()}};
    put_spectrum(out, g.spectrum);
    out["character_method"] = to_string(CharacterMethod::ThreeTermRecursion);
    put_table(out, g.table);
    put_krein(out, g.table);
  }
}

void validate_config(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw InvalidParams("tol must be positive");
  if (c.grid_density < 8) throw InvalidParams("grid_density must be at least 8");
  if (c.sweep && c.sweep->first > c.sweep->second) {
    throw InvalidParams("sweep range must satisfy d_min <= d_max");
  }
  if (c.command == Command::Ngon && c.alpha) {
    throw InvalidParams("alpha is fixed for the n-gon schemes");
  }
}

PointResult evaluate(const RunConfig& c, int d) {
  PointResult result;
  try {
    if (c.command == Command::Ngon) {
      run_ngon(c, d, result);
    } else {
      run_homogeneous(c, d, result);
    }
  } catch (const InvalidParams& e) {
    result.exit_code = kExitInvalidParams;
    result.report = nullptr;
    result.diagnostics.push_back(error_record(e.kind(), e.what()));
  } catch (const Error& e) {
    result.exit_code = kExitError;
    result.report = nullptr;
    result.diagnostics.push_back(error_record(e.kind(), e.what()));
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    result.report = nullptr;
    result.diagnostics.push_back(error_record("InternalError", e.what()));
  }
  return result;
}

// CSV rendering of one report; `prefix` prepends the sweep column.
void render_csv(const RunConfig& c, const json& r, const std::string& prefix,
                bool header, std::ostringstream& os) {
  const std::string head = prefix.empty() ? "" : "d,";
  if (r.is_null()) return;
  if (c.command == Command::Verify) {
    if (header) os << head << "check,passed,max_residual,threshold\n";
    for (const auto& check : r["checks"]) {
      os << prefix << check["name"].get<std::string>() << ','
         << (check["passed"].get<bool>() ? "true" : "false") << ','
         << format_number(check["max_residual"].get<double>()) << ','
         << format_number(check["threshold"].get<double>()) << '\n';
    }
    return;
  }
  if (c.command == Command::Spectrum) {
    if (header) os << head << "j,theta,lambda\n";
    const auto& lambdas = r["lambdas"];
    const auto& thetas = r["thetas"];
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      os << prefix << j << ',' << format_number(thetas[j].get<double>()) << ','
         << format_number(lambdas[j].get<double>()) << '\n';
    }
    return;
  }
  if (c.command == Command::Krein) {
    if (header) os << head << "i,j,w,value\n";
    const auto& q = r["krein"];
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q[i].size(); ++j) {
        for (std::size_t w = 0; w < q[i][j].size(); ++w) {
          os << prefix << i << ',' << j << ',' << w << ','
             << format_number(q[i][j][w].get<double>()) << '\n';
        }
      }
    }
    return;
  }
  if (header) os << head << "i,j,value\n";
  const auto& P = r["P"];
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P[i].size(); ++j) {
      os << prefix << i << ',' << j << ',' << format_number(P[i][j].get<double>()) << '\n';
    }
  }
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "chars") return Command::Chars;
  if (name == "spectrum") return Command::Spectrum;
  if (name == "krein") return Command::Krein;
  if (name == "ngon") return Command::Ngon;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

std::optional<std::pair<int, int>> parse_sweep(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  int lo = 0;
  int hi = 0;
  const auto left = text.substr(0, dots);
  const auto right = text.substr(dots + 2);
  auto r1 = std::from_chars(left.data(), left.data() + left.size(), lo);
  auto r2 = std::from_chars(right.data(), right.data() + right.size(), hi);
  if (r1.ec != std::errc() || r1.ptr != left.data() + left.size()) return std::nullopt;
  if (r2.ec != std::errc() || r2.ptr != right.data() + right.size()) return std::nullopt;
  return std::make_pair(lo, hi);
}

RunResult run(const RunConfig& config) {
  RunResult out;
  try {
    validate_config(config);
  } catch (const InvalidParams& e) {
    out.exit_code = kExitInvalidParams;
    out.err = error_record(e.kind(), e.what()).dump() + "\n";
    return out;
  }

  std::vector<int> ds;
  if (config.sweep) {
    for (int d = config.sweep->first; d <= config.sweep->second; ++d) ds.push_back(d);
  } else {
    ds.push_back(config.d);
  }

  std::vector<PointResult> results;
  if (ds.size() == 1) {
    results.push_back(evaluate(config, ds.front()));
  } else {
    std::vector<std::future<PointResult>> futures;
    futures.reserve(ds.size());
    for (int d : ds) {
      futures.push_back(std::async(std::launch::async, [&config, d] { return evaluate(config, d); }));
    }
    for (auto& f : futures) results.push_back(f.get());
  }

  std::ostringstream err;
  for (const auto& r : results) {
    out.exit_code = std::max(out.exit_code, r.exit_code);
    for (const auto& diag : r.diagnostics) err << diag.dump() << '\n';
  }
  out.err = err.str();

  std::ostringstream os;
  if (config.format == Format::Json) {
    if (config.sweep) {
      json list = json::array();
      for (auto& r : results) list.push_back(r.report);
      os << json{{"sweep", std::move(list)}}.dump(2) << '\n';
    } else if (!results.front().report.is_null()) {
      os << results.front().report.dump(2) << '\n';
    }
  } else {
    bool header = true;
    for (std::size_t idx = 0; idx < results.size(); ++idx) {
      const std::string prefix = config.sweep ? std::to_string(ds[idx]) + "," : "";
      if (results[idx].report.is_null()) continue;
      render_csv(config, results[idx].report, prefix, header, os);
      header = false;
    }
  }
  out.out = os.str();
  return out;
}

}  // namespace tabalg::cli
