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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tabalg/characters.hpp"
#include "tabalg/chebyshev.hpp"
#include "tabalg/checks.hpp"
#include "tabalg/cli.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/spectral.hpp"
#include "tabalg/tridiag.hpp"

namespace py = pybind11;
using namespace tabalg;

namespace {

py::list krein_nested(const KreinTensor& t) {
  py::list out;
  for (std::size_t i = 0; i < t.n; ++i) {
    py::list row;
    for (std::size_t j = 0; j < t.n; ++j) {
      py::list col;
      for (std::size_t w = 0; w < t.n; ++w) col.append(t(i, j, w));
      row.append(col);
    }
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eigenvalues, characters and Krein parameters of P-polynomial table algebras";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NonSimilarizable>(m, "NonSimilarizable", error);
  py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", error);
  py::register_exception<NonPositiveB>(m, "NonPositiveB", error);
  py::register_exception<InvalidParams>(m, "InvalidParams", error);
  py::register_exception<RootCountMismatch>(m, "RootCountMismatch", error);
  py::register_exception<NotARoot>(m, "NotARoot", error);
  py::register_exception<DegenerateColumn>(m, "DegenerateColumn", error);

  // tridiag
  py::class_<Tridiagonal>(m, "Tridiagonal")
      .def(py::init<std::vector<double>, std::vector<double>, std::vector<double>>(),
           py::arg("diag"), py::arg("sub"), py::arg("sup"))
      .def_static("toeplitz", &Tridiagonal::toeplitz, py::arg("diag"), py::arg("sub"),
                  py::arg("sup"), py::arg("n"))
      .def_property_readonly("size", &Tridiagonal::size)
      .def_property_readonly("diag", &Tridiagonal::diag)
      .def_property_readonly("sub", &Tridiagonal::sub)
      .def_property_readonly("sup", &Tridiagonal::sup)
      .def("__getitem__",
           [](const Tridiagonal& t, std::pair<std::size_t, std::size_t> rc) {
             return t(rc.first, rc.second);
           })
      .def("multiply", [](const Tridiagonal& t, const std::vector<double>& v) {
        return t.multiply(v);
      })
      .def("similarizable", &Tridiagonal::similarizable);

  m.def("det_recursive", &det_recursive);
  m.def("charpoly_eval", &charpoly_eval, py::arg("m"), py::arg("x"));
  m.def("sturm_count", [](const Tridiagonal& t, double x) { return sturm_count(symmetrize(t), x); },
        py::arg("m"), py::arg("x"));
  m.def("eigenvalues_oracle",
        py::overload_cast<const Tridiagonal&, double>(&eigenvalues_oracle), py::arg("m"),
        py::arg("tol") = kDefaultEigenTolerance);

  // chebyshev
  m.def("cheb_u", &cheb_u, py::arg("n"), py::arg("x"));
  m.def("cheb_t", &cheb_t, py::arg("n"), py::arg("x"));
  m.def("charpoly_toeplitz_tridiag", &charpoly_toeplitz_tridiag, py::arg("a"), py::arg("b"),
        py::arg("n"), py::arg("x"));

  // spectral
  py::class_<TableAlgebraParams>(m, "TableAlgebraParams")
      .def(py::init([](int d, double k, std::optional<double> alpha) {
             return TableAlgebraParams::create(d, k, alpha);
           }),
           py::arg("d"), py::arg("k"), py::arg("alpha") = py::none())
      .def_property_readonly("d", &TableAlgebraParams::d)
      .def_property_readonly("k", &TableAlgebraParams::k)
      .def_property_readonly("alpha", &TableAlgebraParams::alpha)
      .def_property_readonly("order", &TableAlgebraParams::order)
      .def("__repr__", [](const TableAlgebraParams& p) {
        return py::str("TableAlgebraParams(d={}, k={}, alpha={})").format(p.d(), p.k(), p.alpha());
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("thetas", &Spectrum::thetas)
      .def_readonly("lambdas", &Spectrum::lambdas)
      .def_property_readonly("method",
                             [](const Spectrum& s) { return std::string(to_string(s.method)); });

  m.def("build_b1", &build_b1, py::arg("params"));
  m.def("eq7_residual", [](const TableAlgebraParams& p, double theta) { return eq7_residual(theta, p); },
        py::arg("params"), py::arg("theta"));
  m.def("find_spectrum", &find_spectrum, py::arg("params"),
        py::arg("grid_density") = kDefaultGridDensity, py::arg("tol") = kDefaultEigenTolerance);
  m.def("oracle_spectrum", &oracle_spectrum, py::arg("params"),
        py::arg("tol") = kDefaultEigenTolerance);
  m.def(
      "eigenvector_from_theta",
      [](const TableAlgebraParams& p, double theta) {
        auto v = eigenvector_from_theta(p, theta);
        return py::make_tuple(v.lambda, v.u);
      },
      py::arg("params"), py::arg("theta"), "Returns (lambda, u).");

  // characters
  py::class_<CharacterTable>(m, "CharacterTable")
      .def_readonly("d", &CharacterTable::d)
      .def_readonly("P", &CharacterTable::P)
      .def_readonly("valencies", &CharacterTable::valencies)
      .def_readonly("order_n", &CharacterTable::order_n);

  m.def(
      "character_table",
      [](const TableAlgebraParams& p, const Spectrum& s, const std::string& method) {
        for (auto c : {CharacterMethod::ClosedForm, CharacterMethod::NuRecursion,
                       CharacterMethod::ThreeTermRecursion}) {
          if (to_string(c) == method) return character_table(p, s, c);
        }
        throw InvalidParams("unknown character method: " + method);
      },
      py::arg("params"), py::arg("spectrum"), py::arg("method") = "closed_form");
  m.def("multiplicities", &multiplicities, py::arg("table"));
  m.def(
      "krein_tensor",
      [](const CharacterTable& ct) { return krein_nested(krein_tensor(ct, multiplicities(ct))); },
      py::arg("table"), "Nested list q[i][j][w].");
  m.def(
      "ngon",
      [](int d, const std::string& parity) {
        if (parity == "odd") return ngon_odd(d).table;
        if (parity == "even") return ngon_even(d).table;
        throw InvalidParams("parity must be 'odd' or 'even'");
      },
      py::arg("d"), py::arg("parity") = "odd");

  // checks
  m.def(
      "verify",
      [](const TableAlgebraParams& p, int grid_density, double tol) {
        py::list out;
        for (const auto& c : verify_params(p, grid_density, tol)) {
          py::dict row;
          row["name"] = c.name;
          row["passed"] = c.passed;
          row["max_residual"] = c.max_residual;
          row["threshold"] = c.threshold;
          out.append(row);
        }
        return out;
      },
      py::arg("params"), py::arg("grid_density") = kDefaultGridDensity,
      py::arg("tol") = kDefaultEigenTolerance);

  // cli
  m.def(
      "run_cli",
      [](const std::string& command, int d, double k, std::optional<double> alpha,
         const std::string& parity, const std::string& format, double tol, int grid_density) {
        auto cmd = cli::parse_command(command);
        if (!cmd) throw InvalidParams("unknown command: " + command);
        cli::RunConfig c;
        c.command = *cmd;
        c.d = d;
        c.k = k;
        c.alpha = alpha;
        c.parity = parity == "even" ? cli::Parity::Even : cli::Parity::Odd;
        c.format = format == "csv" ? cli::Format::Csv : cli::Format::Json;
        c.tol = tol;
        c.grid_density = grid_density;
        cli::RunResult r;
        {
          py::gil_scoped_release release;
          r = cli::run(c);
        }
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("d"), py::arg("k") = 2.0, py::arg("alpha") = py::none(),
      py::arg("parity") = "odd", py::arg("format") = "json",
      py::arg("tol") = kDefaultEigenTolerance, py::arg("grid_density") = kDefaultGridDensity,
      "Runs a CLI command in-process. Returns (exit_code, stdout, stderr).");
}
