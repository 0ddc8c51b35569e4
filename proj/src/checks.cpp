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

#include "tabalg/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tabalg {

CheckResult make_check(std::string name, double max_residual, double threshold) {
  return CheckResult{std::move(name), max_residual <= threshold, max_residual, threshold};
}

double max_abs_diff(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("max_abs_diff: shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

double character_eigen_residual(const Tridiagonal& b1, const CharacterTable& ct) {
  const std::size_t n = b1.size();
  double worst = 0.0;
  std::vector<double> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = ct.P[i][j];
      norm = std::max(norm, std::abs(column[i]));
    }
    const auto image = b1.multiply(column);
    const double lambda = ct.P[1][j];
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(image[i] - lambda * column[i]) / norm);
    }
  }
  return worst;
}

double orthogonality_residual(const CharacterTable& ct, std::span<const double> m) {
  const std::size_t n = ct.P.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m[j] * ct.P[i][j] * ct.P[l][j];
      const double scale = ct.order_n * ct.valencies[i];
      const double expected = i == l ? scale : 0.0;
      worst = std::max(worst, std::abs(acc - expected) / scale);
    }
  }
  return worst;
}

std::vector<CheckResult> verify_params(const TableAlgebraParams& p,
                                       int grid_density, double tol) {
  std::vector<CheckResult> checks;
  const auto b1 = build_b1(p);
  const Spectrum oracle = oracle_spectrum(p, tol);
  const CharacterTable reference =
      character_table(p, oracle, CharacterMethod::ThreeTermRecursion);

  if (p.d() >= 5) {
    const Spectrum closed = find_spectrum(p, grid_density, tol);
    double spectrum_gap = 0.0;
    for (std::size_t j = 0; j < closed.lambdas.size(); ++j) {
      spectrum_gap = std::max(spectrum_gap, std::abs(closed.lambdas[j] - oracle.lambdas[j]));
    }
    checks.push_back(make_check("oracle_agreement", spectrum_gap, 1e-8));

    const auto three = character_table(p, closed, CharacterMethod::ThreeTermRecursion);
    const auto nu = character_table(p, closed, CharacterMethod::NuRecursion);
    const auto cf = character_table(p, closed, CharacterMethod::ClosedForm);
    checks.push_back(make_check("method_agreement",
                                std::max(max_abs_diff(cf.P, three.P), max_abs_diff(nu.P, three.P)),
                                1e-7));

    double eigvec = 0.0;
    for (std::size_t j = 1; j < closed.thetas.size(); ++j) {
      const auto coeffs = eigenvector_from_theta(p, closed.thetas[j]);
      const auto image = b1.multiply(coeffs.u);
      double norm = 0.0;
      double res = 0.0;
      for (std::size_t i = 0; i < image.size(); ++i) {
        norm = std::max(norm, std::abs(coeffs.u[i]));
        res = std::max(res, std::abs(image[i] - coeffs.lambda * coeffs.u[i]));
      }
      eigvec = std::max(eigvec, res / norm);
    }
    checks.push_back(make_check("eigenvector_residual", eigvec, 1e-8));
  } else {
    const auto nu = character_table(p, oracle, CharacterMethod::NuRecursion);
    checks.push_back(make_check("method_agreement", max_abs_diff(nu.P, reference.P), 1e-7));
  }

  checks.push_back(
      make_check("character_eigen_residual", character_eigen_residual(b1, reference), 1e-8));

  const auto m = multiplicities(reference);
  checks.push_back(make_check("orthogonality", orthogonality_residual(reference, m), 1e-6));

  double msum = 0.0;
  for (double v : m) msum += v;
  checks.push_back(make_check("multiplicity_sum", std::abs(msum - reference.order_n), 1e-9));

  const auto kt = krein_tensor(reference, m);
  double symmetry = 0.0;
  double identities = 0.0;
  for (std::size_t i = 0; i < kt.n; ++i) {
    for (std::size_t j = 0; j < kt.n; ++j) {
      for (std::size_t w = 0; w < kt.n; ++w) {
        symmetry = std::max(symmetry, std::abs(kt(i, j, w) - kt(j, i, w)));
      }
      // q_{0j}^w = delta_{jw} and q_{ij}^0 = m_i delta_{ij}.
      identities = std::max(identities, std::abs(kt(0, i, j) - (i == j ? 1.0 : 0.0)));
      identities = std::max(identities,
                            std::abs(kt(i, j, 0) - (i == j ? m[i] : 0.0)) / std::max(1.0, m[i]));
    }
  }
  checks.push_back(make_check("krein_symmetry", symmetry, 1e-9));
  checks.push_back(make_check("krein_identities", identities, 1e-9));
  return checks;
}

}  // namespace tabalg
