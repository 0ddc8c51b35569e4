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

#include "tabalg/characters.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tabalg/chebyshev.hpp"
#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

CharacterTable empty_table(std::size_t n, std::span<const double> lambdas,
                           std::vector<double> valencies) {
  if (lambdas.size() != n || valencies.size() != n) {
    throw std::invalid_argument("character table: spectrum/valency size mismatch");
  }
  CharacterTable ct;
  ct.d = static_cast<int>(n) - 1;
  ct.P.assign(n, std::vector<double>(n, 0.0));
  std::fill(ct.P[0].begin(), ct.P[0].end(), 1.0);
  std::copy(lambdas.begin(), lambdas.end(), ct.P[1].begin());
  ct.order_n = 0.0;
  for (double v : valencies) ct.order_n += v;
  ct.valencies = std::move(valencies);
  return ct;
}

// (x - shift) * a - scale * b, coefficientwise.
Polynomial shifted_product_minus(const Polynomial& a, double shift,
                                 const Polynomial& b, double scale) {
  Polynomial out(a.size() + 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] += a[i];
    out[i] -= shift * a[i];
  }
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= scale * b[i];
  return out;
}

}  // namespace

double poly_eval(const Polynomial& poly, double x) {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string_view to_string(CharacterMethod method) {
  switch (method) {
    case CharacterMethod::ClosedForm: return "closed_form";
    case CharacterMethod::NuRecursion: return "nu_recursion";
    case CharacterMethod::ThreeTermRecursion: return "three_term_recursion";
  }
  return "unknown";
}

std::vector<Polynomial> nu_polys(const TableAlgebraParams& p) {
  const double c = p.band();
  if (!(c > 0.0)) throw InvalidParams("violates k - alpha - 1 > 0");
  const double k = p.k();
  const double alpha = p.alpha();
  const double interior_diag = 2.0 * (alpha + 1.0) - k;

  std::vector<Polynomial> nu;
  nu.reserve(static_cast<std::size_t>(p.d()) + 1);
  nu.push_back({1.0});
  nu.push_back({0.0, 1.0});
  nu.push_back({-k / c, -alpha / c, 1.0 / c});
  for (int i = 3; i <= p.d(); ++i) {
    Polynomial next = shifted_product_minus(nu[i - 1], interior_diag, nu[i - 2], c);
    for (double& coeff : next) coeff /= c;
    nu.push_back(std::move(next));
  }
  return nu;
}

double cheb_u_extended(int n, double x) {
  if (n >= 0) return cheb_u(n, x);
  if (n == -1) return 0.0;
  return -cheb_u(-n - 2, x);
}

double character_closed_form(const TableAlgebraParams& p, int i, double lambda) {
  if (p.d() < 5) throw InvalidParams("closed-form characters require d >= 5");
  if (i < 2 || i > p.d()) {
    throw std::out_of_range("character_closed_form: i must lie in [2, d]");
  }
  // Past row 2 the recursion reads nu_i = 2y nu_{i-1} - nu_{i-2} with
  // y = (lambda - (k-2)/2) / (2c), c = (k+2)/4, so
  //   nu_i = nu_2 U_{i-2}(y) - nu_1 U_{i-3}(y),
  // and y = cos(theta) on the spectrum.
  const double k = p.k();
  const double c = 0.25 * (k + 2.0);
  const double y = (2.0 * lambda - k + 2.0) / (k + 2.0);
  const double nu2 = (lambda * lambda - 0.25 * (3.0 * k - 6.0) * lambda - k) / c;
  return nu2 * cheb_u_extended(i - 2, y) - lambda * cheb_u_extended(i - 3, y);
}

std::vector<double> homogeneous_valencies(const TableAlgebraParams& p) {
  std::vector<double> v(static_cast<std::size_t>(p.d()) + 1, p.k());
  v[0] = 1.0;
  return v;
}

CharacterTable character_table_three_term(const Tridiagonal& b1,
                                          std::span<const double> lambdas,
                                          std::vector<double> valencies) {
  const std::size_t n = b1.size();
  CharacterTable ct = empty_table(n, lambdas, std::move(valencies));
  const auto& a = b1.diag();
  const auto& b = b1.sub();
  const auto& c = b1.sup();
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = lambdas[j];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      ct.P[i + 1][j] = ((lambda - a[i]) * ct.P[i][j] - b[i - 1] * ct.P[i - 1][j]) / c[i];
    }
  }
  return ct;
}

CharacterTable character_table(const TableAlgebraParams& p, const Spectrum& s,
                               CharacterMethod method) {
  const auto n = static_cast<std::size_t>(p.d()) + 1;
  if (s.lambdas.size() != n) {
    throw std::invalid_argument("character_table: spectrum must have d + 1 eigenvalues");
  }
  switch (method) {
    case CharacterMethod::ThreeTermRecursion:
      return character_table_three_term(build_b1(p), s.lambdas, homogeneous_valencies(p));
    case CharacterMethod::NuRecursion: {
      CharacterTable ct = empty_table(n, s.lambdas, homogeneous_valencies(p));
      const auto nu = nu_polys(p);
      for (std::size_t i = 2; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ct.P[i][j] = poly_eval(nu[i], s.lambdas[j]);
      }
      return ct;
    }
    case CharacterMethod::ClosedForm: {
      if (p.d() < 5) throw InvalidParams("closed-form characters require d >= 5");
      CharacterTable ct = empty_table(n, s.lambdas, homogeneous_valencies(p));
      for (std::size_t i = 2; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ct.P[i][j] = character_closed_form(p, static_cast<int>(i), s.lambdas[j]);
        }
      }
      return ct;
    }
  }
  throw std::invalid_argument("character_table: unknown method");
}

std::vector<double> multiplicities(const CharacterTable& ct) {
  const std::size_t n = ct.P.size();
  std::vector<double> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) denom += ct.P[i][j] * ct.P[i][j] / ct.valencies[i];
    if (!(denom > 0.0)) {
      std::ostringstream os;
      os << "column " << j << " has non-positive norm " << denom;
      throw DegenerateColumn(os.str());
    }
    m[j] = ct.order_n / denom;
  }
  return m;
}

KreinTensor krein_tensor(const CharacterTable& ct, std::span<const double> m) {
  const std::size_t n = ct.P.size();
  if (m.size() != n) throw std::invalid_argument("krein_tensor: multiplicity size mismatch");
  KreinTensor kt;
  kt.n = n;
  kt.q.assign(n * n * n, 0.0);
  kt.multiplicities.assign(m.begin(), m.end());
  std::vector<double> inv_k2(n);
  for (std::size_t l = 0; l < n; ++l) inv_k2[l] = 1.0 / (ct.valencies[l] * ct.valencies[l]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double front = m[i] * m[j] / ct.order_n;
      for (std::size_t w = 0; w < n; ++w) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
          acc += ct.P[l][i] * ct.P[l][j] * ct.P[l][w] * inv_k2[l];
        }
        kt(i, j, w) = front * acc;
        kt(j, i, w) = front * acc;
      }
    }
  }
  return kt;
}

OddNgon ngon_odd(int d) {
  if (d < 5) throw InvalidParams("ngon_odd requires d >= 5");
  auto params = TableAlgebraParams::create(d, 2.0);
  auto spectrum = find_spectrum(params);
  auto table = character_table(params, spectrum, CharacterMethod::ClosedForm);
  const auto check = character_table(params, spectrum, CharacterMethod::ThreeTermRecursion);
  for (std::size_t i = 0; i < table.P.size(); ++i) {
    for (std::size_t j = 0; j < table.P.size(); ++j) {
      if (std::abs(table.P[i][j] - check.P[i][j]) > 1e-7) {
        throw std::logic_error("ngon_odd: closed form disagrees with three-term recursion");
      }
    }
  }
  return OddNgon{params, std::move(spectrum), std::move(table)};
}

Tridiagonal build_b1_even_ngon(int d) {
  if (d < 3) throw InvalidParams("ngon_even requires d >= 3");
  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<double> sub(n - 1, 1.0);
  std::vector<double> sup(n - 1, 1.0);
  sub.front() = 2.0;
  sup.back() = 2.0;
  return Tridiagonal(std::vector<double>(n, 0.0), std::move(sub), std::move(sup));
}

EvenNgon ngon_even(int d) {
  auto b1 = build_b1_even_ngon(d);
  const auto ascending = eigenvalues_oracle(b1);
  Spectrum s;
  s.method = SpectrumMethod::Oracle;
  s.lambdas.assign(ascending.rbegin(), ascending.rend());
  for (double lambda : s.lambdas) s.thetas.push_back(theta_from_lambda(lambda, 2.0));

  std::vector<double> valencies(b1.size(), 2.0);
  valencies.front() = 1.0;
  valencies.back() = 1.0;
  auto table = character_table_three_term(b1, s.lambdas, std::move(valencies));
  return EvenNgon{std::move(b1), std::move(s), std::move(table)};
}

}  // namespace tabalg
