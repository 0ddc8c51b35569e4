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

#ifndef TABALG_CHARACTERS_HPP
#define TABALG_CHARACTERS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tabalg/spectral.hpp"
#include "tabalg/tridiag.hpp"

namespace tabalg {

/// Polynomial coefficients in ascending powers.
using Polynomial = std::vector<double>;

double poly_eval(const Polynomial& poly, double x);

enum class CharacterMethod { ClosedForm, NuRecursion, ThreeTermRecursion };

std::string_view to_string(CharacterMethod method);

/// P[i][j] = p_i(j): value of basis element x_i on the j-th primitive
/// idempotent. Column j belongs to lambdas[j] of the spectrum it was built
/// from; column 0 is the valency column.
struct CharacterTable {
  int d = 0;
  std::vector<std::vector<double>> P;
  std::vector<double> valencies;
  double order_n = 0.0;
};

/// Krein parameters q_{ij}^w, stored flat with w fastest.
struct KreinTensor {
  std::size_t n = 0;
  std::vector<double> q;
  std::vector<double> multiplicities;

  double operator()(std::size_t i, std::size_t j, std::size_t w) const {
    return q[(i * n + j) * n + w];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t w) {
    return q[(i * n + j) * n + w];
  }
};

/// nu_0 .. nu_d with x_i = nu_i(x_1).
std::vector<Polynomial> nu_polys(const TableAlgebraParams& p);

/// Chebyshev closed form of p_i at eigenvalue lambda, 2 <= i <= d, d >= 5:
///
///   p_i = nu_2(lambda) U_{i-2}(y) - lambda U_{i-3}(y),
///   y   = (2 lambda - k + 2) / (k + 2)
///
/// For k = 2 this is (lambda^2 - 2) U_{i-2}(lambda/2) - lambda U_{i-3}(lambda/2).
double character_closed_form(const TableAlgebraParams& p, int i, double lambda);

/// U_n with the extension U_{-1} = 0 and U_{-n-2} = -U_n.
double cheb_u_extended(int n, double x);

CharacterTable character_table(const TableAlgebraParams& p, const Spectrum& s,
                               CharacterMethod method);

/// Applies the character homomorphism to x_1 x_i = b_{i-1} x_{i-1} + a_i x_i
/// + c_{i+1} x_{i+1}, reading a, b, c straight from the bands of `b1`. Works
/// for any P-polynomial first intersection matrix.
CharacterTable character_table_three_term(const Tridiagonal& b1,
                                          std::span<const double> lambdas,
                                          std::vector<double> valencies);

std::vector<double> homogeneous_valencies(const TableAlgebraParams& p);

/// m_j = n / sum_i p_i(j)^2 / k_i. Throws DegenerateColumn on a
/// non-positive denominator.
std::vector<double> multiplicities(const CharacterTable& ct);

/// q_{ij}^w = (m_i m_j / n) sum_l p_l(i) p_l(j) p_l(w) / k_l^2.
KreinTensor krein_tensor(const CharacterTable& ct, std::span<const double> m);

/// Scheme of the (2d+1)-gon: homogeneous, k = 2.
struct OddNgon {
  TableAlgebraParams params;
  Spectrum spectrum;
  CharacterTable table;
};

/// d >= 5. Characters by the closed form, cross-checked against the
/// three-term recursion (std::logic_error on disagreement beyond 1e-7).
OddNgon ngon_odd(int d);

/// Scheme of the 2d-gon; not homogeneous (k_d = 1).
struct EvenNgon {
  Tridiagonal b1;
  Spectrum spectrum;
  CharacterTable table;
};

/// First intersection matrix of the 2d-gon scheme.
Tridiagonal build_b1_even_ngon(int d);

/// d >= 3. Spectrum from the oracle, characters by the three-term recursion.
EvenNgon ngon_even(int d);

}  // namespace tabalg

#endif  // TABALG_CHARACTERS_HPP
