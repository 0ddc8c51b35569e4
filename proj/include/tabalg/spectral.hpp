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

#ifndef TABALG_SPECTRAL_HPP
#define TABALG_SPECTRAL_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "tabalg/tridiag.hpp"

namespace tabalg {

/// Parameters of a homogeneous monotonic P-polynomial table algebra:
/// dimension index d (basis x_0..x_d), valency k and the free entry alpha
/// of the first intersection matrix.
///
/// Admissible region:
///   d >= 5:  alpha = (3k - 6) / 4
///   d == 4:  (2k - 4) / 3 <= alpha <= (3k - 6) / 4
///   d == 3:  (k - 2) / 2  <= alpha <= (3k - 6) / 4
///   d == 2:  0            <= alpha <= k - 2
/// with k >= 2 real. Instances only exist inside it.
class TableAlgebraParams {
 public:
  /// Throws InvalidParams naming the violated constraint. When alpha is
  /// omitted it defaults to (3k - 6) / 4, which is admissible for every d.
  static TableAlgebraParams create(int d, double k,
                                   std::optional<double> alpha = std::nullopt);

  int d() const noexcept { return d_; }
  double k() const noexcept { return k_; }
  double alpha() const noexcept { return alpha_; }

  /// k - alpha - 1, the constant off-diagonal band of B1.
  double band() const noexcept { return k_ - alpha_ - 1.0; }

  /// Sum of valencies, 1 + d k.
  double order() const noexcept { return 1.0 + d_ * k_; }

 private:
  TableAlgebraParams(int d, double k, double alpha) : d_(d), k_(k), alpha_(alpha) {}

  int d_;
  double k_;
  double alpha_;
};

enum class SpectrumMethod { ClosedForm, Oracle };

std::string_view to_string(SpectrumMethod method);

/// Eigenvalues of B1 sorted descending, with the angle parametrisation
/// lambda = ((k + 2) / 2) cos(theta) + (k - 2) / 2.
struct Spectrum {
  std::vector<double> thetas;
  std::vector<double> lambdas;
  SpectrumMethod method = SpectrumMethod::ClosedForm;
};

/// Eigenvector coefficients u[1..d+1] (stored 0-based) for one angle.
struct EigvecCoefficients {
  double theta = 0.0;
  double lambda = 0.0;
  std::vector<double> u;
};

/// First intersection matrix.
Tridiagonal build_b1(const TableAlgebraParams& p);

/// (k+2) sin((d+2)t) - 4 sin((d+1)t) - 2k sin(dt) + 4 sin((d-1)t)
///   + (k-2) sin((d-2)t)
double eq7_residual(double theta, const TableAlgebraParams& p);

double lambda_from_theta(double theta, double k);
double theta_from_lambda(double lambda, double k);

inline constexpr int kDefaultGridDensity = 64;

/// Spectrum of B1 from the interior roots of eq7_residual on (0, pi),
/// located by a sign scan over grid_density * (d + 2) uniform cells and
/// refined by bisection to width tol. theta_0 = 0 is adjoined.
///
/// Throws InvalidParams for d < 5 and RootCountMismatch unless exactly d
/// well-separated roots are found.
Spectrum find_spectrum(const TableAlgebraParams& p,
                       int grid_density = kDefaultGridDensity,
                       double tol = kDefaultEigenTolerance);

/// Spectrum of B1 from the Sturm bisection oracle, any admissible d.
Spectrum oracle_spectrum(const TableAlgebraParams& p,
                         double tol = kDefaultEigenTolerance);

/// Eigenvector of B1 for the eigenvalue belonging to `theta`, via the
/// closed sine combination with u[1] = 1 and u[2] = k - 2a + 2a cos(theta),
/// a = (k + 2) / 4. Throws NotARoot if |eq7_residual(theta)| > 1e-6.
EigvecCoefficients eigenvector_from_theta(const TableAlgebraParams& p,
                                          double theta);

/// Same vector from the row-by-row recurrence of B1 u = lambda u; used as a
/// cross-check of the sine formula.
std::vector<double> eigenvector_by_recurrence(const TableAlgebraParams& p,
                                              double lambda);

}  // namespace tabalg

#endif  // TABALG_SPECTRAL_HPP
