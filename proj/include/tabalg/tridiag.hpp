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

#ifndef TABALG_TRIDIAG_HPP
#define TABALG_TRIDIAG_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tabalg {

/// General n x n tridiagonal matrix in three-band storage.
///
///   diag[i] = m(i, i)
///   sub[i]  = m(i + 1, i)
///   sup[i]  = m(i, i + 1)
///
/// The band lengths are fixed at construction (n, n - 1, n - 1) and the
/// value is immutable afterwards.
class Tridiagonal {
 public:
  /// Throws std::invalid_argument unless the band lengths are n, n-1, n-1
  /// with n >= 1.
  Tridiagonal(std::vector<double> diag, std::vector<double> sub,
              std::vector<double> sup);

  /// Constant-band matrix: `diag_value` on the diagonal, `sub_value` below
  /// and `sup_value` above.
  static Tridiagonal toeplitz(double diag_value, double sub_value,
                              double sup_value, std::size_t n);

  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& sub() const noexcept { return sub_; }
  const std::vector<double>& sup() const noexcept { return sup_; }

  /// Dense entry access; zero outside the three bands.
  double operator()(std::size_t row, std::size_t col) const;

  /// y = m * v.
  std::vector<double> multiply(std::span<const double> v) const;

  /// y = m^T * v.
  std::vector<double> multiply_transposed(std::span<const double> v) const;

  /// True when sub[i] * sup[i] > 0 for every i.
  bool similarizable() const noexcept;

 private:
  std::vector<double> diag_;
  std::vector<double> sub_;
  std::vector<double> sup_;
};

/// Symmetric tridiagonal produced by a positive diagonal similarity.
struct SymmetrizedTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
};

/// Determinant by the three-term leading-minor recursion.
double det_recursive(const Tridiagonal& m);

/// det(xI - m).
double charpoly_eval(const Tridiagonal& m, double x);

/// Leading principal minors of xI - m: result[0] = 1, result[i] = det of the
/// top-left i x i block, result[n] = charpoly_eval(m, x). No rescaling, so
/// entries can overflow for large n and |x|.
std::vector<double> charpoly_minors(const Tridiagonal& m, double x);

/// off[i] = sqrt(sub[i] * sup[i]). Throws NonSimilarizable if any product
/// is not strictly positive.
SymmetrizedTridiagonal symmetrize(const Tridiagonal& m);

/// Number of eigenvalues strictly less than x.
std::size_t sturm_count(const SymmetrizedTridiagonal& s, double x);

/// [lower, upper] enclosing every Gershgorin disc of s.
std::pair<double, double> gershgorin_bounds(const SymmetrizedTridiagonal& s);

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

/// All eigenvalues, ascending, each bracketed to absolute width <= tol.
/// Repeated eigenvalues appear once per multiplicity.
///
/// Throws NonSimilarizable, ToleranceNotMet, or std::invalid_argument for
/// tol <= 0.
std::vector<double> eigenvalues_oracle(const SymmetrizedTridiagonal& s,
                                       double tol = kDefaultEigenTolerance);
std::vector<double> eigenvalues_oracle(const Tridiagonal& m,
                                       double tol = kDefaultEigenTolerance);

}  // namespace tabalg

#endif  // TABALG_TRIDIAG_HPP
