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

#ifndef TABALG_CHECKS_HPP
#define TABALG_CHECKS_HPP

#include <span>
#include <string>
#include <vector>

#include "tabalg/characters.hpp"
#include "tabalg/tridiag.hpp"

namespace tabalg {

/// One named consistency check with its worst observed residual.
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double threshold = 0.0;
};

CheckResult make_check(std::string name, double max_residual, double threshold);

/// max_{i,j} |a[i][j] - b[i][j]|.
double max_abs_diff(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b);

/// max_j |B1 v_j - lambda_j v_j|_inf / max(1, |v_j|_inf) over the columns of
/// the table.
double character_eigen_residual(const Tridiagonal& b1, const CharacterTable& ct);

/// max_{i,l} |sum_j m_j p_i(j) p_l(j) - n k_i delta_il| / (n k_i).
double orthogonality_residual(const CharacterTable& ct, std::span<const double> m);

/// Homogeneous (d, k) pipeline checks: method agreement, oracle agreement,
/// eigenvector synthesis, orthogonality and Krein identities.
std::vector<CheckResult> verify_params(const TableAlgebraParams& p,
                                       int grid_density, double tol);

}  // namespace tabalg

#endif  // TABALG_CHECKS_HPP
