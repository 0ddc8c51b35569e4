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

#ifndef TABALG_CHEBYSHEV_HPP
#define TABALG_CHEBYSHEV_HPP

namespace tabalg {

enum class ChebKind { First, Second };

/// U_n(x). Trigonometric form sin((n+1)t)/sin(t) with x = cos(t) on
/// [-1, 1], three-term recurrence outside it and wherever |sin t| < 1e-6.
double cheb_u(int n, double x);

/// T_n(x), same evaluation strategy with T_n(cos t) = cos(n t).
double cheb_t(int n, double x);

double cheb_eval(ChebKind kind, int n, double x);

/// Plain recurrence evaluation, valid for every real x.
double cheb_u_recurrence(int n, double x);
double cheb_t_recurrence(int n, double x);

/// det(xI - A_n) for the n x n matrix with `a` on the diagonal, 1 on the
/// superdiagonal and `b` on the subdiagonal:
///
///   (sqrt b)^n U_n((x - a) / (2 sqrt b))
///
/// Throws NonPositiveB for b <= 0.
double charpoly_toeplitz_tridiag(double a, double b, int n, double x);

}  // namespace tabalg

#endif  // TABALG_CHEBYSHEV_HPP
