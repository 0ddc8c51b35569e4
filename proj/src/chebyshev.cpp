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

#include "tabalg/chebyshev.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

// Below this |sin t| the quotient form loses relative accuracy.
constexpr double kTrigSwitch = 1e-6;

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be non-negative");
}

}  // namespace

double cheb_u_recurrence(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int i = 2; i <= n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_t_recurrence(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int i = 2; i <= n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_u(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  if (n == 1) return 2.0 * x;
  if (x == 1.0) return n + 1.0;
  if (x == -1.0) return (n % 2 == 0 ? 1.0 : -1.0) * (n + 1.0);
  if (std::abs(x) > 1.0) return cheb_u_recurrence(n, x);
  const double t = std::acos(x);
  const double s = std::sin(t);
  if (std::abs(s) < kTrigSwitch) return cheb_u_recurrence(n, x);
  return std::sin((n + 1.0) * t) / s;
}

double cheb_t(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  if (n == 1) return x;
  if (x == 1.0) return 1.0;
  if (x == -1.0) return n % 2 == 0 ? 1.0 : -1.0;
  if (std::abs(x) > 1.0) return cheb_t_recurrence(n, x);
  const double t = std::acos(x);
  if (std::abs(std::sin(t)) < kTrigSwitch) return cheb_t_recurrence(n, x);
  return std::cos(n * t);
}

double cheb_eval(ChebKind kind, int n, double x) {
  return kind == ChebKind::First ? cheb_t(n, x) : cheb_u(n, x);
}

double charpoly_toeplitz_tridiag(double a, double b, int n, double x) {
  if (!(b > 0.0)) {
    std::ostringstream os;
    os << "charpoly_toeplitz_tridiag: b = " << b << " must be positive";
    throw NonPositiveB(os.str());
  }
  if (n < 1) throw std::invalid_argument("charpoly_toeplitz_tridiag: n must be positive");
  const double root_b = std::sqrt(b);
  return std::pow(root_b, n) * cheb_u(n, (x - a) / (2.0 * root_b));
}

}  // namespace tabalg
