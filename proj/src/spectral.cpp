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

#include "tabalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

constexpr double kAlphaSlack = 1e-12;
constexpr double kMinRootGap = 1e-10;
constexpr double kRootGuard = 1e-6;

[[noreturn]] void invalid(const std::string& constraint, int d, double k,
                          double alpha) {
  std::ostringstream os;
  os.precision(17);
  os << "violates " << constraint << " (d = " << d << ", k = " << k
     << ", alpha = " << alpha << ")";
  throw InvalidParams(os.str());
}

bool below(double x, double bound, double scale) {
  return x < bound - kAlphaSlack * std::max(1.0, std::abs(scale));
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

TableAlgebraParams TableAlgebraParams::create(int d, double k,
                                              std::optional<double> alpha) {
  const double forced = (3.0 * k - 6.0) / 4.0;
  const double a = alpha.value_or(forced);
  if (!std::isfinite(k) || !std::isfinite(a)) invalid("finite k and alpha", d, k, a);
  if (d < 2) invalid("d >= 2", d, k, a);
  if (k < 2.0) invalid("k >= 2", d, k, a);
  if (d >= 5) {
    if (std::abs(a - forced) > kAlphaSlack * std::max(1.0, std::abs(k))) {
      invalid("alpha = (3k - 6)/4 required for d >= 5", d, k, a);
    }
    return TableAlgebraParams(d, k, forced);
  }
  if (d == 4) {
    const double lo = (2.0 * k - 4.0) / 3.0;
    if (below(a, lo, k) || below(forced, a, k)) {
      invalid("(2k - 4)/3 <= alpha <= (3k - 6)/4 for d = 4", d, k, a);
    }
  } else if (d == 3) {
    const double lo = (k - 2.0) / 2.0;
    if (below(a, lo, k) || below(forced, a, k)) {
      invalid("(k - 2)/2 <= alpha <= (3k - 6)/4 for d = 3", d, k, a);
    }
  } else {
    if (below(a, 0.0, k) || below(k - 2.0, a, k)) {
      invalid("0 <= alpha <= k - 2 for d = 2", d, k, a);
    }
  }
  if (!(k - a - 1.0 > 0.0)) invalid("k - alpha - 1 > 0", d, k, a);
  return TableAlgebraParams(d, k, a);
}

std::string_view to_string(SpectrumMethod method) {
  return method == SpectrumMethod::ClosedForm ? "closed_form" : "oracle";
}

Tridiagonal build_b1(const TableAlgebraParams& p) {
  const auto n = static_cast<std::size_t>(p.d()) + 1;
  const double c = p.band();
  std::vector<double> diag(n, 2.0 * (p.alpha() + 1.0) - p.k());
  diag[0] = 0.0;
  diag[1] = p.alpha();
  diag[n - 1] = p.alpha() + 1.0;
  std::vector<double> sub(n - 1, c);
  std::vector<double> sup(n - 1, c);
  sub[0] = p.k();
  sup[0] = 1.0;
  return Tridiagonal(std::move(diag), std::move(sub), std::move(sup));
}

double eq7_residual(double theta, const TableAlgebraParams& p) {
  const double d = p.d();
  const double k = p.k();
  return (k + 2.0) * std::sin((d + 2.0) * theta) -
         4.0 * std::sin((d + 1.0) * theta) - 2.0 * k * std::sin(d * theta) +
         4.0 * std::sin((d - 1.0) * theta) +
         (k - 2.0) * std::sin((d - 2.0) * theta);
}

double lambda_from_theta(double theta, double k) {
  return 0.5 * (k + 2.0) * std::cos(theta) + 0.5 * (k - 2.0);
}

double theta_from_lambda(double lambda, double k) {
  const double c = (2.0 * lambda - (k - 2.0)) / (k + 2.0);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Spectrum find_spectrum(const TableAlgebraParams& p, int grid_density,
                       double tol) {
  if (p.d() < 5) {
    throw InvalidParams("trigonometric spectrum requires d >= 5; use the oracle");
  }
  if (grid_density < 1) throw std::invalid_argument("grid_density must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const auto expected = static_cast<std::size_t>(p.d());
  const int cells = grid_density * (p.d() + 2);
  const double h = std::numbers::pi / cells;
  const auto g = [&](double t) { return eq7_residual(t, p); };

  // Nodes 1 .. cells-1 lie in the open interval; 0 and pi are trivial zeros.
  std::vector<double> roots;
  double left = h;
  double g_left = g(left);
  if (g_left == 0.0) roots.push_back(left);
  for (int m = 2; m < cells; ++m) {
    const double right = m * h;
    const double g_right = g(right);
    if (g_right == 0.0) {
      roots.push_back(right);
    } else if (sign_of(g_left) * sign_of(g_right) < 0) {
      double lo = left;
      double hi = right;
      const int s_lo = sign_of(g_left);
      int steps = 0;
      double root = std::numeric_limits<double>::quiet_NaN();
      while (hi - lo > tol && steps < kMaxBisectionSteps) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = g(mid);
        if (g_mid == 0.0) {
          root = mid;
          break;
        }
        (sign_of(g_mid) == s_lo ? lo : hi) = mid;
        ++steps;
      }
      if (std::isnan(root)) {
        if (hi - lo > tol) {
          std::ostringstream os;
          os << "root bracket [" << lo << ", " << hi
             << "] did not shrink below tol = " << tol;
          throw ToleranceNotMet(os.str());
        }
        root = lo + 0.5 * (hi - lo);
      }
      roots.push_back(root);
    }
    left = right;
    g_left = g_right;
  }

  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] - roots[i - 1] < kMinRootGap) {
      std::ostringstream os;
      os << "near-double root at theta = " << roots[i] << " (gap "
         << roots[i] - roots[i - 1] << ")";
      throw RootCountMismatch(roots.size(), expected, os.str());
    }
  }
  if (roots.size() != expected) {
    std::ostringstream os;
    os << "found " << roots.size() << " interior roots, expected " << expected
       << " (d = " << p.d() << ", k = " << p.k()
       << "); increase grid_density or use the oracle";
    throw RootCountMismatch(roots.size(), expected, os.str());
  }

  Spectrum s;
  s.method = SpectrumMethod::ClosedForm;
  s.thetas.reserve(expected + 1);
  s.thetas.push_back(0.0);
  s.thetas.insert(s.thetas.end(), roots.begin(), roots.end());
  s.lambdas.reserve(expected + 1);
  s.lambdas.push_back(p.k());
  for (std::size_t j = 1; j < s.thetas.size(); ++j) {
    s.lambdas.push_back(lambda_from_theta(s.thetas[j], p.k()));
  }
  return s;
}

Spectrum oracle_spectrum(const TableAlgebraParams& p, double tol) {
  auto ascending = eigenvalues_oracle(build_b1(p), tol);
  Spectrum s;
  s.method = SpectrumMethod::Oracle;
  s.lambdas.assign(ascending.rbegin(), ascending.rend());
  s.thetas.reserve(s.lambdas.size());
  for (double lambda : s.lambdas) s.thetas.push_back(theta_from_lambda(lambda, p.k()));
  return s;
}

EigvecCoefficients eigenvector_from_theta(const TableAlgebraParams& p,
                                          double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::domain_error("eigenvector_from_theta: theta must lie in (0, pi)");
  }
  const double residual = eq7_residual(theta, p);
  if (std::abs(residual) > kRootGuard) {
    std::ostringstream os;
    os << "theta = " << theta << " is not a root (residual " << residual << ")";
    throw NotARoot(os.str());
  }

  // Work with B1 shifted by (k - 2)/2, whose interior rows read
  // a u[j-1] + a u[j+1] = mu u[j] with a = (k + 2)/4, mu = 2a cos(theta).
  const double k = p.k();
  const double a = 0.25 * (k + 2.0);
  const double mu = 2.0 * a * std::cos(theta);
  const double u1 = 1.0;
  const double u2 = (k - 2.0 * a + mu) * u1;
  const double c2 = (k - 2.0 * a) * u1 + (a - 1.0) * u2;
  const double c3 = (a - k) * u1 + (1.0 - a) * u2;
  const double scale = 1.0 / (a * std::sin(theta));

  const auto n = static_cast<std::size_t>(p.d()) + 1;
  EigvecCoefficients out;
  out.theta = theta;
  out.lambda = lambda_from_theta(theta, k);
  out.u.resize(n);
  out.u[0] = u1;
  out.u[1] = u2;
  // Entry j (1-based) of the sine combination; the u[d+2] term only enters
  // past the end of the vector.
  for (std::size_t idx = 2; idx < n; ++idx) {
    const double j = static_cast<double>(idx + 1);
    out.u[idx] = scale * (a * u1 * std::sin(j * theta) +
                          c2 * std::sin((j - 1.0) * theta) +
                          c3 * std::sin((j - 2.0) * theta));
  }
  return out;
}

std::vector<double> eigenvector_by_recurrence(const TableAlgebraParams& p,
                                              double lambda) {
  const auto b1 = build_b1(p);
  const auto n = b1.size();
  std::vector<double> u(n);
  u[0] = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double rhs = (lambda - b1.diag()[i]) * u[i];
    if (i > 0) rhs -= b1.sub()[i - 1] * u[i - 1];
    u[i + 1] = rhs / b1.sup()[i];
  }
  return u;
}

}  // namespace tabalg
