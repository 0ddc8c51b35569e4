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

#include "tabalg/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

constexpr double kRescaleHigh = 1e150;
constexpr double kRescaleLow = 1e-150;

}  // namespace

Tridiagonal::Tridiagonal(std::vector<double> diag, std::vector<double> sub,
                         std::vector<double> sup)
    : diag_(std::move(diag)), sub_(std::move(sub)), sup_(std::move(sup)) {
  if (diag_.empty()) {
    throw std::invalid_argument("Tridiagonal: order must be at least 1");
  }
  if (sub_.size() + 1 != diag_.size() || sup_.size() + 1 != diag_.size()) {
    std::ostringstream os;
    os << "Tridiagonal: band lengths " << diag_.size() << "/" << sub_.size()
       << "/" << sup_.size() << " are not n/n-1/n-1";
    throw std::invalid_argument(os.str());
  }
}

Tridiagonal Tridiagonal::toeplitz(double diag_value, double sub_value,
                                  double sup_value, std::size_t n) {
  if (n == 0) throw std::invalid_argument("Tridiagonal: order must be at least 1");
  return Tridiagonal(std::vector<double>(n, diag_value),
                     std::vector<double>(n - 1, sub_value),
                     std::vector<double>(n - 1, sup_value));
}

double Tridiagonal::operator()(std::size_t row, std::size_t col) const {
  if (row >= size() || col >= size()) {
    throw std::out_of_range("Tridiagonal: index out of range");
  }
  if (row == col) return diag_[row];
  if (row == col + 1) return sub_[col];
  if (col == row + 1) return sup_[row];
  return 0.0;
}

std::vector<double> Tridiagonal::multiply(std::span<const double> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("Tridiagonal::multiply: size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * v[i];
    if (i > 0) acc += sub_[i - 1] * v[i - 1];
    if (i + 1 < n) acc += sup_[i] * v[i + 1];
    y[i] = acc;
  }
  return y;
}

std::vector<double> Tridiagonal::multiply_transposed(
    std::span<const double> v) const {
  const std::size_t n = size();
  if (v.size() != n) {
    throw std::invalid_argument("Tridiagonal::multiply_transposed: size mismatch");
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * v[i];
    if (i > 0) acc += sup_[i - 1] * v[i - 1];
    if (i + 1 < n) acc += sub_[i] * v[i + 1];
    y[i] = acc;
  }
  return y;
}

bool Tridiagonal::similarizable() const noexcept {
  for (std::size_t i = 0; i < sub_.size(); ++i) {
    if (!(sub_[i] * sup_[i] > 0.0)) return false;
  }
  return true;
}

double det_recursive(const Tridiagonal& m) {
  const auto& a = m.diag();
  const auto& b = m.sub();
  const auto& c = m.sup();
  const std::size_t n = m.size();
  if (n == 1) return a[0];
  double prev2 = a[0];
  double prev = a[0] * a[1] - c[0] * b[0];
  for (std::size_t i = 2; i < n; ++i) {
    const double cur = a[i] * prev - c[i - 1] * b[i - 1] * prev2;
    prev2 = prev;
    prev = cur;
  }
  return prev;
}

std::vector<double> charpoly_minors(const Tridiagonal& m, double x) {
  const auto& a = m.diag();
  const auto& b = m.sub();
  const auto& c = m.sup();
  const std::size_t n = m.size();
  std::vector<double> minors(n + 1);
  minors[0] = 1.0;
  minors[1] = x - a[0];
  for (std::size_t i = 2; i <= n; ++i) {
    // Off-diagonal entries of xI - m are -b and -c; their product is b*c.
    minors[i] = (x - a[i - 1]) * minors[i - 1] - b[i - 2] * c[i - 2] * minors[i - 2];
  }
  return minors;
}

double charpoly_eval(const Tridiagonal& m, double x) {
  return charpoly_minors(m, x).back();
}

SymmetrizedTridiagonal symmetrize(const Tridiagonal& m) {
  SymmetrizedTridiagonal s;
  s.diag = m.diag();
  s.off.resize(m.sub().size());
  for (std::size_t i = 0; i < s.off.size(); ++i) {
    const double prod = m.sub()[i] * m.sup()[i];
    if (!(prod > 0.0)) {
      std::ostringstream os;
      os << "sub[" << i << "] * sup[" << i << "] = " << prod
         << " is not positive; no real diagonal similarity exists";
      throw NonSimilarizable(os.str());
    }
    // Symmetric input passes through untouched.
    s.off[i] = m.sub()[i] == m.sup()[i] ? std::abs(m.sub()[i]) : std::sqrt(prod);
  }
  return s;
}

std::size_t sturm_count(const SymmetrizedTridiagonal& s, double x) {
  // Leading principal minors of s - xI; the number of sign changes along the
  // sequence is the number of eigenvalues below x. A zero minor inherits the
  // sign of its predecessor.
  const std::size_t n = s.size();
  double prev2 = 1.0;
  double prev = s.diag[0] - x;
  bool prev_negative = false;
  std::size_t count = 0;
  const auto visit = [&](double value) {
    const bool negative = value == 0.0 ? prev_negative : value < 0.0;
    if (negative != prev_negative) ++count;
    prev_negative = negative;
  };
  visit(prev);
  for (std::size_t i = 1; i < n; ++i) {
    const double off = s.off[i - 1];
    double cur = (s.diag[i] - x) * prev - off * off * prev2;
    if (std::abs(cur) > kRescaleHigh) {
      cur *= kRescaleLow;
      prev *= kRescaleLow;
    } else if (std::abs(cur) < kRescaleLow && std::abs(prev) < kRescaleLow &&
               (cur != 0.0 || prev != 0.0)) {
      cur *= kRescaleHigh;
      prev *= kRescaleHigh;
    }
    visit(cur);
    prev2 = prev;
    prev = cur;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const SymmetrizedTridiagonal& s) {
  const std::size_t n = s.size();
  double lo = s.diag[0];
  double hi = s.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(s.off[i - 1]);
    if (i + 1 < n) radius += std::abs(s.off[i]);
    lo = std::min(lo, s.diag[i] - radius);
    hi = std::max(hi, s.diag[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> eigenvalues_oracle(const SymmetrizedTridiagonal& s,
                                       double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalues_oracle: tol must be positive");
  const std::size_t n = s.size();
  if (n == 1) return {s.diag[0]};
  if (n == 2) {
    const double mean = 0.5 * (s.diag[0] + s.diag[1]);
    const double half_gap = 0.5 * (s.diag[0] - s.diag[1]);
    const double r = std::hypot(half_gap, s.off[0]);
    return {mean - r, mean + r};
  }

  const auto [glo, ghi] = gershgorin_bounds(s);
  const double pad = std::max(tol, 1e-12 * std::max({1.0, std::abs(glo), std::abs(ghi)}));
  std::vector<double> eig(n);
  double floor = glo - pad;
  for (std::size_t idx = 0; idx < n; ++idx) {
    // The idx-th eigenvalue is the smallest x with count(x) > idx. Lower
    // brackets carry over since eigenvalues are produced in ascending order.
    double lo = floor;
    double hi = ghi + pad;
    int steps = 0;
    while (hi - lo > tol && steps < kMaxBisectionSteps) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(s, mid) > idx) {
        hi = mid;
      } else {
        lo = mid;
      }
      ++steps;
    }
    if (hi - lo > tol) {
      std::ostringstream os;
      os << "eigenvalue " << idx << " bracket [" << lo << ", " << hi
         << "] did not shrink below tol = " << tol << " after " << steps
         << " bisection steps";
      throw ToleranceNotMet(os.str());
    }
    eig[idx] = lo + 0.5 * (hi - lo);
    floor = lo;
  }
  return eig;
}

std::vector<double> eigenvalues_oracle(const Tridiagonal& m, double tol) {
  return eigenvalues_oracle(symmetrize(m), tol);
}

}  // namespace tabalg
