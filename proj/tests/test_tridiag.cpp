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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/spectral.hpp"
#include "tabalg/tridiag.hpp"

using namespace tabalg;
using tabalg::testing::dense_charpoly;
using tabalg::testing::dense_det;
using tabalg::testing::to_dense;

namespace {

Tridiagonal random_similarizable(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> diag(-3.0, 3.0);
  std::uniform_real_distribution<double> band(0.2, 2.0);
  std::bernoulli_distribution flip(0.3);
  std::vector<double> a(n), b(n - 1), c(n - 1);
  for (auto& v : a) v = diag(rng);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b[i] = band(rng);
    c[i] = band(rng);
    if (flip(rng)) {
      b[i] = -b[i];
      c[i] = -c[i];
    }
  }
  return Tridiagonal(a, b, c);
}

}  // namespace

TEST_CASE("band lengths are enforced") {
  CHECK_THROWS_AS(Tridiagonal({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Tridiagonal({1, 2}, {1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Tridiagonal({1, 2}, {1}, {}), std::invalid_argument);
  const Tridiagonal m({1, 2, 3}, {4, 5}, {6, 7});
  CHECK(m(1, 0) == 4);
  CHECK(m(0, 1) == 6);
  CHECK(m(2, 0) == 0);
}

TEST_CASE("det_recursive examples") {
  CHECK(det_recursive(Tridiagonal({2}, {}, {})) == 2.0);
  CHECK(det_recursive(Tridiagonal({0, 0}, {1}, {1})) == -1.0);
  const Tridiagonal m3({0, 0, 0}, {1, 1}, {2, 2});
  CHECK(dense_det(to_dense(m3)) == doctest::Approx(0.0));
  CHECK(det_recursive(m3) == 0.0);
}

TEST_CASE("det_recursive matches dense elimination") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto m = random_similarizable(rng, n);
    const double ref = dense_det(to_dense(m));
    CHECK(std::abs(det_recursive(m) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("charpoly_eval examples") {
  // A_1 with a = 3.
  CHECK(charpoly_eval(Tridiagonal::toeplitz(3.0, 4.0, 1.0, 1), 3.0) == 0.0);
  // A_2 with a = 0, b = 1: x^2 - 1.
  CHECK(charpoly_eval(Tridiagonal::toeplitz(0.0, 1.0, 1.0, 2), 2.0) == doctest::Approx(3.0));
  const auto b1 = build_b1(TableAlgebraParams::create(5, 2.0));
  CHECK(std::abs(charpoly_eval(b1, 2.0 * std::cos(2.0 * std::numbers::pi / 11.0))) <= 1e-9);
}

TEST_CASE("charpoly_minors exposes leading minors") {
  const Tridiagonal m({1, 2, 3}, {1, 1}, {2, 2});
  const auto minors = charpoly_minors(m, 0.5);
  REQUIRE(minors.size() == 4);
  CHECK(minors[0] == 1.0);
  CHECK(minors[1] == doctest::Approx(0.5 - 1.0));
  CHECK(minors[3] == doctest::Approx(dense_charpoly(m, 0.5)));
}

TEST_CASE("symmetrize examples") {
  const auto s = symmetrize(Tridiagonal({0, 0}, {2}, {1}));
  CHECK(s.off[0] == doctest::Approx(std::sqrt(2.0)));

  const std::vector<double> off{0.3, 1.7, 2.5};
  const auto sym = symmetrize(Tridiagonal({1, 2, 3, 4}, off, off));
  CHECK(sym.off == off);

  const auto b1 = symmetrize(build_b1(TableAlgebraParams::create(5, 2.0)));
  CHECK(b1.off[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  for (std::size_t i = 1; i < 5; ++i) CHECK(b1.off[i] == 1.0);
}

TEST_CASE("symmetrize rejects non-positive band products") {
  CHECK_THROWS_AS(symmetrize(Tridiagonal({0, 0}, {1}, {-1})), NonSimilarizable);
  CHECK_THROWS_AS(symmetrize(Tridiagonal({0, 0, 0}, {1, 0}, {1, 1})), NonSimilarizable);
  CHECK_THROWS_AS(eigenvalues_oracle(Tridiagonal({0, 0}, {1}, {-1})), NonSimilarizable);
}

TEST_CASE("eigenvalues_oracle examples") {
  const auto one = eigenvalues_oracle(Tridiagonal({5}, {}, {}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 5.0);

  const auto b1 = build_b1(TableAlgebraParams::create(5, 2.0));
  auto eig = eigenvalues_oracle(b1);
  std::vector<double> expected;
  for (int j = 0; j <= 5; ++j) expected.push_back(2.0 * std::cos(2.0 * j * std::numbers::pi / 11.0));
  std::sort(expected.begin(), expected.end());
  REQUIRE(eig.size() == expected.size());
  for (std::size_t i = 0; i < eig.size(); ++i) CHECK(std::abs(eig[i] - expected[i]) <= 1e-9);
}

TEST_CASE("eigenvalues_oracle on B1(k=4, d=5) matches charpoly sign changes") {
  const auto b1 = build_b1(TableAlgebraParams::create(5, 4.0));
  const auto eig = eigenvalues_oracle(b1);
  // Independent route: dense determinant on a fine grid over the Gershgorin
  // interval, bisected.
  const auto roots = tabalg::testing::grid_roots(
      [&](double x) { return dense_charpoly(b1, x); }, -6.0, 9.0, 30000);
  REQUIRE(roots.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(eig[i] - roots[i]) <= 1e-8);
}

TEST_CASE("eigenvalues_oracle closed forms for n = 2") {
  const auto eig = eigenvalues_oracle(Tridiagonal({1, 3}, {2}, {0.5}));
  // [[1, .5], [2, 3]]: trace 4, det 2 -> 2 -+ sqrt(2).
  CHECK(eig[0] == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(eig[1] == doctest::Approx(2.0 + std::sqrt(2.0)));
}

TEST_CASE("repeated eigenvalues keep their multiplicity") {
  // Block diagonal in the limit: two decoupled copies would need a zero
  // band, so use a tiny coupling and a loose bracket.
  const Tridiagonal m({1, 1, 1}, {1e-9, 1e-9}, {1e-9, 1e-9});
  const auto eig = eigenvalues_oracle(m, 1e-12);
  REQUIRE(eig.size() == 3);
  for (double v : eig) CHECK(std::abs(v - 1.0) <= 1e-8);
}

TEST_CASE("tolerance below representable spacing is reported") {
  const auto b1 = build_b1(TableAlgebraParams::create(5, 2.0));
  CHECK_THROWS_AS(eigenvalues_oracle(b1, 1e-30), ToleranceNotMet);
  CHECK_THROWS_AS(eigenvalues_oracle(b1, 0.0), std::invalid_argument);
}

TEST_CASE("sturm counting survives large orders") {
  // Toeplitz symmetric: eigenvalues a + 2b cos(j pi / (n + 1)).
  const std::size_t n = 300;
  const double a = 1000.0;
  const double b = 100.0;
  const auto m = Tridiagonal::toeplitz(a, b, b, n);
  const auto eig = eigenvalues_oracle(m, 1e-9);
  for (std::size_t j = 1; j <= n; ++j) {
    const double expected = a + 2.0 * b * std::cos(j * std::numbers::pi / (n + 1.0));
    CHECK(std::abs(eig[n - j] - expected) <= 1e-8);
  }
  const auto s = symmetrize(m);
  CHECK(sturm_count(s, 0.0) == 0);
  CHECK(sturm_count(s, 5000.0) == n);
  CHECK(sturm_count(s, a) == n / 2);
}

TEST_CASE("property: charpoly equals product over oracle eigenvalues") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> probe(-5.0, 5.0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto m = random_similarizable(rng, n);
    const auto eig = eigenvalues_oracle(m);
    for (int r = 0; r < 5; ++r) {
      const double x = probe(rng);
      double prod = 1.0;
      for (double lambda : eig) prod *= x - lambda;
      const double value = charpoly_eval(m, x);
      CHECK(std::abs(value - prod) <= 1e-6 * std::max(std::abs(value), std::abs(prod)));
    }
  }
}

TEST_CASE("property: oracle output is sorted and inside Gershgorin") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto m = random_similarizable(rng, n);
    const auto s = symmetrize(m);
    const auto [lo, hi] = gershgorin_bounds(s);
    const auto eig = eigenvalues_oracle(s);
    CHECK(std::is_sorted(eig.begin(), eig.end()));
    CHECK(eig.front() >= lo - 1e-12);
    CHECK(eig.back() <= hi + 1e-12);
  }
}

TEST_CASE("property: symmetrize preserves the characteristic polynomial") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> probe(-5.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto m = random_similarizable(rng, n);
    const auto s = symmetrize(m);
    const Tridiagonal as_matrix(s.diag, s.off, s.off);
    for (int r = 0; r < 10; ++r) {
      const double x = probe(rng);
      const double lhs = charpoly_eval(m, x);
      const double rhs = charpoly_eval(as_matrix, x);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    }
  }
}

TEST_CASE("property: sturm count matches eigenvalues below probe") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> probe(-8.0, 8.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto s = symmetrize(random_similarizable(rng, n));
    const auto eig = eigenvalues_oracle(s);
    for (int r = 0; r < 20; ++r) {
      const double x = probe(rng);
      const auto below = static_cast<std::size_t>(
          std::count_if(eig.begin(), eig.end(), [x](double v) { return v < x; }));
      CHECK(sturm_count(s, x) == below);
    }
  }
}
