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

#ifndef TABALG_ERRORS_HPP
#define TABALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tabalg {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI for structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A Tridiagonal with sub[i]*sup[i] <= 0 for some i.
class NonSimilarizable : public Error {
 public:
  explicit NonSimilarizable(const std::string& what)
      : Error("NonSimilarizable", what) {}
};

/// Bisection ran out of steps before the bracket shrank below tol.
class ToleranceNotMet : public Error {
 public:
  explicit ToleranceNotMet(const std::string& what)
      : Error("ToleranceNotMet", what) {}
};

class NonPositiveB : public Error {
 public:
  explicit NonPositiveB(const std::string& what) : Error("NonPositiveB", what) {}
};

/// (d, k, alpha) outside the admissible region of the homogeneous monotonic
/// family. The message names the violated constraint.
class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& what)
      : Error("InvalidParams", what) {}
};

/// The trigonometric root scan did not produce exactly d simple interior
/// roots. The oracle eigensolver is authoritative in that case.
class RootCountMismatch : public Error {
 public:
  RootCountMismatch(std::size_t found, std::size_t expected,
                    const std::string& what)
      : Error("RootCountMismatch", what), found_(found), expected_(expected) {}

  std::size_t found() const noexcept { return found_; }
  std::size_t expected() const noexcept { return expected_; }

 private:
  std::size_t found_;
  std::size_t expected_;
};

class NotARoot : public Error {
 public:
  explicit NotARoot(const std::string& what) : Error("NotARoot", what) {}
};

class DegenerateColumn : public Error {
 public:
  explicit DegenerateColumn(const std::string& what)
      : Error("DegenerateColumn", what) {}
};

}  // namespace tabalg

#endif  // TABALG_ERRORS_HPP
