// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace steer {

/// Argument outside the mathematical domain of an operation (e.g. mu > 1,
/// non-Hermitian effect, negative density matrix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ingested data violates a structural constraint. Carries every failed
/// constraint, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> failures)
      : std::invalid_argument(join(failures)), failures_(std::move(failures)) {}
  explicit ValidationError(const std::string& failure)
      : ValidationError(std::vector<std::string>{failure}) {}

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> failures_;
};

/// Correlations requested for decomposition lie outside the LHV-LHS set.
class NotAMemberError : public std::domain_error {
 public:
  NotAMemberError(const std::string& what, double f_value)
      : std::domain_error(what), f_value_(f_value) {}
  double f_value() const noexcept { return f_value_; }

 private:
  double f_value_;
};

/// The LP oracle could not reach a trustworthy answer.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steer
