// Copyright 2026 The OAX Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oax {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON. Carries a 1-based line/column.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not follow the policy or context schema.
class schema_error : public error {
 public:
  using error::error;
};

/// Compact IRI whose prefix is not one of the fixed prefixes.
class prefix_error : public schema_error {
 public:
  using schema_error::schema_error;
};

/// Operator outside the dimensional comparison operators, or a right
/// operand that cannot take part in interval evaluation.
class unsupported_operator : public error {
 public:
  using error::error;
};

class not_dimensional : public error {
 public:
  using error::error;
};

class density_mismatch : public error {
 public:
  using error::error;
};

class axis_mismatch : public error {
 public:
  using error::error;
};

/// Value that cannot be used on an axis, e.g. 2.5 on an integer axis.
class domain_error : public error {
 public:
  using error::error;
};

/// Branch sets that cannot be combined (too few branches, different axes).
class composition_error : public error {
 public:
  using error::error;
};

/// Two policies without a rule pair sharing an action.
class no_comparable_rules : public error {
 public:
  using error::error;
};

class empty_input : public error {
 public:
  using error::error;
};

/// Expected verdict Unknown: the problem is never handed to a prover.
class not_submittable : public error {
 public:
  using error::error;
};

/// Missing prover executable, unreadable config and similar.
class environment_error : public error {
 public:
  using error::error;
};

}  // namespace oax
