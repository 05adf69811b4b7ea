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

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oax/errors.hpp"
#include "oax/model.hpp"

namespace oax {

/// Settings read from an `oax.toml` file. Only the keys below are
/// accepted; anything else is an error so typos do not pass silently.
///
///   [provers]   vampire = "path", z3 = "path"
///   [bench]     timeout = 10, jobs = 4
///   [axes]      integer = ["width", "oax:relativeSizeWidth"]
///   [output]    format = "json" | "text"
struct Config {
  std::optional<std::string> vampire;
  std::optional<std::string> z3;
  int timeout = 10;
  int jobs = 4;
  std::vector<std::string> integer_axes;
  std::string format = "text";
};

class config_error : public error {
 public:
  using error::error;
};

namespace detail {

// Drops a trailing comment that is not inside a string.
inline std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

inline std::string parse_string(std::string_view v, const std::string& where) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') throw config_error(where + ": expected a quoted string");
  std::string out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == '\\' && i + 2 < v.size()) {
      char n = v[++i];
      out += n == 'n' ? '\n' : n == 't' ? '\t' : n;
    } else {
      out += v[i];
    }
  }
  return out;
}

inline int parse_int(std::string_view v, const std::string& where, int min) {
  try {
    std::size_t used = 0;
    int n = std::stoi(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    if (n < min) throw config_error(where + ": must be at least " + std::to_string(min));
    return n;
  } catch (const config_error&) {
    throw;
  } catch (const std::exception&) {
    throw config_error(where + ": expected an integer");
  }
}

inline std::vector<std::string> parse_string_array(std::string_view v, const std::string& where) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw config_error(where + ": expected an array of strings");
  std::vector<std::string> out;
  std::string_view body = trim(v.substr(1, v.size() - 2));
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (!item.empty()) out.push_back(parse_string(item, where));
    if (comma == std::string_view::npos) break;
    body = trim(body.substr(comma + 1));
  }
  return out;
}

}  // namespace detail

inline Config parse_config(std::string_view text, const std::string& source = "config") {
  Config c;
  std::string section;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = detail::trim(detail::strip_comment(text.substr(0, nl)));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error(where + ": malformed section header");
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (section != "provers" && section != "bench" && section != "axes" && section != "output")
        throw config_error(where + ": unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw config_error(where + ": expected key = value");
    std::string key = std::string(detail::trim(line.substr(0, eq)));
    std::string_view value = detail::trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    if (full == "provers.vampire") c.vampire = detail::parse_string(value, where);
    else if (full == "provers.z3") c.z3 = detail::parse_string(value, where);
    else if (full == "bench.timeout") c.timeout = detail::parse_int(value, where, 1);
    else if (full == "bench.jobs") c.jobs = detail::parse_int(value, where, 1);
    else if (full == "axes.integer") c.integer_axes = detail::parse_string_array(value, where);
    else if (full == "output.format") {
      c.format = detail::parse_string(value, where);
      if (c.format != "json" && c.format != "text") throw config_error(where + ": format must be \"json\" or \"text\"");
    } else {
      throw config_error(where + ": unknown key '" + full + "'");
    }
  }
  return c;
}

}  // namespace oax
