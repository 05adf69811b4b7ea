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

#include <string>
#include <string_view>

#include "oax/errors.hpp"

namespace oax {

inline constexpr std::string_view kOdrlNs = "http://www.w3.org/ns/odrl/2/";
inline constexpr std::string_view kOaxNs = "http://w3id.org/odrl/spatial-axis#";

inline bool is_absolute_iri(std::string_view s) {
  return s.starts_with("http://") || s.starts_with("https://") || s.starts_with("urn:");
}

/// Expands `odrl:x` / `oax:x` against the fixed prefix map. Absolute IRIs
/// pass through; bare terms (`lteq`) are ODRL vocabulary terms. Any other
/// prefix is rejected.
inline std::string expand_iri(std::string_view s) {
  if (s.empty()) throw schema_error("empty IRI");
  if (is_absolute_iri(s)) return std::string(s);
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::string(kOdrlNs) + std::string(s);
  auto prefix = s.substr(0, colon);
  auto local = s.substr(colon + 1);
  if (prefix == "odrl") return std::string(kOdrlNs) + std::string(local);
  if (prefix == "oax") return std::string(kOaxNs) + std::string(local);
  throw prefix_error("unknown prefix '" + std::string(prefix) + ":' in '" + std::string(s) +
                     "' (only odrl: and oax: are recognised)");
}

inline std::string compact_iri(std::string_view iri) {
  if (iri.starts_with(kOdrlNs)) return "odrl:" + std::string(iri.substr(kOdrlNs.size()));
  if (iri.starts_with(kOaxNs)) return "oax:" + std::string(iri.substr(kOaxNs.size()));
  return std::string(iri);
}

inline std::string odrl(std::string_view local) { return std::string(kOdrlNs) + std::string(local); }
inline std::string oax_iri(std::string_view local) { return std::string(kOaxNs) + std::string(local); }

}  // namespace oax
