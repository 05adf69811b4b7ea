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

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oax/errors.hpp"
#include "oax/interval.hpp"
#include "oax/iri.hpp"

namespace oax {

enum class Axis { Width, Height, Depth, X, Y, Z, Longitude, Latitude, Altitude };

inline std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::Width: return "width";
    case Axis::Height: return "height";
    case Axis::Depth: return "depth";
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
    case Axis::Longitude: return "longitude";
    case Axis::Latitude: return "latitude";
    case Axis::Altitude: return "altitude";
  }
  return "?";
}

/// Value domain of one axis. Same shape as an interval: the profile fixes
/// it per operand and every denotation is clipped to it.
using Domain = Interval;

struct AxisOperand {
  std::string iri;   // full IRI, oax namespace
  std::string base;  // full IRI of the parent dimensional operand
  Axis axis;
  Domain domain;

  std::string compact() const { return compact_iri(iri); }
  std::string local_name() const { return iri.substr(kOaxNs.size()); }
  Density density() const { return domain.density(); }

  friend bool operator==(const AxisOperand& a, const AxisOperand& b) {
    return a.iri == b.iri && a.base == b.base && a.axis == b.axis && a.domain == b.domain;
  }
};

/// The five ODRL left operands whose value space has more than one axis.
inline const std::array<std::string, 5>& dimensional_bases() {
  static const std::array<std::string, 5> bases = {
      odrl("absoluteSize"), odrl("relativeSize"), odrl("absoluteSpatialPosition"),
      odrl("relativeSpatialPosition"), odrl("spatialCoordinates")};
  return bases;
}

inline bool is_dimensional_base(std::string_view iri) {
  const auto& b = dimensional_bases();
  return std::find(b.begin(), b.end(), iri) != b.end();
}

struct ValidationReport {
  bool ok = true;
  std::string operand;
  std::string value;
  std::string domain;
  std::string message;
};

/// Bounds check for a right operand (the SHACL shapes of the profile,
/// done natively).
inline ValidationReport validate_right_operand(const AxisOperand& op, const Rational& v) {
  ValidationReport r;
  r.operand = op.compact();
  r.value = to_decimal_string(v);
  r.domain = op.domain.to_string();
  bool inside;
  if (op.density() == Density::IntegerDiscrete && !is_integral(v)) {
    // Non-integral bounds are legal on integer axes; normalisation rounds
    // them. Only the position relative to the (normalised) domain counts.
    inside = Interval(op.domain.lower(), op.domain.upper(), Density::Dense).contains(v);
  } else {
    inside = op.domain.contains(v);
  }
  r.ok = inside;
  if (!inside)
    r.message = r.operand + ": right operand " + r.value + " outside domain " + r.domain;
  return r;
}

/// Registry of axis-specific operands. The standard profile holds the 15
/// operands; an empty profile stands for an engine that does not know the
/// vocabulary at all.
class AxisProfile {
 public:
  AxisProfile() = default;
  explicit AxisProfile(std::vector<AxisOperand> ops) : operands_(std::move(ops)) {}

  static const AxisProfile& standard() {
    static const AxisProfile profile = build_standard();
    return profile;
  }

  const std::vector<AxisOperand>& operands() const { return operands_; }
  std::size_t size() const { return operands_.size(); }
  bool empty() const { return operands_.empty(); }

  /// Lookup by full IRI.
  const AxisOperand* find(std::string_view iri) const {
    for (const auto& op : operands_)
      if (op.iri == iri) return &op;
    return nullptr;
  }

  /// Lookup by full IRI, `oax:` compact IRI, local name
  /// (`absoluteSizeWidth`) or short alias (`width`, `lat`, ...).
  const AxisOperand* resolve(std::string_view name) const {
    if (is_absolute_iri(name)) return find(name);
    if (name.starts_with("oax:")) return find(oax_iri(name.substr(4)));
    if (auto* op = find(oax_iri(name))) return op;
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"width", "absoluteSizeWidth"},
        {"height", "absoluteSizeHeight"},
        {"depth", "absoluteSizeDepth"},
        {"x", "absoluteSpatialPositionX"},
        {"y", "absoluteSpatialPositionY"},
        {"z", "absoluteSpatialPositionZ"},
        {"longitude", "spatialCoordinatesLongitude"},
        {"lon", "spatialCoordinatesLongitude"},
        {"latitude", "spatialCoordinatesLatitude"},
        {"lat", "spatialCoordinatesLatitude"},
        {"altitude", "spatialCoordinatesAltitude"},
        {"alt", "spatialCoordinatesAltitude"},
    };
    if (auto it = aliases.find(name); it != aliases.end()) return find(oax_iri(it->second));
    return nullptr;
  }

  /// Position in registry order; used to keep reports in a stable axis order.
  std::size_t index_of(std::string_view iri) const {
    for (std::size_t i = 0; i < operands_.size(); ++i)
      if (operands_[i].iri == iri) return i;
    return operands_.size();
  }

  /// The axis decomposition of a dimensional base operand.
  std::vector<AxisOperand> decompose(std::string_view base) const {
    std::string full = expand_iri(base);
    if (!is_dimensional_base(full))
      throw not_dimensional(compact_iri(full) + " is not a dimensional left operand");
    std::vector<AxisOperand> out;
    for (const auto& op : operands_)
      if (op.base == full) out.push_back(op);
    return out;
  }

  /// Copy with the named axes switched to integer density. Names are
  /// resolved like `resolve`.
  AxisProfile with_integer_axes(const std::vector<std::string>& names) const {
    AxisProfile copy = *this;
    for (const auto& name : names) {
      const AxisOperand* op = resolve(name);
      if (!op) throw schema_error("unknown axis operand '" + name + "'");
      std::size_t i = index_of(op->iri);
      auto& target = copy.operands_[i];
      target.domain = Domain(target.domain.lower(), target.domain.upper(),
                             Density::IntegerDiscrete);
    }
    return copy;
  }

 private:
  static AxisProfile build_standard() {
    const auto unbounded = Domain::full();
    const auto size = Domain(Bound::open_at(0), Bound::pos_inf());
    const auto relative_size = Domain(Bound::open_at(0), Bound::closed(100));
    const auto relative_position = Domain(Bound::closed(0), Bound::closed(100));
    const auto longitude = Domain(Bound::closed(-180), Bound::closed(180));
    const auto latitude = Domain(Bound::closed(-90), Bound::closed(90));

    std::vector<AxisOperand> ops;
    auto add = [&](std::string_view base, std::string_view suffix, Axis axis, const Domain& d) {
      ops.push_back({oax_iri(std::string(base) + std::string(suffix)), odrl(base), axis, d});
    };
    add("absoluteSize", "Width", Axis::Width, size);
    add("absoluteSize", "Height", Axis::Height, size);
    add("absoluteSize", "Depth", Axis::Depth, size);
    add("relativeSize", "Width", Axis::Width, relative_size);
    add("relativeSize", "Height", Axis::Height, relative_size);
    add("relativeSize", "Depth", Axis::Depth, relative_size);
    add("absoluteSpatialPosition", "X", Axis::X, unbounded);
    add("absoluteSpatialPosition", "Y", Axis::Y, unbounded);
    add("absoluteSpatialPosition", "Z", Axis::Z, unbounded);
    add("relativeSpatialPosition", "X", Axis::X, relative_position);
    add("relativeSpatialPosition", "Y", Axis::Y, relative_position);
    add("relativeSpatialPosition", "Z", Axis::Z, relative_position);
    add("spatialCoordinates", "Longitude", Axis::Longitude, longitude);
    add("spatialCoordinates", "Latitude", Axis::Latitude, latitude);
    add("spatialCoordinates", "Altitude", Axis::Altitude, unbounded);
    return AxisProfile(std::move(ops));
  }

  std::vector<AxisOperand> operands_;
};

inline const std::vector<AxisOperand>& registry() { return AxisProfile::standard().operands(); }

}  // namespace oax
