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

#include <optional>
#include <string>
#include <string_view>

#include "oax/decimal.hpp"
#include "oax/errors.hpp"

namespace oax {

enum class Density { Dense, IntegerDiscrete };

inline std::string_view to_string(Density d) {
  return d == Density::Dense ? "dense" : "integer";
}

/// One end of an interval: a finite exact value or an infinity.
/// Infinite ends are always open.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rational value{0};
  bool open = false;

  static Bound neg_inf() { return {Kind::NegInf, Rational(0), true}; }
  static Bound pos_inf() { return {Kind::PosInf, Rational(0), true}; }
  static Bound closed(Rational v) { return {Kind::Finite, std::move(v), false}; }
  static Bound open_at(Rational v) { return {Kind::Finite, std::move(v), true}; }

  bool finite() const { return kind == Kind::Finite; }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.kind != b.kind) return false;
    if (!a.finite()) return true;
    return a.value == b.value && a.open == b.open;
  }
};

namespace detail {

// Lower bounds ordered by restrictiveness: true when `a` admits at least
// everything `b` admits.
inline bool lower_looser_or_equal(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Kind::NegInf) return true;
  if (b.kind == Bound::Kind::NegInf) return false;
  if (a.value != b.value) return a.value < b.value;
  return !a.open || b.open;
}

inline bool upper_looser_or_equal(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Kind::PosInf) return true;
  if (b.kind == Bound::Kind::PosInf) return false;
  if (a.value != b.value) return a.value > b.value;
  return !a.open || b.open;
}

}  // namespace detail

/// A convex subset of one totally ordered axis.
///
/// Integer-discrete intervals are kept in normal form: every finite end
/// closed and integral (`(5, +inf)` becomes `[6, +inf)`). All empty
/// intervals of one density compare equal; the stored representative is
/// `(0, 0)` for dense and `[1, 0]` for discrete.
class Interval {
 public:
  Interval() : Interval(Bound::neg_inf(), Bound::pos_inf(), Density::Dense) {}

  Interval(Bound lower, Bound upper, Density density = Density::Dense)
      : lower_(std::move(lower)), upper_(std::move(upper)), density_(density) {
    if (lower_.kind == Bound::Kind::PosInf || upper_.kind == Bound::Kind::NegInf)
      throw domain_error("interval lower end cannot be +inf, upper end cannot be -inf");
    canonicalize();
  }

  static Interval full(Density d = Density::Dense) {
    return Interval(Bound::neg_inf(), Bound::pos_inf(), d);
  }
  static Interval empty(Density d = Density::Dense) {
    return Interval(Bound::open_at(0), Bound::open_at(0), d);
  }
  static Interval point(const Rational& v, Density d = Density::Dense) {
    return Interval(Bound::closed(v), Bound::closed(v), d);
  }

  const Bound& lower() const { return lower_; }
  const Bound& upper() const { return upper_; }
  Density density() const { return density_; }

  bool is_empty() const {
    if (!lower_.finite() || !upper_.finite()) return false;
    if (lower_.value > upper_.value) return true;
    if (lower_.value < upper_.value) return false;
    return lower_.open || upper_.open;
  }

  /// Membership. On an integer axis `v` must be integral.
  bool contains(const Rational& v) const {
    if (density_ == Density::IntegerDiscrete && !is_integral(v))
      throw domain_error("non-integral value " + to_decimal_string(v) +
                         " on an integer-discrete axis");
    if (is_empty()) return false;
    if (lower_.finite()) {
      if (v < lower_.value || (v == lower_.value && lower_.open)) return false;
    }
    if (upper_.finite()) {
      if (v > upper_.value || (v == upper_.value && upper_.open)) return false;
    }
    return true;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.density_ != b.density_) return false;
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

  /// `(0, 600]`, `[-90, 90]`, `(-inf, +inf)`, `EMPTY`.
  std::string to_string() const {
    if (is_empty()) return "EMPTY";
    std::string out;
    out += lower_.open ? '(' : '[';
    out += lower_.finite() ? to_decimal_string(lower_.value) : std::string("-inf");
    out += ", ";
    out += upper_.finite() ? to_decimal_string(upper_.value) : std::string("+inf");
    out += upper_.open ? ')' : ']';
    return out;
  }

 private:
  void canonicalize() {
    if (density_ == Density::IntegerDiscrete) {
      if (lower_.finite()) {
        lower_.value = lower_.open ? floor_of(lower_.value) + 1 : ceil_of(lower_.value);
        lower_.open = false;
      }
      if (upper_.finite()) {
        upper_.value = upper_.open ? ceil_of(upper_.value) - 1 : floor_of(upper_.value);
        upper_.open = false;
      }
    }
    if (is_empty()) {
      if (density_ == Density::Dense) {
        lower_ = Bound::open_at(0);
        upper_ = Bound::open_at(0);
      } else {
        lower_ = Bound::closed(1);
        upper_ = Bound::closed(0);
      }
    }
  }

  Bound lower_;
  Bound upper_;
  Density density_;
};

inline bool is_empty(const Interval& a) { return a.is_empty(); }

inline bool contains(const Interval& a, const Rational& v) { return a.contains(v); }

inline void require_same_density(const Interval& a, const Interval& b) {
  if (a.density() != b.density())
    throw density_mismatch("cannot combine " + std::string(to_string(a.density())) +
                           " interval " + a.to_string() + " with " +
                           std::string(to_string(b.density())) + " interval " +
                           b.to_string());
}

/// Greatest lower of the lowers, least upper of the uppers; on a tie the
/// open end wins.
inline Interval intersect(const Interval& a, const Interval& b) {
  require_same_density(a, b);
  const Bound& lo = detail::lower_looser_or_equal(a.lower(), b.lower()) ? b.lower() : a.lower();
  const Bound& hi = detail::upper_looser_or_equal(a.upper(), b.upper()) ? b.upper() : a.upper();
  return Interval(lo, hi, a.density());
}

/// Every member of `a` is a member of `b`. The empty interval is a subset
/// of everything.
inline bool is_subset(const Interval& a, const Interval& b) {
  require_same_density(a, b);
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return detail::lower_looser_or_equal(b.lower(), a.lower()) &&
         detail::upper_looser_or_equal(b.upper(), a.upper());
}

}  // namespace oax
