#pragma once

// The signed tropical hyperfield: multi-valued addition on signed numbers,
// hull membership evaluated through it, and the cancellative sum.

#include <variant>

#include "trop/linalg.hpp"

namespace trop {

/// A single signed number or an interval [-m, m].
class HValue {
 public:
  static HValue single(SymNum x) { return HValue(std::move(x)); }
  static HValue interval(const Rational& m) { return HValue(Interval{SymNum::neg(m), SymNum::pos(m)}); }

  bool is_single() const { return std::holds_alternative<SymNum>(value_); }
  const SymNum& as_single() const { return std::get<SymNum>(value_); }
  const Interval& as_interval() const { return std::get<Interval>(value_); }
  bool contains(const SymNum& x) const;

  friend bool operator==(const HValue&, const HValue&) = default;

 private:
  explicit HValue(SymNum x) : value_(std::move(x)) {}
  explicit HValue(Interval i) : value_(std::move(i)) {}
  std::variant<SymNum, Interval> value_;
};

/// Throws std::invalid_argument for balanced input.
HValue hadd(const SymNum& x, const SymNum& y);

/// Set-valued sum of a value with a further signed term.
HValue hadd(const HValue& acc, const SymNum& y);

/// z lies coordinatewise in the set-valued product V boxdot lambda.
/// Requires signed inputs and weights with maximum 0.
bool hconv_check(const SymMatrix& v, const SymVector& lambda, const SymVector& z);

/// Strict maximum; opposite signs of equal magnitude cancel to zero.
/// Not associative. Throws std::invalid_argument for balanced input.
SymNum cancellative_sum(const SymNum& x, const SymNum& y);

}  // namespace trop
