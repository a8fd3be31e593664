#pragma once

// Signed tropical numbers and the symmetrized max-plus semiring.
//
// An element is a sign tag together with an exact rational magnitude. The
// tropical zero (-infinity) carries no magnitude. Balanced elements are the
// result of adding two opposite-sign numbers of equal magnitude.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trop {

using Rational = mpq_class;

enum class Sign : std::uint8_t { Zero, Pos, Neg, Bal };

/// Result of comparing two elements under the extended order.
enum class Ordering : std::uint8_t { Less, Equal, Greater, Incomparable };

class SymNum {
 public:
  SymNum() = default;

  static SymNum zero() { return {}; }
  static SymNum pos(Rational mag) { return {Sign::Pos, std::move(mag)}; }
  static SymNum neg(Rational mag) { return {Sign::Neg, std::move(mag)}; }
  static SymNum bal(Rational mag) { return {Sign::Bal, std::move(mag)}; }
  static SymNum pos(long mag) { return pos(Rational(mag)); }
  static SymNum neg(long mag) { return neg(Rational(mag)); }
  static SymNum bal(long mag) { return bal(Rational(mag)); }
  static SymNum with_sign(Sign sign, Rational mag);

  Sign sign() const { return sign_; }

  // Only meaningful for non-zero elements.
  const Rational& mag() const { return mag_; }

  bool is_zero() const { return sign_ == Sign::Zero; }
  bool is_pos() const { return sign_ == Sign::Pos; }
  bool is_neg() const { return sign_ == Sign::Neg; }
  bool is_balanced() const { return sign_ == Sign::Bal; }
  /// Element of the signed numbers: positive, negative or zero.
  bool is_signed() const { return sign_ != Sign::Bal; }

  friend bool operator==(const SymNum& a, const SymNum& b) {
    if (a.sign_ != b.sign_) return false;
    return a.sign_ == Sign::Zero || a.mag_ == b.mag_;
  }

 private:
  SymNum(Sign sign, Rational mag) : sign_(sign), mag_(std::move(mag)) {}

  Sign sign_ = Sign::Zero;
  Rational mag_;
};

SymNum add(const SymNum& x, const SymNum& y);
SymNum mul(const SymNum& x, const SymNum& y);
SymNum neg(const SymNum& x);
SymNum abs(const SymNum& x);

/// Multiplicative inverse: magnitude negated, sign kept. Signed non-zero only.
SymNum inverse(const SymNum& x);

inline SymNum operator+(const SymNum& x, const SymNum& y) { return add(x, y); }
inline SymNum operator*(const SymNum& x, const SymNum& y) { return mul(x, y); }
inline SymNum operator-(const SymNum& x) { return neg(x); }
inline SymNum operator-(const SymNum& x, const SymNum& y) { return add(x, neg(y)); }
inline SymNum& operator+=(SymNum& x, const SymNum& y) { return x = add(x, y); }

/// x > y, i.e. x - y is strictly positive.
bool strict_gt(const SymNum& x, const SymNum& y);

/// Balance relation: x - y is balanced or zero. Not transitive.
bool balance(const SymNum& x, const SymNum& y);

/// x - y is positive, balanced or zero.
bool teq(const SymNum& x, const SymNum& y);

/// Non-strict extended order: strict_gt or equality. A partial order.
bool geq(const SymNum& x, const SymNum& y);

Ordering compare(const SymNum& x, const SymNum& y);

/// Closed interval of signed numbers under the total order on signed numbers.
struct Interval {
  SymNum lo;
  SymNum hi;

  bool contains(const SymNum& x) const;
  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Signed numbers incomparable to `a`: [-|a|, |a|] for balanced a, {a} otherwise.
Interval uncomp(const SymNum& a);

/// Total order on signed numbers; both arguments must be signed.
bool signed_less(const SymNum& x, const SymNum& y);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Canonical text: `_` zero, `r` positive, `~r` negative, `*r` balanced, where
/// r is an integer, a decimal, or p/q.
std::string to_string(const SymNum& x);
std::string to_string(const Rational& r);
SymNum parse_symnum(std::string_view text);
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const SymNum& x);

}  // namespace trop
