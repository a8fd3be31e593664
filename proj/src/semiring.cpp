#include "trop/semiring.hpp"

#include <cctype>
#include <ostream>

namespace trop {

SymNum SymNum::with_sign(Sign sign, Rational mag) {
  if (sign == Sign::Zero) return {};
  return {sign, std::move(mag)};
}

SymNum add(const SymNum& x, const SymNum& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int c = cmp(x.mag(), y.mag());
  if (c > 0) return x;
  if (c < 0) return y;
  if (x.sign() == y.sign() && x.is_signed()) return x;
  return SymNum::bal(x.mag());
}

SymNum mul(const SymNum& x, const SymNum& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Rational mag = x.mag() + y.mag();
  if (x.is_balanced() || y.is_balanced()) return SymNum::bal(std::move(mag));
  if (x.sign() == y.sign()) return SymNum::pos(std::move(mag));
  return SymNum::neg(std::move(mag));
}

SymNum neg(const SymNum& x) {
  switch (x.sign()) {
    case Sign::Pos:
      return SymNum::neg(x.mag());
    case Sign::Neg:
      return SymNum::pos(x.mag());
    default:
      return x;
  }
}

SymNum abs(const SymNum& x) {
  if (x.is_zero()) return x;
  return SymNum::pos(x.mag());
}

SymNum inverse(const SymNum& x) {
  if (x.is_zero() || x.is_balanced()) {
    throw std::domain_error("inverse is defined only for signed non-zero elements");
  }
  return SymNum::with_sign(x.sign(), -x.mag());
}

bool strict_gt(const SymNum& x, const SymNum& y) { return (x - y).is_pos(); }

bool balance(const SymNum& x, const SymNum& y) {
  SymNum d = x - y;
  return d.is_balanced() || d.is_zero();
}

bool teq(const SymNum& x, const SymNum& y) { return !(x - y).is_neg(); }

bool geq(const SymNum& x, const SymNum& y) { return x == y || strict_gt(x, y); }

Ordering compare(const SymNum& x, const SymNum& y) {
  if (x == y) return Ordering::Equal;
  if (strict_gt(x, y)) return Ordering::Greater;
  if (strict_gt(y, x)) return Ordering::Less;
  return Ordering::Incomparable;
}

bool signed_less(const SymNum& x, const SymNum& y) {
  if (x.is_balanced() || y.is_balanced()) {
    throw std::invalid_argument("signed_less: balanced argument");
  }
  auto rank = [](const SymNum& v) {
    return v.is_neg() ? 0 : v.is_zero() ? 1 : 2;
  };
  int rx = rank(x);
  int ry = rank(y);
  if (rx != ry) return rx < ry;
  if (rx == 1) return false;
  if (rx == 2) return x.mag() < y.mag();
  return x.mag() > y.mag();
}

bool Interval::contains(const SymNum& x) const {
  if (!x.is_signed()) return false;
  return !signed_less(x, lo) && !signed_less(hi, x);
}

Interval uncomp(const SymNum& a) {
  if (a.is_balanced()) return {SymNum::neg(a.mag()), SymNum::pos(a.mag())};
  return {a, a};
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const SymNum& x) {
  switch (x.sign()) {
    case Sign::Zero:
      return "_";
    case Sign::Pos:
      return to_string(x.mag());
    case Sign::Neg:
      return "~" + to_string(x.mag());
    case Sign::Bal:
      return "*" + to_string(x.mag());
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const SymNum& x) { return os << to_string(x); }

namespace {

[[noreturn]] void fail(const std::string& msg, std::size_t column) {
  throw ParseError(msg, 1, column + 1);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(std::string("expected ") + what, pos);
    return std::string(text.substr(start, pos - start));
  };
  std::string whole = digits("digits");
  Rational value;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string frac = digits("fraction digits");
    mpz_class num(whole + frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(num, den);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_col = pos;
    mpz_class den(digits("denominator"));
    if (den == 0) fail("zero denominator", den_col);
    value = Rational(mpz_class(whole), den);
  } else {
    value = Rational(mpz_class(whole));
  }
  if (pos != text.size()) fail("unexpected character '" + std::string(1, text[pos]) + "'", pos);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

SymNum parse_symnum(std::string_view text) {
  if (text.empty()) fail("empty number", 0);
  if (text == "_") return {};
  Sign sign = Sign::Pos;
  std::size_t offset = 0;
  if (text[0] == '~') {
    sign = Sign::Neg;
    offset = 1;
  } else if (text[0] == '*') {
    sign = Sign::Bal;
    offset = 1;
  }
  try {
    return SymNum::with_sign(sign, parse_rational(text.substr(offset)));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'", 1,
                     e.column() + offset);
  }
}

}  // namespace trop
