#include "trop/hyperfield.hpp"

#include <stdexcept>

namespace trop {

namespace {

void require_signed(const SymNum& x, const char* what) {
  if (x.is_balanced()) throw std::invalid_argument(std::string(what) + ": balanced argument");
}

}  // namespace

bool HValue::contains(const SymNum& x) const {
  if (is_single()) return as_single() == x;
  return as_interval().contains(x);
}

HValue hadd(const SymNum& x, const SymNum& y) {
  require_signed(x, "hadd");
  require_signed(y, "hadd");
  if (x.is_zero()) return HValue::single(y);
  if (y.is_zero()) return HValue::single(x);
  if (x.mag() > y.mag()) return HValue::single(x);
  if (y.mag() > x.mag()) return HValue::single(y);
  if (x.sign() == y.sign()) return HValue::single(x);
  return HValue::interval(x.mag());
}

HValue hadd(const HValue& acc, const SymNum& y) {
  if (acc.is_single()) return hadd(acc.as_single(), y);
  require_signed(y, "hadd");
  const Rational& m = acc.as_interval().hi.mag();
  if (!y.is_zero() && y.mag() > m) return HValue::single(y);
  return acc;
}

bool hconv_check(const SymMatrix& v, const SymVector& lambda, const SymVector& z) {
  if (lambda.size() != v.cols() || z.size() != v.rows()) {
    throw std::invalid_argument("hconv_check: dimension mismatch");
  }
  if (!v.is_signed()) throw std::invalid_argument("hconv_check: balanced generator entry");
  HValue total = HValue::single(SymNum());
  for (const SymNum& w : lambda) {
    if (w.is_neg() || w.is_balanced()) throw std::invalid_argument("hconv_check: negative weight");
    total = hadd(total, w);
  }
  if (!total.is_single() || !(total.as_single() == SymNum::pos(0))) {
    throw std::invalid_argument("hconv_check: weights must have maximum 0");
  }
  for (std::size_t i = 0; i < v.rows(); ++i) {
    HValue acc = HValue::single(SymNum());
    for (std::size_t j = 0; j < v.cols(); ++j) acc = hadd(acc, v(i, j) * lambda[j]);
    require_signed(z[i], "hconv_check");
    if (!acc.contains(z[i])) return false;
  }
  return true;
}

SymNum cancellative_sum(const SymNum& x, const SymNum& y) {
  require_signed(x, "cancellative_sum");
  require_signed(y, "cancellative_sum");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.mag() > y.mag()) return x;
  if (y.mag() > x.mag()) return y;
  if (x.sign() == y.sign()) return x;
  return {};
}

}  // namespace trop
