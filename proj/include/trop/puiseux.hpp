#pragma once

// Finite Puiseux series in t with rational exponents, their signed
// valuation, and lifts of signed tropical convex combinations.

#include <string>
#include <utility>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

class PuiseuxSeries {
 public:
  struct Term {
    Rational coeff;
    Rational exp;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxSeries() = default;
  /// Terms in any order; like exponents are merged and zeros removed.
  explicit PuiseuxSeries(std::vector<Term> terms);
  static PuiseuxSeries monomial(Rational coeff, Rational exp);

  /// Strictly decreasing exponents, non-zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  std::vector<Term> terms_;
};

PuiseuxSeries p_add(const PuiseuxSeries& f, const PuiseuxSeries& g);
PuiseuxSeries p_mul(const PuiseuxSeries& f, const PuiseuxSeries& g);
PuiseuxSeries p_neg(const PuiseuxSeries& f);

inline PuiseuxSeries operator+(const PuiseuxSeries& f, const PuiseuxSeries& g) { return p_add(f, g); }
inline PuiseuxSeries operator*(const PuiseuxSeries& f, const PuiseuxSeries& g) { return p_mul(f, g); }
inline PuiseuxSeries operator-(const PuiseuxSeries& f) { return p_neg(f); }

/// Sign of the leading coefficient with the leading exponent as magnitude.
SymNum sval(const PuiseuxSeries& f);

/// `c1*t^e1 + c2*t^e2 + ...`, or `0`.
std::string to_string(const PuiseuxSeries& f);

using PuiseuxMatrix = std::vector<std::vector<PuiseuxSeries>>;

/// Lift of the signed matrix A whose combination with weights t^{x_j} has
/// signed valuation b. Requires x >= zero with max 0 and b in U(A x); throws
/// std::invalid_argument otherwise.
PuiseuxMatrix lift_construct(const SymMatrix& a, const SymVector& x, const SymVector& b);

/// Builds the lift without checking preconditions and checks that it
/// tropicalizes to A and that sum_j t^{x_j} a_j has signed valuation
/// b (.) max(x).
bool lift_verify(const SymMatrix& a, const SymVector& x, const SymVector& b);

/// Sum over j of t^{x_j} times column j.
std::vector<PuiseuxSeries> lift_combination(const PuiseuxMatrix& lift, const SymVector& x);

}  // namespace trop
