#include "trop/puiseux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace trop {

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms) {
  std::map<Rational, Rational, std::greater<>> merged;
  for (Term& t : terms) merged[t.exp] += t.coeff;
  for (auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({c, e});
  }
}

PuiseuxSeries PuiseuxSeries::monomial(Rational coeff, Rational exp) {
  return PuiseuxSeries({{std::move(coeff), std::move(exp)}});
}

PuiseuxSeries p_add(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  std::vector<PuiseuxSeries::Term> all = f.terms();
  all.insert(all.end(), g.terms().begin(), g.terms().end());
  return PuiseuxSeries(std::move(all));
}

PuiseuxSeries p_mul(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  std::vector<PuiseuxSeries::Term> all;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) all.push_back({a.coeff * b.coeff, a.exp + b.exp});
  }
  return PuiseuxSeries(std::move(all));
}

PuiseuxSeries p_neg(const PuiseuxSeries& f) {
  std::vector<PuiseuxSeries::Term> all = f.terms();
  for (auto& t : all) t.coeff = -t.coeff;
  return PuiseuxSeries(std::move(all));
}

SymNum sval(const PuiseuxSeries& f) {
  if (f.is_zero()) return {};
  const auto& lead = f.terms().front();
  return lead.coeff > 0 ? SymNum::pos(lead.exp) : SymNum::neg(lead.exp);
}

std::string to_string(const PuiseuxSeries& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    out += t.coeff.get_str() + "*t^" + t.exp.get_str();
  }
  return out;
}

namespace {

PuiseuxSeries signed_monomial(const SymNum& v, const Rational& shift = Rational(0)) {
  if (v.is_zero()) return {};
  return PuiseuxSeries::monomial(Rational(v.is_neg() ? -1 : 1), Rational(v.mag() + shift));
}

// Lift with the correction term of each balanced row placed at a column of
// the maximizing set whose sign is kept. nullopt when no column works.
std::optional<PuiseuxMatrix> build_lift(const SymMatrix& a, const SymVector& x,
                                        const SymVector& b) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  std::optional<Rational> top;
  for (const SymNum& w : x) {
    if (!w.is_zero() && (!top || w.mag() > *top)) top = w.mag();
  }
  if (!top) return std::nullopt;

  PuiseuxMatrix lift(d, std::vector<PuiseuxSeries>(n));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) lift[i][j] = signed_monomial(a(i, j));

    SymNum target = b[i] * SymNum::pos(*top);
    SymNum p;
    for (std::size_t k = 0; k < n; ++k) p += a(i, k) * x[k];
    if (p.is_signed() && p == target) continue;
    if (p.is_zero()) return std::nullopt;

    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero() || x[k].is_zero()) continue;
      if (a(i, k).mag() + x[k].mag() != p.mag()) continue;
      (a(i, k).is_pos() ? plus : minus).push_back(k);
    }
    int beta = 0;
    if (!target.is_zero() && target.mag() == p.mag()) beta = target.is_pos() ? 1 : -1;
    const int excess = static_cast<int>(minus.size()) - static_cast<int>(plus.size()) + beta;
    bool plus_ok = !plus.empty() && excess + 1 > 0;
    bool minus_ok = !minus.empty() && excess - 1 < 0;
    if (!plus_ok && !minus_ok) return std::nullopt;
    const std::vector<std::size_t>* side = plus_ok ? &plus : &minus;
    if (plus_ok && minus_ok) {
      if (minus.size() < plus.size() || (minus.size() == plus.size() && minus.front() < plus.front())) {
        side = &minus;
      }
    }
    const std::size_t ell = side->front();

    PuiseuxSeries alpha = signed_monomial(target);
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k].is_zero()) continue;
      alpha = alpha + p_neg(signed_monomial(a(i, k), x[k].mag()));
    }
    alpha = alpha * PuiseuxSeries::monomial(Rational(1), Rational(-x[ell].mag()));
    lift[i][ell] = lift[i][ell] + alpha;
  }
  return lift;
}

}  // namespace

std::vector<PuiseuxSeries> lift_combination(const PuiseuxMatrix& lift, const SymVector& x) {
  std::vector<PuiseuxSeries> out(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i) {
    if (lift[i].size() != x.size()) throw std::invalid_argument("lift_combination: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      out[i] = out[i] + PuiseuxSeries::monomial(Rational(1), x[j].mag()) * lift[i][j];
    }
  }
  return out;
}

PuiseuxMatrix lift_construct(const SymMatrix& a, const SymVector& x, const SymVector& b) {
  if (x.size() != a.cols() || b.size() != a.rows()) {
    throw std::invalid_argument("lift_construct: dimension mismatch");
  }
  if (!a.is_signed()) throw std::invalid_argument("lift_construct: balanced matrix entry");
  SymNum total;
  for (const SymNum& w : x) {
    if (w.is_neg() || w.is_balanced()) throw std::invalid_argument("lift_construct: negative weight");
    total += w;
  }
  if (!(total == SymNum::pos(0))) throw std::invalid_argument("lift_construct: weights must have maximum 0");
  SymVector p = mat_vec(a, x);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_signed() || !uncomp(p[i]).contains(b[i])) {
      throw std::invalid_argument("lift_construct: b is not in U(A x) at coordinate " +
                                  std::to_string(i + 1));
    }
  }
  auto lift = build_lift(a, x, b);
  if (!lift) throw std::logic_error("lift_construct: no admissible correction column");
  return *lift;
}

bool lift_verify(const SymMatrix& a, const SymVector& x, const SymVector& b) {
  if (x.size() != a.cols() || b.size() != a.rows() || !a.is_signed()) return false;
  for (const SymNum& w : x) {
    if (w.is_neg() || w.is_balanced()) return false;
  }
  for (const SymNum& v : b) {
    if (v.is_balanced()) return false;
  }
  auto lift = build_lift(a, x, b);
  if (!lift) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(sval((*lift)[i][j]) == a(i, j))) return false;
    }
  }
  SymNum top;
  for (const SymNum& w : x) top += w;
  auto comb = lift_combination(*lift, x);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!(sval(comb[i]) == b[i] * top)) return false;
  }
  return true;
}

}  // namespace trop
