#include "trop/elimination.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "trop/convexity.hpp"

namespace trop {

bool verify_separator(const SymMatrix& a, const SymVector& y) {
  if (y.size() != a.rows()) return false;
  if (!std::all_of(y.begin(), y.end(), [](const SymNum& v) { return v.is_signed(); })) {
    return false;
  }
  SymVector p = vec_mat(y, a);
  return std::all_of(p.begin(), p.end(), [](const SymNum& v) { return v.is_pos(); });
}

bool verify_kernel(const SymMatrix& a, const SymVector& x) {
  if (x.size() != a.cols()) return false;
  bool nonzero = false;
  for (const SymNum& v : x) {
    if (v.is_pos()) {
      nonzero = true;
    } else if (!v.is_zero()) {
      return false;
    }
  }
  if (!nonzero) return false;
  SymVector p = mat_vec(a, x);
  return std::all_of(p.begin(), p.end(),
                     [](const SymNum& v) { return v.is_balanced() || v.is_zero(); });
}

bool verify(const SymMatrix& a, const Certificate& c) {
  return c.kind == Certificate::Kind::Kernel ? verify_kernel(a, c.vector)
                                             : verify_separator(a, c.vector);
}

SymMatrix fm_step_strict(const SymMatrix& a, std::size_t i) {
  RowScaling rs = scale_normalize_row(a, i);
  SymMatrix t = incidence_T(a, i);
  return xi(a.without_row(i) * rs.diag * t);
}

namespace {

SymNum column_scale(const SymVector& c) {
  const Rational* top = nullptr;
  for (const SymNum& v : c) {
    if (!v.is_zero() && (top == nullptr || v.mag() > *top)) top = &v.mag();
  }
  return top == nullptr ? SymNum::pos(0) : SymNum::pos(Rational(-*top));
}

// Positive column scaling followed by deduplication. Neither changes sep.
SymMatrix normalize_columns(const SymMatrix& a) {
  SymMatrix out(a.rows(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SymVector c = a.column(j);
    out.append_column(scale(column_scale(c), c));
  }
  return dedup_columns(out);
}

SymNum lower_to_signed(const SymNum& v) { return v.is_balanced() ? SymNum::pos(v.mag()) : v; }
SymNum upper_to_signed(const SymNum& v) { return v.is_balanced() ? SymNum::neg(v.mag()) : v; }

// A signed c with every lower bound < c < every upper bound.
std::optional<SymNum> pick_between(const std::vector<SymNum>& lower,
                                   const std::vector<SymNum>& upper) {
  std::optional<SymNum> alpha;
  std::optional<SymNum> beta;
  for (const SymNum& l : lower) {
    if (!alpha || signed_less(*alpha, l)) alpha = l;
  }
  for (const SymNum& u : upper) {
    if (!beta || signed_less(u, *beta)) beta = u;
  }
  if (!alpha && !beta) return SymNum::pos(0);
  if (alpha && beta && !signed_less(*alpha, *beta)) return std::nullopt;
  if (!beta) {
    const SymNum& a = *alpha;
    if (a.is_zero()) return SymNum::pos(0);
    if (a.is_pos()) return SymNum::pos(Rational(a.mag() + 1));
    return SymNum::neg(Rational(a.mag() - 1));
  }
  if (!alpha) {
    const SymNum& b = *beta;
    if (b.is_zero()) return SymNum::neg(0);
    if (b.is_pos()) return SymNum::pos(Rational(b.mag() - 1));
    return SymNum::neg(Rational(b.mag() + 1));
  }
  const SymNum& a = *alpha;
  const SymNum& b = *beta;
  if (a.is_pos() && b.is_pos()) return SymNum::pos(Rational((a.mag() + b.mag()) / 2));
  if (a.is_neg() && b.is_neg()) return SymNum::neg(Rational((a.mag() + b.mag()) / 2));
  if (a.is_neg() && b.is_pos()) return SymNum();
  if (a.is_zero()) return SymNum::pos(Rational(b.mag() - 1));
  return SymNum::neg(Rational(a.mag() - 1));
}

// Given y' for rows 0..d-1, a value c for row d making every column of
// (y', c)^T A strictly positive.
std::optional<SymNum> extend_separator(const SymMatrix& a, const SymVector& head) {
  const std::size_t d = a.rows() - 1;
  std::vector<SymNum> lower;
  std::vector<SymNum> upper;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SymNum w;
    for (std::size_t r = 0; r < d; ++r) w += head[r] * a(r, j);
    const SymNum& e = a(d, j);
    switch (e.sign()) {
      case Sign::Zero:
        if (!w.is_pos()) return std::nullopt;
        break;
      case Sign::Pos:
        lower.push_back(lower_to_signed(-w * inverse(e)));
        break;
      case Sign::Neg:
        upper.push_back(upper_to_signed(w * inverse(abs(e))));
        break;
      case Sign::Bal: {
        if (!w.is_pos()) return std::nullopt;
        SymNum inv = inverse(abs(e));
        lower.push_back(-w * inv);
        upper.push_back(w * inv);
        break;
      }
    }
  }
  return pick_between(lower, upper);
}

std::optional<SymVector> sep_recursive(const SymMatrix& a) {
  if (a.rows() == 0) {
    if (a.cols() == 0) return SymVector{};
    return std::nullopt;
  }
  const std::size_t d = a.rows() - 1;
  auto head = sep_recursive(normalize_columns(fm_step_strict(a, d)));
  if (!head) return std::nullopt;
  auto c = extend_separator(a, *head);
  if (!c) return std::nullopt;
  head->push_back(*c);
  return head;
}

SymVector normalize_nonnegative(SymVector x) {
  SymNum s = column_scale(x);
  return scale(s, x);
}

std::optional<SymVector> nnker_recursive(const SymMatrix& a) {
  if (a.cols() == 0) return std::nullopt;
  if (a.rows() == 0) return SymVector(a.cols(), SymNum::pos(0));
  const std::size_t d = a.rows() - 1;
  RowScaling rs = scale_normalize_row(a, d);
  SymMatrix c = rs.diag * incidence_T(a, d);
  SymMatrix b = a.without_row(d) * c;

  // Scale columns positively and merge columns of b that coincide; merged
  // multiplier columns are added, which keeps the kernel property and the
  // support of the final witness maximal.
  std::vector<SymVector> b_cols;
  std::vector<SymVector> c_cols;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    SymVector bc = b.column(j);
    SymNum s = column_scale(bc);
    bc = scale(s, bc);
    SymVector cc = scale(s, c.column(j));
    auto it = std::find(b_cols.begin(), b_cols.end(), bc);
    if (it == b_cols.end()) {
      b_cols.push_back(std::move(bc));
      c_cols.push_back(std::move(cc));
    } else {
      SymVector& target = c_cols[static_cast<std::size_t>(it - b_cols.begin())];
      target = add(target, cc);
    }
  }
  auto z = nnker_recursive(SymMatrix::from_columns(b_cols, b.rows()));
  if (!z) return std::nullopt;
  SymMatrix merged = SymMatrix::from_columns(c_cols, a.cols());
  return normalize_nonnegative(mat_vec(merged, *z));
}

}  // namespace

std::optional<SymVector> sep_solve(const SymMatrix& a) {
  auto y = sep_recursive(a);
  if (y && !verify_separator(a, *y)) return std::nullopt;
  return y;
}

std::optional<SymVector> nnker_solve(const SymMatrix& a) {
  auto x = nnker_recursive(a);
  if (x && !verify_kernel(a, *x)) return std::nullopt;
  return x;
}

Certificate farkas(const SymMatrix& a) {
  if (auto y = sep_solve(a)) return {Certificate::Kind::Separator, std::move(*y)};
  if (auto x = nnker_solve(a)) return {Certificate::Kind::Kernel, std::move(*x)};
  throw std::logic_error("farkas: neither a separator nor a kernel element was found");
}

namespace {

bool is_positive_constant_only(const AffineRow& r) {
  if (!r.coeffs.front().is_pos()) return false;
  return std::all_of(r.coeffs.begin() + 1, r.coeffs.end(),
                     [](const SymNum& v) { return v.is_zero(); });
}

bool is_tautology(const AffineRow& r) {
  if (r.strict) return false;
  if (is_positive_constant_only(r)) return true;
  return std::all_of(r.coeffs.begin(), r.coeffs.end(),
                     [](const SymNum& v) { return v.is_zero() || v.is_balanced(); });
}

bool row_less(const AffineRow& a, const AffineRow& b) {
  if (a.strict != b.strict) return a.strict < b.strict;
  return canonical_less(a.coeffs, b.coeffs);
}

struct RowLess {
  bool operator()(const AffineRow& a, const AffineRow& b) const { return row_less(a, b); }
};

}  // namespace

std::vector<AffineRow> fm_step_nonstrict(const std::vector<AffineRow>& rows, std::size_t i) {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::vector<std::size_t> zero;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const AffineRow& row = rows[r];
    if (row.strict) throw std::invalid_argument("fm_step_nonstrict: strict row");
    if (i == 0 || i >= row.coeffs.size()) {
      throw std::out_of_range("fm_step_nonstrict: variable index out of range");
    }
    switch (row.coeffs[i].sign()) {
      case Sign::Pos:
        plus.push_back(r);
        break;
      case Sign::Neg:
        minus.push_back(r);
        break;
      case Sign::Zero:
        zero.push_back(r);
        break;
      case Sign::Bal:
        throw std::invalid_argument("fm_step_nonstrict: balanced coefficient in row " +
                                    std::to_string(r + 1));
    }
  }
  std::vector<AffineRow> out;
  std::set<AffineRow, RowLess> seen;
  auto emit = [&](AffineRow row) {
    row.coeffs[i] = SymNum();
    if (is_positive_constant_only(row)) return;
    if (seen.insert(row).second) out.push_back(std::move(row));
  };
  for (std::size_t k : plus) {
    SymVector sk = scale(inverse(abs(rows[k].coeffs[i])), rows[k].coeffs);
    for (std::size_t l : minus) {
      SymVector sl = scale(inverse(abs(rows[l].coeffs[i])), rows[l].coeffs);
      emit({add(sk, sl), false});
    }
  }
  for (std::size_t k : zero) emit(rows[k]);
  return out;
}

std::vector<AffineRow> prune_rows(const std::vector<AffineRow>& rows) {
  std::vector<AffineRow> out;
  std::set<AffineRow, RowLess> seen;
  for (const AffineRow& r : rows) {
    if (is_tautology(r)) continue;
    AffineRow key{scale(column_scale(r.coeffs), r.coeffs), r.strict};
    if (seen.insert(key).second) out.push_back(r);
  }
  return out;
}

SymNum evaluate_row(const AffineRow& row, const SymVector& x) {
  if (x.size() + 1 != row.coeffs.size()) {
    throw std::invalid_argument("evaluate_row: expected " +
                                std::to_string(row.coeffs.size() - 1) + " coordinates, got " +
                                std::to_string(x.size()));
  }
  SymNum s = row.coeffs[0];
  for (std::size_t k = 0; k < x.size(); ++k) s += row.coeffs[k + 1] * x[k];
  return s;
}

namespace {

bool row_holds(const AffineRow& row, const SymVector& x) {
  SymNum v = evaluate_row(row, x);
  return row.strict ? v.is_pos() : !v.is_neg();
}

// Weight values at which the piecewise-linear bound functions can attain
// their extrema: chains of tie conditions starting at 0 or at a tie with the
// constant term.
std::vector<Rational> candidate_weights(const AffineRow& row, const SymMatrix& v) {
  const std::size_t m = v.rows();
  const std::size_t n = v.cols();
  std::set<Rational> start{Rational(0)};
  std::set<Rational> diffs;
  const SymVector& c = row.coeffs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (v(k, j).is_zero() || c[k + 1].is_zero()) continue;
      Rational left = c[k + 1].mag() + v(k, j).mag();
      if (!c[0].is_zero()) start.insert(Rational(c[0].mag() - left));
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj == j) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (v(l, jj).is_zero()) continue;
          if (l == k) diffs.insert(Rational(v(l, jj).mag() - v(k, j).mag()));
          if (!c[l + 1].is_zero()) {
            diffs.insert(Rational(c[l + 1].mag() + v(l, jj).mag() - left));
          }
        }
      }
    }
  }
  std::set<Rational> values = start;
  for (std::size_t step = 1; step < n; ++step) {
    std::set<Rational> next = values;
    for (const Rational& x : values) {
      for (const Rational& dlt : diffs) next.insert(Rational(x + dlt));
    }
    values = std::move(next);
  }
  std::vector<Rational> out;
  for (const Rational& x : values) {
    if (x <= 0) out.push_back(x);
  }
  return out;
}

SymNum max_signed(const SymNum& a, const SymNum& b) { return signed_less(a, b) ? b : a; }
SymNum min_signed(const SymNum& a, const SymNum& b) { return signed_less(a, b) ? a : b; }

// -|w| for balanced w, -w otherwise: the threshold t with w (+) t not negative
// exactly when t >= threshold.
SymNum threshold_of(const SymNum& w) {
  if (w.is_balanced()) return SymNum::neg(w.mag());
  return -w;
}

struct Bounds {
  std::optional<SymNum> lower;
  std::optional<SymNum> upper;
};

// Bounds on b imposed by all points of U(V (.) lambda).
void accumulate_bounds(const AffineRow& row, std::size_t i, const SymVector& q, Bounds& acc) {
  const SymVector& c = row.coeffs;
  const SymNum& qi = q[i - 1];
  if (qi.is_zero()) return;
  SymNum fixed = c[0];
  std::optional<Rational> free_neg;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (k == i) continue;
    const SymNum& qk = q[k - 1];
    if (!qk.is_balanced()) {
      fixed += c[k] * qk;
    } else if (c[k].is_signed() && !c[k].is_zero()) {
      Rational m = c[k].mag() + qk.mag();
      if (!free_neg || m > *free_neg) free_neg = m;
    }
  }
  SymNum t = threshold_of(fixed);
  if (free_neg) t = max_signed(t, threshold_of(fixed + SymNum::neg(*free_neg)));

  auto push_lower = [&](const SymNum& b) { acc.lower = acc.lower ? max_signed(*acc.lower, b) : b; };
  auto push_upper = [&](const SymNum& b) { acc.upper = acc.upper ? min_signed(*acc.upper, b) : b; };
  if (qi.is_balanced()) {
    if (t.is_pos()) throw std::runtime_error("resolve_balanced_nonstrict: row not valid on hull");
    SymNum inv = SymNum::pos(Rational(-qi.mag()));
    push_lower(t * inv);
    push_upper(-t * inv);
  } else if (qi.is_pos()) {
    push_lower(t * inverse(qi));
  } else {
    push_upper(-t * inverse(abs(qi)));
  }
}

void enumerate_weights(const std::vector<SymNum>& values, std::size_t n, SymVector& current,
                       bool has_top, const std::function<void(const SymVector&)>& visit) {
  if (current.size() == n) {
    if (has_top) visit(current);
    return;
  }
  for (const SymNum& v : values) {
    current.push_back(v);
    bool top = has_top || (v.is_pos() && v.mag() == 0);
    enumerate_weights(values, n, current, top, visit);
    current.pop_back();
  }
}

}  // namespace

AffineRow resolve_balanced_nonstrict(const AffineRow& row, std::size_t i,
                                     const SymMatrix& generators) {
  if (i >= row.coeffs.size()) throw std::out_of_range("resolve_balanced_nonstrict: bad slot");
  const SymNum& ci = row.coeffs[i];
  if (!ci.is_balanced()) return row;
  AffineRow out = row;
  if (i == 0) {
    out.coeffs[0] = SymNum::pos(ci.mag());
    return out;
  }
  if (generators.rows() + 1 != row.coeffs.size()) {
    throw std::invalid_argument("resolve_balanced_nonstrict: generator dimension mismatch");
  }

  std::vector<SymNum> values;
  for (const Rational& w : candidate_weights(row, generators)) values.push_back(SymNum::pos(w));
  values.push_back(SymNum());
  Bounds bounds;
  SymVector current;
  enumerate_weights(values, generators.cols(), current, false, [&](const SymVector& lambda) {
    accumulate_bounds(row, i, mat_vec(generators, lambda), bounds);
  });

  SymNum lo = SymNum::neg(ci.mag());
  SymNum hi = SymNum::pos(ci.mag());
  if (bounds.lower) lo = max_signed(lo, *bounds.lower);
  if (bounds.upper) hi = min_signed(hi, *bounds.upper);

  std::vector<SymNum> candidates;
  if (!signed_less(hi, lo)) {
    if (lo.is_pos()) {
      candidates.push_back(lo);
    } else if (hi.is_neg()) {
      candidates.push_back(hi);
    } else {
      candidates.push_back(SymNum());
    }
    candidates.push_back(lo);
    candidates.push_back(hi);
  }
  candidates.push_back(SymNum::pos(ci.mag()));
  candidates.push_back(SymNum::neg(ci.mag()));

  std::vector<SymVector> points = hull_test_points(generators);
  for (const SymNum& b : candidates) {
    out.coeffs[i] = b;
    bool ok = std::all_of(points.begin(), points.end(),
                          [&](const SymVector& p) { return row_holds(out, p); });
    if (ok) return out;
  }
  throw std::runtime_error("resolve_balanced_nonstrict: no signed coefficient validates in slot " +
                           std::to_string(i));
}

std::vector<SymVector> hull_test_points(const SymMatrix& v) {
  std::vector<SymVector> out = v.columns();
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t k = j + 1; k < v.cols(); ++k) {
      auto s = segment_samples(segment(v.column(j), v.column(k)));
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return out;
}

std::optional<SymVector> grid_search_system(const SymMatrix& a, const SymVector& b, Relation rel,
                                            const std::vector<SymNum>& grid) {
  if (b.size() != a.rows()) throw std::invalid_argument("grid_search_system: dimension mismatch");
  const std::size_t n = a.cols();
  if (grid.empty()) return std::nullopt;
  std::vector<std::size_t> idx(n, 0);
  SymVector x(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) x[j] = grid[idx[j]];
    SymVector ax = mat_vec(a, x);
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      switch (rel) {
        case Relation::Balance:
          ok = balance(ax[r], b[r]);
          break;
        case Relation::Teq:
          ok = teq(ax[r], b[r]);
          break;
        case Relation::ReverseTeq:
          ok = teq(b[r], ax[r]);
          break;
      }
    }
    if (ok) return x;
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == n) return std::nullopt;
  }
}

}  // namespace trop
