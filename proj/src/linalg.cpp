#include "trop/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace trop {

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

SymMatrix SymMatrix::from_rows(const std::vector<SymVector>& rows) {
  if (rows.empty()) return {};
  SymMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw std::invalid_argument("ragged rows: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m.cols_));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * m.cols_);
  }
  return m;
}

SymMatrix SymMatrix::from_columns(const std::vector<SymVector>& columns, std::size_t rows) {
  SymMatrix m(rows, 0);
  for (const auto& c : columns) m.append_column(c);
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = SymNum::pos(0);
  return m;
}

SymMatrix SymMatrix::diagonal(const SymVector& diag) {
  SymMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

SymVector SymMatrix::row(std::size_t i) const {
  return SymVector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

SymVector SymMatrix::column(std::size_t j) const {
  SymVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<SymVector> SymMatrix::columns() const {
  std::vector<SymVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void SymMatrix::append_column(const SymVector& column) {
  if (column.size() != rows_) {
    throw std::invalid_argument("append_column: expected " + std::to_string(rows_) +
                                " entries, got " + std::to_string(column.size()));
  }
  std::vector<SymNum> next;
  next.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    next.insert(next.end(), entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    next.push_back(column[i]);
  }
  entries_ = std::move(next);
  ++cols_;
}

SymMatrix SymMatrix::without_row(std::size_t i) const {
  SymMatrix m(rows_ - 1, cols_);
  for (std::size_t r = 0, out = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t j = 0; j < cols_; ++j) m(out, j) = (*this)(r, j);
    ++out;
  }
  return m;
}

bool SymMatrix::is_signed() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SymNum& x) { return x.is_signed(); });
}

SymMatrix mat_mul(const SymMatrix& a, const SymMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " differ");
  }
  SymMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const SymNum& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        if (!b(j, k).is_zero()) c(i, k) += aij * b(j, k);
      }
    }
  }
  return c;
}

SymVector mat_vec(const SymMatrix& a, const SymVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  SymVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

SymVector vec_mat(const SymVector& y, const SymMatrix& a) {
  if (a.rows() != y.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
  SymVector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += y[i] * a(i, j);
  }
  return out;
}

SymNum dot(const SymVector& y, const SymVector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  SymNum s;
  for (std::size_t i = 0; i < x.size(); ++i) s += y[i] * x[i];
  return s;
}

SymVector scale(const SymNum& lambda, const SymVector& v) {
  SymVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = lambda * v[i];
  return out;
}

SymVector add(const SymVector& u, const SymVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("add: dimension mismatch");
  SymVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

bool canonical_less(const SymNum& a, const SymNum& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign();
  if (a.is_zero()) return false;
  return a.mag() < b.mag();
}

bool canonical_less(const SymVector& a, const SymVector& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const SymNum& x, const SymNum& y) { return canonical_less(x, y); });
}

namespace {

struct VectorLess {
  bool operator()(const SymVector& a, const SymVector& b) const { return canonical_less(a, b); }
};

}  // namespace

SymMatrix dedup_columns(const SymMatrix& a) {
  std::set<SymVector, VectorLess> seen;
  SymMatrix out(a.rows(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SymVector c = a.column(j);
    if (seen.insert(c).second) out.append_column(c);
  }
  return out;
}

SignPartition row_partition(const SymMatrix& a, std::size_t i) {
  if (i >= a.rows()) throw std::out_of_range("row_partition: row index out of range");
  SignPartition p;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    switch (a(i, j).sign()) {
      case Sign::Pos:
        p.plus.push_back(j);
        break;
      case Sign::Neg:
        p.minus.push_back(j);
        break;
      case Sign::Bal:
        p.bal.push_back(j);
        break;
      case Sign::Zero:
        p.zero.push_back(j);
        break;
    }
  }
  return p;
}

RowScaling scale_normalize_row(const SymMatrix& a, std::size_t i) {
  if (i >= a.rows()) throw std::out_of_range("scale_normalize_row: row index out of range");
  SymVector diag(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    diag[j] = a(i, j).is_zero() ? SymNum::pos(0) : SymNum::pos(-a(i, j).mag());
  }
  SymMatrix s = SymMatrix::diagonal(diag);
  return {a * s, std::move(s)};
}

namespace {

// Column pairs (k, l) in (plus or bal) x (bal or minus), lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> elimination_pairs(const SignPartition& p) {
  std::vector<std::size_t> left = p.plus;
  left.insert(left.end(), p.bal.begin(), p.bal.end());
  std::vector<std::size_t> right = p.bal;
  right.insert(right.end(), p.minus.begin(), p.minus.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k : left) {
    for (std::size_t l : right) pairs.emplace_back(k, l);
  }
  return pairs;
}

// Convex weights from the magnitudes p = |u_i| and q = |v_i|: the two
// weighted terms get equal magnitude min(p, q) and the larger weight is 0.
ConvexWeights cancelling_weights(const Rational& p, const Rational& q) {
  const Rational& m = p < q ? p : q;
  return {SymNum::pos(Rational(m - p)), SymNum::pos(Rational(m - q))};
}

}  // namespace

SymMatrix incidence_T(const SymMatrix& a, std::size_t i) {
  SignPartition p = row_partition(a, i);
  auto pairs = elimination_pairs(p);
  SymMatrix t(a.cols(), pairs.size() + p.zero.size());
  std::size_t col = 0;
  for (auto [k, l] : pairs) {
    t(k, col) = SymNum::pos(0);
    t(l, col) = SymNum::pos(0);
    ++col;
  }
  for (std::size_t j : p.zero) t(j, col++) = SymNum::pos(0);
  return t;
}

SymMatrix xi(const SymMatrix& a) {
  SymMatrix out(a.rows(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SymVector c = a.column(j);
    bool has_bal = std::any_of(c.begin(), c.end(), [](const SymNum& x) { return x.is_balanced(); });
    if (!has_bal) {
      out.append_column(c);
      continue;
    }
    SymVector up = c;
    SymVector down = c;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_balanced()) {
        up[i] = SymNum::pos(c[i].mag());
        down[i] = SymNum::neg(c[i].mag());
      }
    }
    out.append_column(up);
    out.append_column(down);
  }
  return out;
}

ConvexWeights lambda_pm(const SymVector& u, const SymVector& v, std::size_t i) {
  if (i >= u.size() || i >= v.size()) throw std::out_of_range("lambda_pm: index out of range");
  if (!u[i].is_pos() || !v[i].is_neg()) {
    throw std::invalid_argument("lambda_pm: requires u_i > zero > v_i");
  }
  return cancelling_weights(u[i].mag(), v[i].mag());
}

SymMatrix convex_incidence(const SymMatrix& a, std::size_t i) {
  SignPartition p = row_partition(a, i);
  auto pairs = elimination_pairs(p);
  SymMatrix t(a.cols(), pairs.size() + p.zero.size());
  std::size_t col = 0;
  for (auto [k, l] : pairs) {
    if (k == l) {
      t(k, col) = SymNum::pos(0);
    } else {
      ConvexWeights w = cancelling_weights(a(i, k).mag(), a(i, l).mag());
      t(k, col) = w.plus;
      t(l, col) = w.minus;
    }
    ++col;
  }
  for (std::size_t j : p.zero) t(j, col++) = SymNum::pos(0);
  return t;
}

SymMatrix zeta_i(const SymMatrix& a, std::size_t i) {
  if (i >= a.rows()) throw std::out_of_range("zeta_i: row index out of range");
  SymMatrix combined = a * convex_incidence(a, i);
  for (std::size_t j = 0; j < combined.cols(); ++j) combined(i, j) = SymNum();
  return dedup_columns(xi(combined));
}

SymMatrix zeta_full(const SymMatrix& m) {
  const std::size_t d = m.rows();
  if (d >= 8 * sizeof(unsigned)) throw std::invalid_argument("zeta_full: dimension too large");
  // Generators reachable by eliminating exactly the coordinate set `mask`,
  // in any order.
  std::map<unsigned, SymMatrix> by_set;
  by_set[0] = dedup_columns(m);
  SymMatrix all = by_set[0];
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << d); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    return __builtin_popcount(x) < __builtin_popcount(y);
  });
  for (unsigned mask : masks) {
    SymMatrix acc(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      const SymMatrix& prev = by_set.at(mask & ~(1u << i));
      SymMatrix z = zeta_i(prev, i);
      for (std::size_t j = 0; j < z.cols(); ++j) acc.append_column(z.column(j));
    }
    acc = dedup_columns(acc);
    for (std::size_t j = 0; j < acc.cols(); ++j) all.append_column(acc.column(j));
    by_set[mask] = std::move(acc);
  }
  return dedup_columns(all);
}

}  // namespace trop
