#pragma once

// Dense vectors and matrices over the symmetrized semiring, the tropical
// matrix product, and the auxiliary matrices used by elimination: row
// scaling, pair incidence, balanced-column splitting and the convex
// elimination matrices that generate hull intersections with coordinate
// hyperplanes.
//
// All indices are 0-based.

#include <cstddef>
#include <vector>

#include "trop/semiring.hpp"

namespace trop {

using SymVector = std::vector<SymNum>;

class SymMatrix {
 public:
  SymMatrix() = default;
  /// rows x cols matrix filled with the tropical zero.
  SymMatrix(std::size_t rows, std::size_t cols);

  static SymMatrix from_rows(const std::vector<SymVector>& rows);
  /// `rows` is needed to give an empty column list a height.
  static SymMatrix from_columns(const std::vector<SymVector>& columns, std::size_t rows);
  /// 0 on the diagonal, zero elsewhere.
  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const SymVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  SymNum& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const SymNum& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  SymVector row(std::size_t i) const;
  SymVector column(std::size_t j) const;
  std::vector<SymVector> columns() const;

  void append_column(const SymVector& column);
  SymMatrix without_row(std::size_t i) const;

  /// True when no entry is balanced.
  bool is_signed() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SymNum> entries_;
};

/// Tropical product; throws std::invalid_argument on a dimension mismatch.
SymMatrix mat_mul(const SymMatrix& a, const SymMatrix& b);
inline SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) { return mat_mul(a, b); }

SymVector mat_vec(const SymMatrix& a, const SymVector& x);
/// y^T (.) A
SymVector vec_mat(const SymVector& y, const SymMatrix& a);
SymNum dot(const SymVector& y, const SymVector& x);

SymVector scale(const SymNum& lambda, const SymVector& v);
SymVector add(const SymVector& u, const SymVector& v);

/// Strict total order on elements, used for deterministic sorting and keys.
bool canonical_less(const SymNum& a, const SymNum& b);
bool canonical_less(const SymVector& a, const SymVector& b);

/// Removes repeated columns, keeping the first occurrence of each.
SymMatrix dedup_columns(const SymMatrix& a);

/// Column indices split by the sign of the entries in one row.
struct SignPartition {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::vector<std::size_t> bal;
  std::vector<std::size_t> zero;
};

SignPartition row_partition(const SymMatrix& a, std::size_t i);

struct RowScaling {
  SymMatrix scaled;    ///< a (.) diag
  SymMatrix diag;      ///< non-negative diagonal scaling matrix
};

/// Scales columns so that row i only has entries of magnitude 0 or zero.
RowScaling scale_normalize_row(const SymMatrix& a, std::size_t i);

/// 0/zero incidence matrix pairing (plus or balanced) with (balanced or minus)
/// columns of row i, followed by the identity on the zero columns. Pair
/// columns are ordered lexicographically by (k, l).
SymMatrix incidence_T(const SymMatrix& a, std::size_t i);

/// Splits each column containing balanced entries into two signed columns.
SymMatrix xi(const SymMatrix& a);

struct ConvexWeights {
  SymNum plus;
  SymNum minus;
};

/// Weights of the tropical convex combination of columns u and v that
/// cancels coordinate i, where u_i > zero > v_i.
ConvexWeights lambda_pm(const SymVector& u, const SymVector& v, std::size_t i);

/// Incidence matrix whose pair columns carry the cancelling convex weights.
SymMatrix convex_incidence(const SymMatrix& a, std::size_t i);

/// Generators of tconv(A) intersected with the hyperplane x_i = zero.
SymMatrix zeta_i(const SymMatrix& a, std::size_t i);

/// M together with every chain of coordinate-hyperplane eliminations,
/// deduplicated.
SymMatrix zeta_full(const SymMatrix& m);

}  // namespace trop
