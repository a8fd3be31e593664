#pragma once

// Fourier-Motzkin elimination over the symmetrized semiring: strict
// elimination for the open cone sep(A), non-negative kernels, Farkas
// certificates, and non-strict elimination of affine systems.

#include <cstddef>
#include <optional>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

struct Certificate {
  enum class Kind { Kernel, Separator };
  Kind kind;
  /// Kernel: non-negative x with A x balanced. Separator: signed y with y^T A > zero.
  SymVector vector;
};

/// a0 (+) a1 x1 (+) ... (+) ad xd  >  zero (strict) or  |>=  zero (non-strict).
struct AffineRow {
  SymVector coeffs;
  bool strict = false;

  friend bool operator==(const AffineRow&, const AffineRow&) = default;
};

/// Every column of y^T A is strictly positive.
bool verify_separator(const SymMatrix& a, const SymVector& y);
/// x non-negative and not all zero, every entry of A x balanced or zero.
bool verify_kernel(const SymMatrix& a, const SymVector& x);
bool verify(const SymMatrix& a, const Certificate& c);

/// xi(A_{-i} S T) for row i.
SymMatrix fm_step_strict(const SymMatrix& a, std::size_t i);

std::optional<SymVector> sep_solve(const SymMatrix& a);

/// Kernel element normalized to maximum 0. Its support is the union of the
/// supports of all kernel elements.
std::optional<SymVector> nnker_solve(const SymMatrix& a);

/// Exactly one verified certificate. Throws std::logic_error otherwise.
Certificate farkas(const SymMatrix& a);

/// Projects out variable i (coefficient slot i, 1-based in the row, since slot
/// 0 is the constant). Slot i of every output row is zero. Throws
/// std::invalid_argument if a row has a balanced coefficient in slot i or is
/// strict.
std::vector<AffineRow> fm_step_nonstrict(const std::vector<AffineRow>& rows, std::size_t i);

/// Drops tautologies and rows that are positive multiples of earlier rows.
std::vector<AffineRow> prune_rows(const std::vector<AffineRow>& rows);

/// Sign of a (.) (0, x).
SymNum evaluate_row(const AffineRow& row, const SymVector& x);

/// Replaces the balanced coefficient in slot i by a signed b in U(c_i) such
/// that tconv of the columns of `generators` still satisfies the row.
/// Throws std::runtime_error when no candidate validates.
AffineRow resolve_balanced_nonstrict(const AffineRow& row, std::size_t i,
                                     const SymMatrix& generators);

/// Points of tconv(V) used to validate halfspace rows: generators, vertices,
/// box corners and midpoints of pairwise segments.
std::vector<SymVector> hull_test_points(const SymMatrix& v);

// Experimental: exhaustive search for signed x on a finite grid with
// A x related to b in every row. Not a decision procedure.
enum class Relation { Balance, Teq, ReverseTeq };
std::optional<SymVector> grid_search_system(const SymMatrix& a, const SymVector& b,
                                            Relation rel, const std::vector<SymNum>& grid);

}  // namespace trop
