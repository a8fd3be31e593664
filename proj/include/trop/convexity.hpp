#pragma once

// Signed tropical convex hulls: membership, segments, halfspaces, conversion
// between generators and halfspace systems, and the decomposition of a hull
// into unsigned hulls per closed orthant.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/elimination.hpp"
#include "trop/linalg.hpp"

namespace trop {

struct MemberResult {
  bool member = false;
  /// Weights x with max 0 and b in U(A x).
  std::optional<SymVector> witness;
  /// Open halfspace containing every generator but not b.
  std::optional<AffineRow> halfspace;
};

/// Columns of `a` are the generators. Throws std::invalid_argument on a
/// dimension mismatch or balanced input.
MemberResult member(const SymMatrix& a, const SymVector& b);

/// Membership in the conic hull: weights are any non-negative numbers.
bool conic_member(const SymMatrix& a, const SymVector& b);

/// Rational extended by -inf and +inf.
struct Extended {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Extended neg_inf() { return {Kind::NegInf, {}}; }
  static Extended pos_inf() { return {Kind::PosInf, {}}; }
  static Extended finite(Rational v) { return {Kind::Finite, std::move(v)}; }
};

std::string to_string(const Extended& e);

struct SegmentPiece {
  Extended eta;
  /// Either a vertex (signed) or, where some coordinate balances, a box.
  std::optional<SymVector> vertex;
  std::vector<Interval> box;

  bool is_box() const { return !vertex.has_value(); }
};

struct SegmentDescription {
  std::vector<SegmentPiece> pieces;
};

/// L_eta(p, q) = nu p (+) mu q with max(nu, mu) = 0 and mu - nu = eta.
SymVector segment_point(const SymVector& p, const SymVector& q, const Rational& eta);

SegmentDescription segment(const SymVector& p, const SymVector& q);

/// Vertices, box corners (with zero where a box straddles it) and points
/// strictly between consecutive breakpoints.
std::vector<SymVector> segment_samples(const SegmentDescription& s);

/// Throws std::invalid_argument for a balanced point.
bool halfspace_contains(const AffineRow& row, const SymVector& x);

/// Closed halfspaces over (1, z) describing tconv(V).
std::vector<AffineRow> vrep_to_hrep(const SymMatrix& v);

/// Generators of the set cut out by non-strict rows, for dimension at most 3.
/// Throws std::invalid_argument for larger dimensions and std::runtime_error
/// when the set is unbounded or a sampled segment leaves it.
SymMatrix hrep_to_vrep(const std::vector<AffineRow>& rows);

/// Unsigned tropical hull test. Entries of `gens` and `p` are non-negative.
bool unsigned_hull_contains(const SymMatrix& gens, const SymVector& p);

struct OrthantHull {
  std::size_t dim = 0;
  /// Sign pattern such as "+-" mapped to unsigned generators (as columns)
  /// of the hull restricted to that closed orthant.
  std::map<std::string, SymMatrix> cells;

  bool contains(const SymVector& p) const;
};

OrthantHull orthant_hull(const SymMatrix& m);

/// True when x lies in the closed orthant given by a pattern of '+' and '-'.
bool in_closed_orthant(const SymVector& x, const std::string& pattern);

}  // namespace trop
