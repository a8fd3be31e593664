#include "trop/convexity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

void require_signed(const SymVector& v, const char* what) {
  for (const SymNum& x : v) {
    if (x.is_balanced()) throw std::invalid_argument(std::string(what) + ": balanced entry");
  }
}

void require_signed(const SymMatrix& a, const char* what) {
  if (!a.is_signed()) throw std::invalid_argument(std::string(what) + ": balanced entry");
}

}  // namespace

MemberResult member(const SymMatrix& a, const SymVector& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("member: point has " + std::to_string(b.size()) +
                                " coordinates, generators have " + std::to_string(a.rows()));
  }
  require_signed(a, "member");
  require_signed(b, "member");
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  SymMatrix aug(d + 1, n + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = -b[i];
  }
  for (std::size_t j = 0; j < n; ++j) aug(d, j) = SymNum::pos(0);
  aug(d, n) = SymNum::neg(0);

  Certificate cert = farkas(aug);
  MemberResult out;
  if (cert.kind == Certificate::Kind::Kernel) {
    SymNum s = inverse(cert.vector[n]);
    SymVector w(cert.vector.begin(), cert.vector.begin() + static_cast<std::ptrdiff_t>(n));
    out.member = true;
    out.witness = scale(s, w);
  } else {
    const SymVector& y = cert.vector;
    AffineRow h;
    h.strict = true;
    h.coeffs.push_back(y[d]);
    h.coeffs.insert(h.coeffs.end(), y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
    out.halfspace = std::move(h);
  }
  return out;
}

bool conic_member(const SymMatrix& a, const SymVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("conic_member: dimension mismatch");
  require_signed(a, "conic_member");
  require_signed(b, "conic_member");
  if (std::all_of(b.begin(), b.end(), [](const SymNum& x) { return x.is_zero(); })) return true;
  SymMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = -b[i];
  }
  auto x = nnker_solve(aug);
  return x && !x->back().is_zero();
}

std::string to_string(const Extended& e) {
  switch (e.kind) {
    case Extended::Kind::NegInf:
      return "-inf";
    case Extended::Kind::PosInf:
      return "inf";
    case Extended::Kind::Finite:
      return to_string(e.value);
  }
  return {};
}

SymVector segment_point(const SymVector& p, const SymVector& q, const Rational& eta) {
  if (p.size() != q.size()) throw std::invalid_argument("segment: dimension mismatch");
  SymNum nu = SymNum::pos(eta > 0 ? Rational(-eta) : Rational(0));
  SymNum mu = SymNum::pos(eta < 0 ? eta : Rational(0));
  SymVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = nu * p[i] + mu * q[i];
  return out;
}

SegmentDescription segment(const SymVector& p, const SymVector& q) {
  if (p.size() != q.size()) throw std::invalid_argument("segment: dimension mismatch");
  require_signed(p, "segment");
  require_signed(q, "segment");
  std::set<Rational> breaks{Rational(0)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero() && !q[i].is_zero()) breaks.insert(Rational(p[i].mag() - q[i].mag()));
  }
  SegmentDescription out;
  out.pieces.push_back({Extended::neg_inf(), p, {}});
  for (const Rational& eta : breaks) {
    SymVector l = segment_point(p, q, eta);
    bool balanced = std::any_of(l.begin(), l.end(), [](const SymNum& x) { return x.is_balanced(); });
    if (balanced) {
      std::vector<Interval> box;
      for (const SymNum& x : l) box.push_back(uncomp(x));
      out.pieces.push_back({Extended::finite(eta), std::nullopt, std::move(box)});
    } else if (out.pieces.back().is_box() || *out.pieces.back().vertex != l) {
      out.pieces.push_back({Extended::finite(eta), std::move(l), {}});
    }
  }
  if (out.pieces.back().is_box() || *out.pieces.back().vertex != q) {
    out.pieces.push_back({Extended::pos_inf(), q, {}});
  }
  return out;
}

namespace {

void box_corners(const std::vector<Interval>& box, std::size_t k, SymVector& cur,
                 std::vector<SymVector>& out) {
  if (k == box.size()) {
    out.push_back(cur);
    return;
  }
  std::vector<SymNum> options{box[k].lo};
  if (!box[k].is_point()) {
    options.push_back(box[k].hi);
    if (box[k].contains(SymNum())) options.push_back(SymNum());
  }
  for (const SymNum& v : options) {
    cur.push_back(v);
    box_corners(box, k + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SymVector> segment_samples(const SegmentDescription& s) {
  std::vector<SymVector> out;
  std::vector<Rational> finite;
  const SymVector* p = nullptr;
  const SymVector* q = nullptr;
  for (const SegmentPiece& piece : s.pieces) {
    if (piece.eta.kind == Extended::Kind::NegInf) p = &*piece.vertex;
    if (piece.eta.kind == Extended::Kind::PosInf) q = &*piece.vertex;
    if (piece.eta.kind == Extended::Kind::Finite) finite.push_back(piece.eta.value);
    if (piece.is_box()) {
      SymVector cur;
      box_corners(piece.box, 0, cur, out);
    } else {
      out.push_back(*piece.vertex);
    }
  }
  if (p == nullptr) return out;
  if (q == nullptr) q = p;
  std::vector<Rational> mids;
  if (finite.empty()) {
    mids.push_back(Rational(0));
  } else {
    mids.push_back(Rational(finite.front() - 1));
    for (std::size_t k = 0; k + 1 < finite.size(); ++k) {
      mids.push_back(Rational((finite[k] + finite[k + 1]) / 2));
    }
    mids.push_back(Rational(finite.back() + 1));
  }
  for (const Rational& eta : mids) {
    SymVector l = segment_point(*p, *q, eta);
    std::vector<Interval> box;
    for (const SymNum& x : l) box.push_back(uncomp(x));
    SymVector cur;
    box_corners(box, 0, cur, out);
  }
  return out;
}

bool halfspace_contains(const AffineRow& row, const SymVector& x) {
  require_signed(x, "halfspace_contains");
  SymNum v = evaluate_row(row, x);
  return row.strict ? v.is_pos() : !v.is_neg();
}

namespace {

std::vector<AffineRow> resolve_all(std::vector<AffineRow> rows, const SymMatrix& lifted) {
  for (AffineRow& r : rows) {
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
      if (r.coeffs[k].is_balanced()) r = resolve_balanced_nonstrict(r, k, lifted);
    }
  }
  return rows;
}

}  // namespace

std::vector<AffineRow> vrep_to_hrep(const SymMatrix& v) {
  require_signed(v, "vrep_to_hrep");
  const std::size_t d = v.rows();
  const std::size_t n = v.cols();
  const std::size_t width = 1 + n + d;
  std::vector<AffineRow> rows;
  auto blank = [&] { return AffineRow{SymVector(width), false}; };
  for (std::size_t i = 0; i < d; ++i) {
    AffineRow up = blank();
    AffineRow down = blank();
    for (std::size_t j = 0; j < n; ++j) {
      up.coeffs[1 + j] = v(i, j);
      down.coeffs[1 + j] = -v(i, j);
    }
    up.coeffs[1 + n + i] = SymNum::neg(0);
    down.coeffs[1 + n + i] = SymNum::pos(0);
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  AffineRow sum_up = blank();
  AffineRow sum_down = blank();
  sum_up.coeffs[0] = SymNum::neg(0);
  sum_down.coeffs[0] = SymNum::pos(0);
  for (std::size_t j = 0; j < n; ++j) {
    sum_up.coeffs[1 + j] = SymNum::pos(0);
    sum_down.coeffs[1 + j] = SymNum::neg(0);
  }
  rows.push_back(std::move(sum_up));
  rows.push_back(std::move(sum_down));
  for (std::size_t j = 0; j < n; ++j) {
    AffineRow nonneg = blank();
    nonneg.coeffs[1 + j] = SymNum::pos(0);
    rows.push_back(std::move(nonneg));
  }

  // The solution set in (x, z) is the hull of the columns (e_j, v_j).
  SymMatrix lifted(n + d, n);
  for (std::size_t j = 0; j < n; ++j) {
    lifted(j, j) = SymNum::pos(0);
    for (std::size_t i = 0; i < d; ++i) lifted(n + i, j) = v(i, j);
  }

  for (std::size_t k = n; k >= 1; --k) {
    rows = prune_rows(resolve_all(fm_step_nonstrict(rows, k), lifted));
  }

  std::vector<AffineRow> out;
  for (const AffineRow& r : rows) {
    AffineRow proj{SymVector(d + 1), false};
    proj.coeffs[0] = r.coeffs[0];
    for (std::size_t i = 0; i < d; ++i) proj.coeffs[1 + i] = r.coeffs[1 + n + i];
    out.push_back(std::move(proj));
  }
  return prune_rows(out);
}

namespace {

std::vector<std::string> all_patterns(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::string s(d, '+');
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i)) s[i] = '-';
    }
    out.push_back(s);
  }
  return out;
}

SymVector magnitudes(const SymVector& x) {
  SymVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = abs(x[i]);
  return out;
}

void product_points(const std::vector<std::vector<SymNum>>& axes, std::size_t k, SymVector& cur,
                    std::vector<SymVector>& out) {
  if (k == axes.size()) {
    out.push_back(cur);
    return;
  }
  for (const SymNum& v : axes[k]) {
    cur.push_back(v);
    product_points(axes, k + 1, cur, out);
    cur.pop_back();
  }
}

bool holds_all(const std::vector<AffineRow>& rows, const SymVector& x) {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const AffineRow& r) { return halfspace_contains(r, x); });
}

}  // namespace

bool in_closed_orthant(const SymVector& x, const std::string& pattern) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_pos() && pattern[i] != '+') return false;
    if (x[i].is_neg() && pattern[i] != '-') return false;
    if (x[i].is_balanced()) return false;
  }
  return true;
}

SymMatrix hrep_to_vrep(const std::vector<AffineRow>& rows) {
  if (rows.empty()) throw std::runtime_error("hrep_to_vrep: no rows, the set is unbounded");
  const std::size_t d = rows.front().coeffs.size() - 1;
  if (d > 3) throw std::invalid_argument("hrep_to_vrep: dimension above 3 is not supported");
  for (const AffineRow& r : rows) {
    if (r.coeffs.size() != d + 1) throw std::invalid_argument("hrep_to_vrep: ragged rows");
    if (r.strict) throw std::invalid_argument("hrep_to_vrep: strict row");
    require_signed(r.coeffs, "hrep_to_vrep");
  }

  // Candidate magnitudes per coordinate: ties with the constant term, then
  // ties propagated between coordinates of one row.
  std::vector<std::set<Rational>> mags(d);
  for (const AffineRow& r : rows) {
    if (r.coeffs[0].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k) {
      if (!r.coeffs[k + 1].is_zero()) mags[k].insert(Rational(r.coeffs[0].mag() - r.coeffs[k + 1].mag()));
    }
  }
  for (std::size_t round = 0; round < d; ++round) {
    auto next = mags;
    for (const AffineRow& r : rows) {
      for (std::size_t k = 0; k < d; ++k) {
        if (r.coeffs[k + 1].is_zero()) continue;
        for (std::size_t l = 0; l < d; ++l) {
          if (l == k || r.coeffs[l + 1].is_zero()) continue;
          for (const Rational& m : mags[k]) {
            next[l].insert(Rational(r.coeffs[k + 1].mag() + m - r.coeffs[l + 1].mag()));
          }
        }
      }
    }
    mags = std::move(next);
  }
  std::optional<Rational> bound;
  for (const auto& s : mags) {
    if (!s.empty() && (!bound || *s.rbegin() > *bound)) bound = *s.rbegin();
  }
  Rational far = bound ? Rational(*bound + 1) : Rational(1);

  std::vector<std::vector<SymNum>> axes(d);
  for (std::size_t k = 0; k < d; ++k) {
    axes[k].push_back(SymNum());
    for (const Rational& m : mags[k]) {
      axes[k].push_back(SymNum::pos(m));
      axes[k].push_back(SymNum::neg(m));
    }
    axes[k].push_back(SymNum::pos(far));
    axes[k].push_back(SymNum::neg(far));
  }
  std::vector<SymVector> grid;
  SymVector cur;
  product_points(axes, 0, cur, grid);

  std::vector<SymVector> feasible;
  for (const SymVector& x : grid) {
    if (!holds_all(rows, x)) continue;
    for (const SymNum& c : x) {
      if (!c.is_zero() && c.mag() == far) {
        throw std::runtime_error("hrep_to_vrep: the set is unbounded");
      }
    }
    feasible.push_back(x);
  }

  std::vector<SymVector> gens;
  std::set<SymVector, bool (*)(const SymVector&, const SymVector&)> seen(
      [](const SymVector& a, const SymVector& b) { return canonical_less(a, b); });
  for (const std::string& pattern : all_patterns(d)) {
    std::vector<SymVector> cell;
    for (const SymVector& x : feasible) {
      if (in_closed_orthant(x, pattern)) cell.push_back(x);
    }
    // Drop points in the unsigned hull of the remaining ones.
    for (std::size_t k = cell.size(); k-- > 0;) {
      SymMatrix others(d, 0);
      for (std::size_t j = 0; j < cell.size(); ++j) {
        if (j != k) others.append_column(magnitudes(cell[j]));
      }
      if (unsigned_hull_contains(others, magnitudes(cell[k]))) {
        cell.erase(cell.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
    for (const SymVector& x : cell) {
      if (seen.insert(x).second) gens.push_back(x);
    }
  }

  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = j + 1; k < gens.size(); ++k) {
      for (const SymVector& x : segment_samples(segment(gens[j], gens[k]))) {
        if (!holds_all(rows, x)) {
          throw std::runtime_error("hrep_to_vrep: the halfspace intersection is not convex");
        }
      }
    }
  }

  // Signed pruning across orthants, points with more zero coordinates first.
  std::vector<SymVector> order = gens;
  auto zeros = [](const SymVector& x) { return std::count_if(x.begin(), x.end(), [](const SymNum& c) { return c.is_zero(); }); };
  std::stable_sort(order.begin(), order.end(),
                   [&](const SymVector& a, const SymVector& b) { return zeros(a) > zeros(b); });
  for (const SymVector& x : order) {
    if (gens.size() < 2) break;
    std::vector<SymVector> rest;
    for (const SymVector& g : gens) {
      if (g != x) rest.push_back(g);
    }
    if (member(SymMatrix::from_columns(rest, d), x).member) gens = std::move(rest);
  }
  return SymMatrix::from_columns(gens, d);
}

bool unsigned_hull_contains(const SymMatrix& gens, const SymVector& p) {
  const std::size_t d = p.size();
  const std::size_t n = gens.cols();
  if (n == 0) return false;
  // Homogenize with a leading coordinate 0, then residuate.
  std::vector<std::optional<Rational>> lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Rational> best = Rational(0);
    for (std::size_t i = 0; i < d && best; ++i) {
      if (gens(i, j).is_zero()) continue;
      if (p[i].is_zero()) {
        best.reset();
      } else {
        Rational cand = p[i].mag() - gens(i, j).mag();
        if (cand < *best) best = cand;
      }
    }
    lambda[j] = best;
  }
  auto matches = [&](std::optional<Rational> target, auto entry) {
    std::optional<Rational> top;
    for (std::size_t j = 0; j < n; ++j) {
      if (!lambda[j]) continue;
      std::optional<Rational> e = entry(j);
      if (!e) continue;
      Rational v = *lambda[j] + *e;
      if (!top || v > *top) top = v;
    }
    return top == target;
  };
  if (!matches(Rational(0), [](std::size_t) { return std::optional<Rational>(Rational(0)); })) {
    return false;
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::optional<Rational> target;
    if (!p[i].is_zero()) target = p[i].mag();
    auto entry = [&](std::size_t j) {
      return gens(i, j).is_zero() ? std::optional<Rational>() : std::optional<Rational>(gens(i, j).mag());
    };
    if (!matches(target, entry)) return false;
  }
  return true;
}

bool OrthantHull::contains(const SymVector& p) const {
  if (p.size() != dim) throw std::invalid_argument("OrthantHull::contains: dimension mismatch");
  SymVector m = magnitudes(p);
  for (const auto& [pattern, gens] : cells) {
    if (in_closed_orthant(p, pattern) && unsigned_hull_contains(gens, m)) return true;
  }
  return false;
}

OrthantHull orthant_hull(const SymMatrix& m) {
  require_signed(m, "orthant_hull");
  SymMatrix z = zeta_full(m);
  OrthantHull out;
  out.dim = m.rows();
  for (const std::string& pattern : all_patterns(m.rows())) {
    SymMatrix cell(m.rows(), 0);
    for (std::size_t j = 0; j < z.cols(); ++j) {
      SymVector c = z.column(j);
      if (in_closed_orthant(c, pattern)) cell.append_column(magnitudes(c));
    }
    out.cells.emplace(pattern, dedup_columns(cell));
  }
  return out;
}

}  // namespace trop
