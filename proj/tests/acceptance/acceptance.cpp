#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trop/convexity.hpp"
#include "trop/elimination.hpp"
#include "trop/hyperfield.hpp"
#include "trop/io.hpp"
#include "trop/linalg.hpp"
#include "trop/puiseux.hpp"
#include "trop/semiring.hpp"

using namespace trop;

namespace {

SymNum P(long m) { return SymNum::pos(m); }
SymNum N(long m) { return SymNum::neg(m); }
const SymNum Z{};

std::string show(const SymVector& v) { return "(" + format_vector(v) + ")"; }
std::string show(const SymMatrix& m) {
  std::string s = format_matrix(m);
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  return "[" + s + "]";
}

// Zero together with both signs of every listed magnitude.
std::vector<SymNum> signed_grid(const std::vector<Rational>& mags) {
  std::vector<SymNum> out{Z};
  for (const Rational& m : mags) {
    out.push_back(SymNum::pos(m));
    out.push_back(SymNum::neg(m));
  }
  return out;
}

std::vector<Rational> range(long lo, long hi, long denom = 1) {
  std::vector<Rational> out;
  for (long k = lo * denom; k <= hi * denom; ++k) out.emplace_back(k, denom);
  for (auto& r : out) r.canonicalize();
  return out;
}

std::vector<SymVector> grid_points(const std::vector<SymNum>& values, std::size_t d) {
  std::vector<SymVector> out;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    SymVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = values[idx[i]];
    out.push_back(p);
    std::size_t pos = 0;
    while (pos < d && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == d) return out;
  }
}

bool same_column_set(const SymMatrix& a, const SymMatrix& b) {
  auto has = [](const SymMatrix& m, const SymVector& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.column(j) == c) return true;
    }
    return false;
  };
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!has(b, a.column(j))) return false;
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!has(a, b.column(j))) return false;
  }
  return true;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;

  // Keeps the first three reasons.
  void fail(const std::string& why) {
    if (failures < 3) detail += (failures == 0 ? "" : " | ") + why;
    ++failures;
    pass = false;
  }
};

// 1. Exactly one verified certificate for every 2x3 matrix over a 5-element grid.
Outcome farkas_exclusivity() {
  Outcome out;
  const std::vector<SymNum> vals{Z, P(0), N(0), P(1), N(1)};
  std::size_t cases = 0;
  for (const SymVector& e : grid_points(vals, 6)) {
    SymMatrix a = SymMatrix::from_rows({{e[0], e[1], e[2]}, {e[3], e[4], e[5]}});
    ++cases;
    Certificate c;
    try {
      c = farkas(a);
    } catch (const std::exception& ex) {
      out.fail("farkas threw on " + show(a) + ": " + ex.what());
      continue;
    }
    if (!verify(a, c)) out.fail("unverified certificate for " + show(a));
    auto y = sep_solve(a);
    auto x = nnker_solve(a);
    bool y_ok = y && verify_separator(a, *y);
    bool x_ok = x && verify_kernel(a, *x);
    if (y_ok && x_ok) out.fail("both certificates verify for " + show(a));
    if (!y_ok && !x_ok) out.fail("neither certificate verifies for " + show(a));
    if (y && !y_ok) out.fail("sep_solve returned an invalid separator for " + show(a));
    if (x && !x_ok) out.fail("nnker_solve returned an invalid kernel vector for " + show(a));
  }
  if (cases != 15625) out.fail("expected 15625 cases, saw " + std::to_string(cases));
  if (out.pass) out.detail = std::to_string(cases) + " matrices";
  return out;
}

// 2. Strict elimination of the first row.
Outcome fm_worked_example() {
  Outcome out;
  SymMatrix a = SymMatrix::from_rows({{P(3), N(1), N(4)}, {P(3), N(0), N(2)}});
  SymMatrix r = fm_step_strict(a, 0);
  SymMatrix want = SymMatrix::from_rows({{P(0), P(0)}});
  if (!(r == want)) out.fail("got " + show(r));
  if (format_matrix(r) != "0 0\n") out.fail("text form " + format_matrix(r));
  return out;
}

// 3. Exterior description of the segment from -0 to 1.
Outcome nonstrict_worked_example() {
  Outcome out;
  SymMatrix v = SymMatrix::from_rows({{N(0), P(1)}});
  std::vector<AffineRow> rows;
  try {
    rows = vrep_to_hrep(v);
  } catch (const std::exception& ex) {
    out.fail(std::string("vrep_to_hrep threw: ") + ex.what());
    return out;
  }
  for (const AffineRow& r : rows) {
    for (const SymNum& c : r.coeffs) {
      if (c.is_balanced()) out.fail("balanced coefficient in output row");
    }
  }
  std::size_t checked = 0;
  for (const SymNum& z : signed_grid(range(-3, 3, 4))) {
    bool expected = !signed_less(P(1), z) && !signed_less(z, N(0));
    bool got = true;
    for (const AffineRow& r : rows) got = got && halfspace_contains(r, {z});
    ++checked;
    if (got != expected) out.fail("disagreement at z = " + to_string(z));
  }
  if (out.pass) out.detail = std::to_string(rows.size()) + " rows, " + std::to_string(checked) + " grid points";
  return out;
}

// 4. A 4x2 system without signed solution and its extension with the all-zero kernel vector.
Outcome lp_fixture() {
  Outcome out;
  SymMatrix a = SymMatrix::from_rows({{P(0), P(0)}, {N(0), P(0)}, {P(0), N(0)}, {N(0), N(0)}});
  SymVector b(4, N(0));
  const auto grid = signed_grid(range(-4, 4, 2));
  if (auto x = grid_search_system(a, b, Relation::ReverseTeq, grid)) {
    out.fail("found x = " + show(*x) + " with A x below b");
  }
  if (auto x = grid_search_system(a, b, Relation::Balance, grid)) {
    out.fail("found x = " + show(*x) + " with A x balancing b");
  }

  SymMatrix e(4, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      e(i, j) = a(i, j);
      e(i, j + 2) = -a(i, j);
    }
    e(i, 4 + i) = P(0);
  }
  SymVector zeros(8, P(0));
  SymVector ex = mat_vec(e, zeros);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!balance(ex[i], b[i])) out.fail("extended row " + std::to_string(i + 1) + " does not balance");
  }
  SymMatrix aug = e;
  aug.append_column(SymVector(4, P(0)));
  SymVector zeros9(9, P(0));
  if (!verify_kernel(aug, zeros9)) out.fail("all-zero vector not in the kernel of [E -b]");
  auto k = nnker_solve(aug);
  if (!k || !verify_kernel(aug, *k)) out.fail("nnker_solve found no kernel vector for [E -b]");
  if (k && !(*k == zeros9)) out.fail("nnker_solve returned " + show(*k));
  return out;
}

// 5. Strict elimination preserves feasibility of the open cone.
Outcome projection_soundness() {
  Outcome out;
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> mag(-3, 3);
  std::uniform_int_distribution<int> sign(0, 3);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SymMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        Rational m(mag(rng));
        switch (sign(rng)) {
          case 0: a(i, j) = Z; break;
          case 1: a(i, j) = SymNum::pos(m); break;
          case 2: a(i, j) = SymNum::neg(m); break;
          default: a(i, j) = SymNum::bal(m); break;
        }
      }
    }
    auto y = sep_solve(a);
    if (y) ++feasible;
    if (y && !verify_separator(a, *y)) out.fail("invalid separator for " + show(a));
    for (std::size_t i = 0; i < 3; ++i) {
      SymMatrix r = fm_step_strict(a, i);
      auto yr = sep_solve(r);
      if (yr && !verify_separator(r, *yr)) out.fail("invalid separator for projection of " + show(a));
      if (y.has_value() != yr.has_value()) {
        out.fail("row " + std::to_string(i + 1) + " changes feasibility of " + show(a));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(feasible) + "/200 feasible";
  return out;
}

SymVector random_delta(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(-3, 0);
  std::uniform_int_distribution<std::size_t> top(0, n - 1);
  SymVector x(n);
  for (auto& w : x) {
    int r = pick(rng);
    w = r == -3 ? Z : P(r);
  }
  x[top(rng)] = P(0);
  return x;
}

// 6. Member witnesses lift to Puiseux matrices; tampered points do not.
Outcome lift_oracle() {
  Outcome out;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mag(-2, 2);
  std::uniform_int_distribution<int> sign(0, 2);
  int lifted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SymMatrix a(2, 3);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        int s = sign(rng);
        Rational m(mag(rng));
        a(i, j) = s == 0 ? Z : (s == 1 ? SymNum::pos(m) : SymNum::neg(m));
      }
    }
    SymVector x = random_delta(rng, 3);
    SymVector p = mat_vec(a, x);
    SymVector b(2);
    for (std::size_t i = 0; i < 2; ++i) {
      if (!p[i].is_balanced()) {
        b[i] = p[i];
        continue;
      }
      switch (rng() % 3) {
        case 0: b[i] = SymNum::pos(p[i].mag()); break;
        case 1: b[i] = SymNum::neg(p[i].mag()); break;
        default: b[i] = Z; break;
      }
    }
    MemberResult r = member(a, b);
    if (!r.member || !r.witness) {
      out.fail("member rejects " + show(b) + " for " + show(a));
      continue;
    }
    const SymVector& w = *r.witness;
    if (!lift_verify(a, w, b)) {
      out.fail("lift_verify fails for A=" + show(a) + " x=" + show(w) + " b=" + show(b));
      continue;
    }
    try {
      PuiseuxMatrix l = lift_construct(a, w, b);
      auto comb = lift_combination(l, w);
      for (std::size_t i = 0; i < 2; ++i) {
        if (!(sval(comb[i]) == b[i])) out.fail("combination valuation differs from b");
      }
    } catch (const std::exception& ex) {
      out.fail(std::string("lift_construct threw: ") + ex.what());
      continue;
    }
    ++lifted;

    SymVector aw = mat_vec(a, w);
    std::size_t i = rng() % 2;
    SymVector t = b;
    if (aw[i].is_zero()) {
      t[i] = P(0);
    } else {
      t[i] = SymNum::pos(aw[i].mag() + 1);
    }
    if (uncomp(aw[i]).contains(t[i])) {
      out.fail("tampering stayed inside U(A x)");
      continue;
    }
    if (lift_verify(a, w, t)) {
      out.fail("lift_verify accepts tampered b=" + show(t) + " for A=" + show(a) + " x=" + show(w));
    } else {
      ++rejected;
    }
  }
  if (out.pass) out.detail = std::to_string(lifted) + " lifted, " + std::to_string(rejected) + " tampered rejected";
  return out;
}

// 7. Hyperfield product agrees with the symmetrized semiring.
Outcome hyperfield_oracle() {
  Outcome out;
  const std::vector<SymNum> vals{Z, P(0), N(0), P(1), N(1)};
  const std::vector<SymVector> lambdas{{P(0), P(0)}, {P(0), P(-1)}, {P(-1), P(0)}, {P(0), Z}, {Z, P(0)}};
  const auto zs = grid_points(signed_grid(range(-1, 2)), 2);
  std::size_t checks = 0;
  for (const SymVector& e : grid_points(vals, 4)) {
    SymMatrix v = SymMatrix::from_rows({{e[0], e[1]}, {e[2], e[3]}});
    for (const SymVector& lambda : lambdas) {
      SymVector p = mat_vec(v, lambda);
      for (const SymVector& z : zs) {
        bool expected = uncomp(p[0]).contains(z[0]) && uncomp(p[1]).contains(z[1]);
        ++checks;
        if (hconv_check(v, lambda, z) != expected) {
          out.fail("V=" + show(v) + " lambda=" + show(lambda) + " z=" + show(z));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

// 8. Orthant decomposition of a three-point hull.
Outcome orthant_decomposition() {
  Outcome out;
  SymMatrix m = SymMatrix::from_rows({{P(3), N(1), N(4)}, {P(3), N(0), N(2)}});
  OrthantHull h = orthant_hull(m);
  auto cell = [&](const std::string& key) {
    auto it = h.cells.find(key);
    return it == h.cells.end() ? SymMatrix(2, 0) : it->second;
  };
  SymMatrix pp = SymMatrix::from_rows({{P(3), Z, Z}, {P(3), P(3), P(1)}});
  SymMatrix mp = SymMatrix::from_rows({{P(1), Z, Z, P(4)}, {P(0), P(1), P(3), Z}});
  SymMatrix mm = SymMatrix::from_rows({{P(1), P(4), P(1), P(4)}, {P(0), P(2), Z, Z}});
  if (!same_column_set(cell("++"), pp)) out.fail("(+,+) cell " + show(cell("++")));
  if (!same_column_set(cell("--"), mm)) out.fail("(-,-) cell " + show(cell("--")));
  if (!same_column_set(cell("-+"), mp)) {
    SymVector witness{N(1), P(-1)};
    OrthantHull listed{2, {{"++", pp}, {"-+", mp}, {"--", mm}}};
    out.fail("(-,+) cell " + show(cell("-+")) + " differs from the listed set " + show(mp) +
             "; member(M, " + show(witness) + ") = " + (member(m, witness).member ? "true" : "false") +
             ", listed cells contain it: " + (listed.contains(witness) ? "true" : "false"));
  }
  if (cell("+-").cols() != 0) out.fail("(+,-) cell " + show(cell("+-")));
  std::size_t points = 0;
  auto compare = [&](const std::vector<SymNum>& values) {
    for (const SymVector& p : grid_points(values, 2)) {
      ++points;
      if (h.contains(p) != member(m, p).member) out.fail("membership differs at " + show(p));
    }
  };
  compare(signed_grid({Rational(0), Rational(1), Rational(3), Rational(4)}));
  compare(signed_grid(range(-1, 5, 2)));
  if (out.pass) out.detail = std::to_string(points) + " grid points";
  return out;
}

// 9. Fixed regression fixtures.
Outcome regression_fixtures() {
  Outcome out;
  auto in_hyperplane = [](const SymVector& a, const SymVector& x) {
    SymNum s = dot(a, x);
    return s.is_zero() || s.is_balanced();
  };
  for (const SymVector& a : std::vector<SymVector>{{P(1), P(2)}, {N(0), P(3)}, {P(-1), N(-2)}}) {
    SymVector p{-a[1], a[0]};
    SymVector q{a[1], -a[0]};
    SymVector r{a[1], a[0]};
    if (!in_hyperplane(a, p) || !in_hyperplane(a, q)) out.fail("hyperplane witnesses not in Hyp " + show(a));
    if (in_hyperplane(a, r)) out.fail("(a2, a1) lies in Hyp " + show(a));
    SymMatrix pq = SymMatrix::from_columns({p, q}, 2);
    if (!member(pq, r).member) out.fail("(a2, a1) not in tconv(p, q) for a = " + show(a));
  }

  AffineRow closed{{N(0), P(0), P(0)}, false};
  SymVector u{N(1), P(1)};
  SymVector w{P(1), N(1)};
  SymVector origin{Z, Z};
  if (!halfspace_contains(closed, u) || !halfspace_contains(closed, w)) out.fail("closed halfspace misses a generator");
  if (halfspace_contains(closed, origin)) out.fail("closed halfspace contains the origin");
  if (!member(SymMatrix::from_columns({u, w}, 2), origin).member) out.fail("origin not in the hull");

  SymNum left = cancellative_sum(P(0), cancellative_sum(N(0), P(-1)));
  SymNum right = cancellative_sum(cancellative_sum(P(0), N(0)), P(-1));
  if (!left.is_zero()) out.fail("0 + (-0 + -1) = " + to_string(left));
  if (!(right == P(-1))) out.fail("(0 + -0) + -1 = " + to_string(right));

  SymMatrix g1 = SymMatrix::from_columns({{P(0), P(0)}, {N(0), N(0)}}, 2);
  SymMatrix g2 = SymMatrix::from_columns({{P(0), N(0)}, {N(0), P(0)}}, 2);
  std::size_t points = 0;
  for (const SymVector& p : grid_points(signed_grid(range(-2, 2, 2)), 2)) {
    ++points;
    if (member(g1, p).member != member(g2, p).member) out.fail("generating sets differ at " + show(p));
  }
  if (out.pass) out.detail = std::to_string(points) + " grid points for the generating-set pair";
  return out;
}

// 10. Generators to halfspaces and back.
Outcome round_trip() {
  Outcome out;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> mag(-2, 2);
  std::uniform_int_distribution<int> sign(0, 2);
  std::uniform_int_distribution<int> count(1, 3);
  const auto grid = grid_points(signed_grid(range(-3, 3, 2)), 2);
  int done = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = count(rng);
    SymMatrix v(2, n);
    for (std::size_t i = 0; i < 2; ++i) {
      for (int j = 0; j < n; ++j) {
        int s = sign(rng);
        Rational m(mag(rng));
        v(i, j) = s == 0 ? Z : (s == 1 ? SymNum::pos(m) : SymNum::neg(m));
      }
    }
    SymMatrix g;
    try {
      g = hrep_to_vrep(vrep_to_hrep(v));
    } catch (const std::exception& ex) {
      out.fail("V=" + show(v) + ": " + ex.what());
      continue;
    }
    bool same = true;
    for (const SymVector& p : grid) {
      if (member(v, p).member != member(g, p).member) {
        out.fail("V=" + show(v) + " G=" + show(g) + " differ at " + show(p));
        same = false;
        break;
      }
    }
    if (same) ++done;
  }
  if (out.pass) out.detail = std::to_string(done) + "/20 round trips, " + std::to_string(grid.size()) + " grid points each";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds = 0;
  };
  const std::vector<Criterion> criteria{
      {"farkas exclusivity", farkas_exclusivity, 60},
      {"strict elimination example", fm_worked_example},
      {"non-strict elimination example", nonstrict_worked_example},
      {"unsolvable system and its extension", lp_fixture},
      {"projection soundness", projection_soundness, 120},
      {"membership and lift", lift_oracle},
      {"hyperfield oracle", hyperfield_oracle},
      {"orthant decomposition", orthant_decomposition},
      {"regression fixtures", regression_fixtures},
      {"V-H-V round trip", round_trip, 300},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[k].budget_seconds > 0 && secs > criteria[k].budget_seconds) {
      o.fail("took longer than " + std::to_string(static_cast<int>(criteria[k].budget_seconds)) + " s");
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << ' ' << (k + 1) << ' ' << criteria[k].name;
    if (!o.detail.empty()) line << ": " << o.detail;
    line << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
