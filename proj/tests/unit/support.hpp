#pragma once

#include <random>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/semiring.hpp"

namespace trop::test {

inline SymNum P(long m) { return SymNum::pos(m); }
inline SymNum N(long m) { return SymNum::neg(m); }
inline SymNum B(long m) { return SymNum::bal(m); }
inline const SymNum Z{};

inline SymNum S(const char* text) { return parse_symnum(text); }

// Zero and both signs of every magnitude in [lo, hi].
inline std::vector<SymNum> signed_grid(long lo, long hi) {
  std::vector<SymNum> out{Z};
  for (long m = lo; m <= hi; ++m) {
    out.push_back(P(m));
    out.push_back(N(m));
  }
  return out;
}

inline std::vector<SymVector> grid_points(const std::vector<SymNum>& values, std::size_t d) {
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

// Entries with magnitudes in [lo, hi]; `balanced` also draws balanced entries.
inline SymMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi,
                               bool balanced = false) {
  std::uniform_int_distribution<long> mag(lo, hi);
  std::uniform_int_distribution<int> sign(0, balanced ? 3 : 2);
  SymMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      long m = mag(rng);
      switch (sign(rng)) {
        case 0: a(i, j) = Z; break;
        case 1: a(i, j) = P(m); break;
        case 2: a(i, j) = N(m); break;
        default: a(i, j) = B(m); break;
      }
    }
  }
  return a;
}

inline bool same_columns(const SymMatrix& a, const SymMatrix& b) {
  auto has = [](const SymMatrix& m, const SymVector& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.column(j) == c) return true;
    }
    return false;
  };
  if (a.rows() != b.rows()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!has(b, a.column(j))) return false;
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!has(a, b.column(j))) return false;
  }
  return true;
}

}  // namespace trop::test
