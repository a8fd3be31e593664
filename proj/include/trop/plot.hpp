#pragma once

#include <string>
#include <vector>

#include "trop/elimination.hpp"
#include "trop/linalg.hpp"

namespace trop {

struct PlotOptions {
  /// Magnitudes more than `span` below the largest one are drawn at the origin.
  Rational span = 6;
  /// Drawn as a dot grid over the region satisfying every row.
  std::vector<AffineRow> halfspaces;
  int size = 480;
};

/// SVG drawing of tconv of the columns of a 2-row matrix in the sign-log
/// display: each axis carries sign(x) * (|x| - low), zero at the origin.
/// Throws std::invalid_argument unless the matrix has two rows.
std::string plot_svg(const SymMatrix& generators, const PlotOptions& options = {});

}  // namespace trop
