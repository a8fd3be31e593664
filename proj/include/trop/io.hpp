#pragma once

// Text and JSON formats for matrices, halfspace rows, certificates, segments
// and orthant decompositions.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trop/convexity.hpp"
#include "trop/elimination.hpp"
#include "trop/linalg.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

/// Rows separated by newlines or ';', entries by whitespace. Input starting
/// with '{' is read as {"rows": r, "cols": c, "entries": [...]} in row-major
/// order. Throws ParseError with 1-based line and column.
SymMatrix parse_matrix(std::string_view text);

/// A single row of entries.
SymVector parse_vector(std::string_view text);

std::string format_matrix(const SymMatrix& m);
std::string format_vector(const SymVector& v);

Json to_json(const SymVector& v);
Json to_json(const SymMatrix& m);
Json to_json(const AffineRow& r);
Json to_json(const std::vector<AffineRow>& rows);
Json to_json(const SegmentDescription& s);
Json to_json(const OrthantHull& h);
/// Certificate plus the product it was verified against.
Json to_json(const SymMatrix& a, const Certificate& c);

/// Rows of a matrix as non-strict affine rows and back.
std::vector<AffineRow> rows_from_matrix(const SymMatrix& m);
SymMatrix matrix_from_rows(const std::vector<AffineRow>& rows);

/// `@path` reads the file, anything else is returned unchanged.
std::string read_argument(const std::string& arg);

}  // namespace trop
