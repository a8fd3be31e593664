#include "trop/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trop {

namespace {

struct Position {
  std::size_t line;
  std::size_t column;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

SymNum parse_entry(std::string_view text, std::size_t offset, std::string_view token) {
  try {
    return parse_symnum(token);
  } catch (const ParseError& e) {
    Position p = position_of(text, offset + e.column() - 1);
    throw ParseError(e.what(), p.line, p.column);
  }
}

SymMatrix parse_json_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", p.line, p.column);
  }
  try {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
      throw ParseError("entries must be an array of rows*cols strings", 1, 1);
    }
    SymMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      std::string s = entries[k].get<std::string>();
      try {
        m(k / cols, k % cols) = parse_symnum(s);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in entry " + std::to_string(k + 1), 1, 1);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what(), 1, 1);
  }
}

}  // namespace

SymMatrix parse_matrix(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_matrix(text);

  std::vector<SymVector> rows;
  std::vector<std::size_t> row_starts;
  SymVector current;
  std::size_t current_start = 0;
  auto finish_row = [&] {
    if (current.empty()) return;
    if (!rows.empty() && current.size() != rows.front().size()) {
      Position p = position_of(text, current_start);
      throw ParseError("row has " + std::to_string(current.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       p.line, p.column);
    }
    rows.push_back(std::move(current));
    current.clear();
  };
  std::size_t k = 0;
  while (k < text.size()) {
    char c = text[k];
    if (c == '\n' || c == ';') {
      finish_row();
      ++k;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      ++k;
    } else {
      std::size_t start = k;
      while (k < text.size() && text[k] != ' ' && text[k] != '\t' && text[k] != '\r' &&
             text[k] != '\n' && text[k] != ';' && text[k] != ',') {
        ++k;
      }
      if (current.empty()) current_start = start;
      current.push_back(parse_entry(text, start, text.substr(start, k - start)));
    }
  }
  finish_row();
  if (rows.empty()) return {};
  return SymMatrix::from_rows(rows);
}

SymVector parse_vector(std::string_view text) {
  SymMatrix m = parse_matrix(text);
  if (m.rows() == 0) return {};
  if (m.rows() != 1) throw ParseError("expected a single row", 1, 1);
  return m.row(0);
}

std::string format_vector(const SymVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += to_string(v[k]);
  }
  return out;
}

std::string format_matrix(const SymMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += format_vector(m.row(i));
    out += '\n';
  }
  return out;
}

Json to_json(const SymVector& v) {
  Json out = Json::array();
  for (const SymNum& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const SymMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_string(m(i, j)));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const AffineRow& r) {
  Json out;
  out["coeffs"] = to_json(r.coeffs);
  out["strict"] = r.strict;
  return out;
}

Json to_json(const std::vector<AffineRow>& rows) {
  Json out = Json::array();
  for (const AffineRow& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const SegmentDescription& s) {
  Json pieces = Json::array();
  for (const SegmentPiece& p : s.pieces) {
    Json item;
    item["eta"] = to_string(p.eta);
    if (p.is_box()) {
      Json box = Json::array();
      for (const Interval& iv : p.box) box.push_back({to_string(iv.lo), to_string(iv.hi)});
      item["box"] = std::move(box);
    } else {
      item["vertex"] = to_json(*p.vertex);
    }
    pieces.push_back(std::move(item));
  }
  Json out;
  out["pieces"] = std::move(pieces);
  return out;
}

Json to_json(const OrthantHull& h) {
  Json cells = Json::array();
  for (const auto& [pattern, gens] : h.cells) {
    Json g = Json::array();
    for (std::size_t j = 0; j < gens.cols(); ++j) g.push_back(to_json(gens.column(j)));
    Json cell;
    cell["orthant"] = pattern;
    cell["generators"] = std::move(g);
    cells.push_back(std::move(cell));
  }
  Json out;
  out["dim"] = h.dim;
  out["orthants"] = std::move(cells);
  return out;
}

Json to_json(const SymMatrix& a, const Certificate& c) {
  Json out;
  const bool kernel = c.kind == Certificate::Kind::Kernel;
  out["kind"] = kernel ? "kernel" : "separator";
  out["vector"] = to_json(c.vector);
  out["product"] = to_json(kernel ? mat_vec(a, c.vector) : vec_mat(c.vector, a));
  out["verified"] = verify(a, c);
  return out;
}

std::vector<AffineRow> rows_from_matrix(const SymMatrix& m) {
  std::vector<AffineRow> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back({m.row(i), false});
  return out;
}

SymMatrix matrix_from_rows(const std::vector<AffineRow>& rows) {
  std::vector<SymVector> r;
  for (const AffineRow& a : rows) r.push_back(a.coeffs);
  return SymMatrix::from_rows(r);
}

std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::runtime_error("cannot open " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace trop
