#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "trop/convexity.hpp"
#include "trop/elimination.hpp"
#include "trop/io.hpp"
#include "trop/plot.hpp"
#include "trop/puiseux.hpp"

namespace {

using namespace trop;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

SymMatrix load_matrix(const std::string& arg) { return parse_matrix(read_argument(arg)); }
SymVector load_vector(const std::string& arg) { return parse_vector(read_argument(arg)); }

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Random hull points from weights on {0, -1, ..., -4, zero}.
std::vector<SymVector> random_hull_points(const SymMatrix& v, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-5, 0);
  std::vector<SymVector> out;
  if (v.cols() == 0) return out;
  std::uniform_int_distribution<std::size_t> top(0, v.cols() - 1);
  for (int k = 0; k < count; ++k) {
    SymVector w(v.cols());
    for (auto& x : w) {
      int r = pick(rng);
      x = r == -5 ? SymNum() : SymNum::pos(r);
    }
    w[top(rng)] = SymNum::pos(0);
    SymVector p = mat_vec(v, w);
    for (auto& c : p) {
      if (c.is_balanced()) c = (rng() % 3 == 0) ? SymNum() : (rng() % 2 ? SymNum::pos(c.mag()) : SymNum::neg(c.mag()));
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed tropical convexity over the symmetrized max-plus semiring"};
  app.require_subcommand(1);

  std::string a_arg;
  std::string b_arg;
  std::string p_arg;
  std::string q_arg;
  std::string x_arg;
  std::string h_arg;
  std::size_t row = 0;
  std::size_t var = 0;
  bool strict = false;
  bool json = false;
  bool svg = false;
  bool conic = false;
  int check = 0;
  unsigned seed = 1;
  std::string span = "6";

  auto* feas = app.add_subcommand("feas", "Find y with y^T A strictly positive");
  feas->add_option("-A", a_arg, "Matrix, inline or @file")->required();

  auto* fk = app.add_subcommand("farkas", "Kernel or separator certificate for A");
  fk->add_option("-A", a_arg, "Matrix, inline or @file")->required();

  auto* mem = app.add_subcommand("member", "Hull membership of b; generators are the columns of A");
  mem->add_option("-A", a_arg, "Generators as columns")->required();
  mem->add_option("-b", b_arg, "Point")->required();
  mem->add_flag("--conic", conic, "Conic hull instead of convex hull");

  auto* hull = app.add_subcommand("hull", "Orthant decomposition of tconv(A)");
  hull->add_option("-A", a_arg, "Generators as columns")->required();
  hull->add_flag("--svg", svg, "Draw instead of listing (two dimensions)");
  hull->add_option("--span", span, "Magnitude range shown by --svg");

  auto* elim = app.add_subcommand("eliminate", "One Fourier-Motzkin step");
  elim->add_option("-A", a_arg, "Matrix (strict) or affine rows a0 a1 ... ad")->required();
  elim->add_option("--row", row, "Row to eliminate, 1-based (strict)");
  elim->add_option("--var", var, "Variable to eliminate, 1-based (non-strict)");
  elim->add_flag("--strict", strict, "Strict elimination on the open cone");
  elim->add_flag("--json", json, "JSON output");

  auto* seg = app.add_subcommand("segment", "Breakpoints of the segment from p to q");
  seg->add_option("-p", p_arg, "Start point")->required();
  seg->add_option("-q", q_arg, "End point")->required();

  auto* v2h = app.add_subcommand("vrep2hrep", "Closed halfspaces describing tconv(A)");
  v2h->add_option("-A", a_arg, "Generators as columns")->required();
  v2h->add_flag("--json", json, "JSON output");
  v2h->add_option("--check", check, "Also test this many random hull points");
  v2h->add_option("--seed", seed, "Seed for --check");

  auto* h2v = app.add_subcommand("hrep2vrep", "Generators of a set given by rows a0 a1 ... ad");
  h2v->add_option("-A", a_arg, "Affine rows")->required();
  h2v->add_flag("--json", json, "JSON output");

  auto* lift = app.add_subcommand("liftcheck", "Puiseux lift of b from weights x");
  lift->add_option("-A", a_arg, "Generators as columns")->required();
  lift->add_option("-x", x_arg, "Weights")->required();
  lift->add_option("-b", b_arg, "Point in U(A x)")->required();

  auto* plot = app.add_subcommand("plot", "SVG drawing of a two-dimensional hull");
  plot->add_option("-A", a_arg, "Generators as columns")->required();
  plot->add_option("-H", h_arg, "Affine rows to shade");
  plot->add_option("--span", span, "Magnitude range shown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (feas->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      auto y = sep_solve(a);
      Json out;
      out["feasible"] = y.has_value();
      if (y) {
        out["separator"] = to_json(*y);
        out["product"] = to_json(vec_mat(*y, a));
      }
      print(out);
      return y ? kOk : kNegative;
    }
    if (fk->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      print(to_json(a, farkas(a)));
      return kOk;
    }
    if (mem->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      SymVector b = load_vector(b_arg);
      Json out;
      if (conic) {
        bool in = conic_member(a, b);
        out["member"] = in;
        print(out);
        return in ? kOk : kNegative;
      }
      MemberResult r = member(a, b);
      out["member"] = r.member;
      if (r.witness) out["witness"] = to_json(*r.witness);
      if (r.halfspace) out["halfspace"] = to_json(*r.halfspace);
      print(out);
      return r.member ? kOk : kNegative;
    }
    if (hull->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      if (svg) {
        PlotOptions opt;
        opt.span = parse_rational(span);
        std::cout << plot_svg(a, opt);
        return kOk;
      }
      Json out = to_json(orthant_hull(a));
      SymMatrix z = zeta_full(a);
      Json cols = Json::array();
      for (std::size_t j = 0; j < z.cols(); ++j) cols.push_back(to_json(z.column(j)));
      out["zeta"] = std::move(cols);
      print(out);
      return kOk;
    }
    if (elim->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      if (strict) {
        if (row < 1 || row > a.rows()) throw std::invalid_argument("--row must be in 1.." + std::to_string(a.rows()));
        SymMatrix r = fm_step_strict(a, row - 1);
        if (json) {
          print(to_json(r));
        } else {
          std::cout << format_matrix(r);
        }
        return kOk;
      }
      std::size_t v = var != 0 ? var : row;
      if (v < 1 || v + 1 > a.cols()) {
        throw std::invalid_argument("--var must be in 1.." + std::to_string(a.cols() == 0 ? 0 : a.cols() - 1));
      }
      auto rows = fm_step_nonstrict(rows_from_matrix(a), v);
      if (json) {
        print(to_json(rows));
      } else if (!rows.empty()) {
        std::cout << format_matrix(matrix_from_rows(rows));
      }
      return kOk;
    }
    if (seg->parsed()) {
      print(to_json(segment(load_vector(p_arg), load_vector(q_arg))));
      return kOk;
    }
    if (v2h->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      auto rows = vrep_to_hrep(a);
      int failures = 0;
      if (check > 0) {
        for (const SymVector& p : random_hull_points(a, check, seed)) {
          for (const AffineRow& r : rows) {
            if (!halfspace_contains(r, p)) {
              ++failures;
              break;
            }
          }
        }
      }
      if (json) {
        Json out;
        out["rows"] = to_json(rows);
        if (check > 0) out["check"] = {{"points", check}, {"seed", seed}, {"violations", failures}};
        print(out);
      } else {
        if (!rows.empty()) std::cout << format_matrix(matrix_from_rows(rows));
        if (check > 0) std::cerr << "checked " << check << " hull points, " << failures << " violations\n";
      }
      return failures == 0 ? kOk : kNegative;
    }
    if (h2v->parsed()) {
      SymMatrix g = hrep_to_vrep(rows_from_matrix(load_matrix(a_arg)));
      if (json) {
        print(to_json(g));
      } else {
        std::cout << format_matrix(g);
      }
      return kOk;
    }
    if (lift->parsed()) {
      SymMatrix a = load_matrix(a_arg);
      SymVector x = load_vector(x_arg);
      SymVector b = load_vector(b_arg);
      bool ok = lift_verify(a, x, b);
      Json out;
      out["verified"] = ok;
      if (ok) {
        PuiseuxMatrix l = lift_construct(a, x, b);
        Json rows = Json::array();
        for (const auto& r : l) {
          Json jr = Json::array();
          for (const auto& s : r) jr.push_back(to_string(s));
          rows.push_back(std::move(jr));
        }
        out["lift"] = std::move(rows);
        Json comb = Json::array();
        for (const auto& s : lift_combination(l, x)) comb.push_back(to_string(s));
        out["combination"] = std::move(comb);
      }
      print(out);
      return ok ? kOk : kNegative;
    }
    if (plot->parsed()) {
      PlotOptions opt;
      opt.span = parse_rational(span);
      if (!h_arg.empty()) opt.halfspaces = rows_from_matrix(load_matrix(h_arg));
      std::cout << plot_svg(load_matrix(a_arg), opt);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return kInputError;
}
