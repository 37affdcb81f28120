#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "genpascal/binomial.hpp"
#include "genpascal/export.hpp"
#include "genpascal/fractal.hpp"
#include "genpascal/hausdorff.hpp"
#include "genpascal/render.hpp"

namespace genpascal::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string u, v;
  std::optional<std::uint32_t> coeff_p;
  unsigned n = 0;
  unsigned max_len = 0;
  unsigned level = 4;
  unsigned n_min = 0, n_max = 0;
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  unsigned grid_exp = kDefaultGridExp;
  unsigned depth_cap = kDefaultDepthCap;
  unsigned length_cap = kDefaultStarLengthCap;
  std::string format;
  std::string out_path;
  std::string svg_path;
  std::string json_path;
  double stroke = 0.5;
  unsigned canvas = 1024;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomically(path, content);
  }
}

int cmd_coeff(const Options& o, std::ostream& out) {
  const Word u = Word::parse(o.u);
  const Word v = Word::parse(o.v);
  const std::optional<Prime> p = o.coeff_p ? std::optional<Prime>(Prime(*o.coeff_p)) : std::nullopt;
  out << binom_words(u, v);
  if (p) out << ' ' << binom_words_mod(u, v, *p);
  out << '\n';
  return kExitOk;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const Modulus m(o.p, o.r);
  const std::string format = o.format.empty() ? "pbm" : o.format;
  if (format != "pbm" && format != "json" && format != "csv") throw UsageError("triangle: --format must be pbm, json or csv");
  const ResidueGrid grid = build_grid(o.n, m.prime(), o.depth_cap);
  const SquareSet set = squares(grid, m.residue());
  if (!o.out_path.empty()) {
    std::string content;
    if (format == "pbm") {
      content = render_grid_pbm(grid, m.residue());
    } else if (format == "json") {
      content = squares_json(set).dump() + "\n";
    } else {
      if (m != odd_modulus()) throw UsageError("triangle: csv counters are defined for p = 2, r = 1");
      content = counters_csv(o.n);
    }
    write_atomically(o.out_path, content);
  }
  out << set.size() << '\n';
  return kExitOk;
}

int cmd_stars(const Options& o, std::ostream& out) {
  const Modulus m(o.p, o.r);
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv") throw UsageError("stars: --format must be json or csv");
  const auto pairs = enumerate_star_pairs(o.max_len, m, o.length_cap);
  if (!o.out_path.empty()) {
    write_atomically(o.out_path, format == "json" ? star_pairs_json(pairs).dump() + "\n" : star_pairs_csv(pairs));
  }
  out << pairs.size() << '\n';
  return kExitOk;
}

SegmentSet approximant(const Options& o, unsigned level) {
  const Modulus m(o.p, o.r);
  const SegmentSet a0 = build_A0(o.max_len, m, o.length_cap);
  if (a0.empty()) throw UsageError("no star pairs with |u| <= " + std::to_string(o.max_len) + ": A_0 is empty");
  return build_An(a0, level);
}

int cmd_fractal(const Options& o, std::ostream& out) {
  PieceSet pieces;
  pieces.segments = approximant(o, o.n);
  if (!o.svg_path.empty()) write_atomically(o.svg_path, render_pieces_svg(pieces, o.stroke, o.canvas));
  if (!o.json_path.empty()) write_atomically(o.json_path, segments_json(pieces.segments).dump() + "\n");
  out << pieces.segments.size() << '\n';
  return kExitOk;
}

int cmd_converge(const Options& o, std::ostream& out) {
  if (o.n_min > o.n_max) throw UsageError("converge: empty range " + std::to_string(o.n_min) + ".." + std::to_string(o.n_max));
  if (o.n_max > o.depth_cap) throw std::length_error("converge: n_max exceeds depth cap " + std::to_string(o.depth_cap));
  const Modulus m(o.p, o.r);
  PieceSet target;
  target.segments = approximant(o, o.level);
  std::vector<ConvergenceRow> rows;
  for (unsigned n = o.n_min; n <= o.n_max; ++n) {
    const PieceSet un = build_Un_pieces(n, m, o.depth_cap);
    if (un.empty()) {
      throw UsageError("converge: U_" + std::to_string(n) + " is empty for this residue");
    }
    const HausdorffEstimate d = hausdorff(un, target, o.grid_exp);
    rows.push_back({n, o.grid_exp, d.estimate, d.error_bound});
  }
  emit(o.out_path, convergence_csv(rows), out);
  return kExitOk;
}

void add_modulus(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "prime modulus")->capture_default_str();
  cmd->add_option("--r", o.r, "residue class, 1 <= r < p")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Pascal triangle of binary words: coefficients, triangles, star pairs, fractal approximants"};
  app.require_subcommand(1);
  Options o;

  auto* coeff = app.add_subcommand("coeff", "binomial coefficient of two binary words");
  coeff->add_option("u", o.u, "word")->required();
  coeff->add_option("v", o.v, "subword")->required();
  coeff->add_option("--p", o.coeff_p, "also print the residue mod this prime");

  auto* triangle = app.add_subcommand("triangle", "residue grid over L_n, square set T_{n,r}");
  triangle->add_option("--n", o.n, "depth")->required();
  add_modulus(triangle, o);
  triangle->add_option("--format", o.format, "pbm (default), json or csv");
  triangle->add_option("--out,-o", o.out_path, "artifact path");
  triangle->add_option("--cap", o.depth_cap, "depth cap")->capture_default_str();

  auto* stars = app.add_subcommand("stars", "enumerate star pairs");
  stars->add_option("--max-len", o.max_len, "largest |u|")->required();
  add_modulus(stars, o);
  stars->add_option("--format", o.format, "json (default) or csv");
  stars->add_option("--out,-o", o.out_path, "artifact path");
  stars->add_option("--cap", o.length_cap, "max-len cap")->capture_default_str();

  auto* fractal = app.add_subcommand("fractal", "segment approximant of level n");
  fractal->add_option("--max-len", o.max_len, "largest |u| for A_0")->required();
  fractal->add_option("--n", o.n, "level")->required();
  add_modulus(fractal, o);
  fractal->add_option("--svg", o.svg_path, "vector render path");
  fractal->add_option("--json", o.json_path, "segment list path");
  fractal->add_option("--stroke", o.stroke, "stroke width in canvas pixels")->capture_default_str();
  fractal->add_option("--canvas", o.canvas, "canvas size in pixels")->capture_default_str();
  fractal->add_option("--cap", o.length_cap, "max-len cap")->capture_default_str();

  auto* converge = app.add_subcommand("converge", "Hausdorff diagnostics between U_n and a fixed approximant");
  converge->add_option("n_min", o.n_min, "first n")->required();
  converge->add_option("n_max", o.n_max, "last n")->required();
  converge->add_option("--max-len", o.max_len, "largest |u| for A_0")->capture_default_str()->default_val(8);
  converge->add_option("--level", o.level, "approximant level")->capture_default_str();
  converge->add_option("--grid-exp", o.grid_exp, "sampling resolution exponent")->capture_default_str();
  add_modulus(converge, o);
  converge->add_option("--out,-o", o.out_path, "CSV path (default: standard output)");
  converge->add_option("--cap", o.depth_cap, "depth cap")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(o, out);
    if (triangle->parsed()) return cmd_triangle(o, out);
    if (stars->parsed()) return cmd_stars(o, out);
    if (fractal->parsed()) return cmd_fractal(o, out);
    if (converge->parsed()) return cmd_converge(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace genpascal::cli
