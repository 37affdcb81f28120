#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genpascal/geometry.hpp"
#include "genpascal/triangle.hpp"

namespace genpascal {

/// Row-major bitmap; row 0 is the top of the image.
struct Raster {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t operator()(std::size_t row, std::size_t col) const { return bits[row * width + col]; }
  std::uint8_t& operator()(std::size_t row, std::size_t col) { return bits[row * width + col]; }

  friend bool operator==(const Raster&, const Raster&) = default;
};

/// Cells with residue r drawn in mathematical orientation: x = val2(v)
/// rightward, y = val2(u) upward, so the top image row is u = w_{2^n - 1}.
Raster math_raster(const ResidueGrid& grid, std::uint32_t r);

Raster flip_vertical(const Raster& image);

/// Figure orientation: flip of math_raster, top row u = ε, i.e. the grid's
/// rows in genealogical order as in the printed triangle.
Raster grid_raster(const ResidueGrid& grid, std::uint32_t r);

/// Plain PBM: "P1\n", "W H\n", then one line per row of space-separated
/// 0/1 values.
std::string serialize_pbm(const Raster& image);

/// Parses the plain PBM format written by serialize_pbm (comments and
/// arbitrary whitespace accepted). Throws std::invalid_argument.
Raster parse_pbm(std::string_view text);

inline std::string render_grid_pbm(const ResidueGrid& grid, std::uint32_t r) {
  return serialize_pbm(grid_raster(grid, r));
}

/// SVG drawing of the pieces in [0,1]^2, y axis pointing up. Boxes become
/// filled rects, segments lines, in the piece set's order.
std::string render_pieces_svg(const PieceSet& pieces, double stroke_width, unsigned canvas_px);

/// As render_pieces_svg, after clipping every piece exactly to the window
/// and mapping the window onto the canvas. Throws std::invalid_argument
/// for an empty or degenerate window.
std::string render_zoom(const PieceSet& pieces, const Box& window, double stroke_width, unsigned canvas_px);

/// The exact clipped pieces render_zoom draws.
PieceSet clip_pieces(const PieceSet& pieces, const Box& window);

}  // namespace genpascal
