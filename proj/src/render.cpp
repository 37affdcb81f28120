#include "genpascal/render.hpp"

#include "genpascal/export.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <stdexcept>

namespace genpascal {

Raster math_raster(const ResidueGrid& grid, std::uint32_t r) {
  if (r < 1 || r >= grid.prime.value()) throw std::invalid_argument("residue out of range");
  const std::size_t size = grid.size();
  Raster image{size, size, std::vector<std::uint8_t>(size * size, 0)};
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) image(size - 1 - i, j) = grid(i, j) == r ? 1 : 0;
  }
  return image;
}

Raster flip_vertical(const Raster& image) {
  Raster out{image.width, image.height, std::vector<std::uint8_t>(image.bits.size())};
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) out(image.height - 1 - row, col) = image(row, col);
  }
  return out;
}

Raster grid_raster(const ResidueGrid& grid, std::uint32_t r) { return flip_vertical(math_raster(grid, r)); }

std::string serialize_pbm(const Raster& image) {
  std::string out = "P1\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n";
  out.reserve(out.size() + image.bits.size() * 2);
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) {
      if (col > 0) out.push_back(' ');
      out.push_back(image(row, col) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

class PbmLexer {
 public:
  explicit PbmLexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t number() {
    const std::string_view t = token();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) throw std::invalid_argument("PBM: bad dimension");
    return value;
  }

  // In plain PBM the pixels need no separators.
  std::uint8_t pixel() {
    skip();
    if (pos_ >= text_.size()) throw std::invalid_argument("PBM: truncated raster");
    const char c = text_[pos_++];
    if (c != '0' && c != '1') throw std::invalid_argument("PBM: bad pixel");
    return c == '1';
  }

  bool at_end() {
    skip();
    return pos_ == text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Raster parse_pbm(std::string_view text) {
  PbmLexer lex(text);
  if (lex.token() != "P1") throw std::invalid_argument("PBM: expected P1 magic");
  Raster image;
  image.width = lex.number();
  image.height = lex.number();
  image.bits.resize(image.width * image.height);
  for (auto& bit : image.bits) bit = lex.pixel();
  if (!lex.at_end()) throw std::invalid_argument("PBM: trailing data");
  return image;
}

namespace {

std::string fmt(double value) { return format_real(value); }

}  // namespace

PieceSet clip_pieces(const PieceSet& pieces, const Box& window) {
  PieceSet out;
  out.segments.provenance = pieces.segments.provenance;
  for (const auto& b : pieces.boxes) {
    if (auto c = clip(b, window); c && c->lo.x < c->hi.x && c->lo.y < c->hi.y) out.boxes.push_back(*c);
  }
  for (const auto& s : pieces.segments.segments) {
    if (auto c = clip(s, window); c && !c->degenerate()) out.segments.segments.push_back(*c);
  }
  return out;
}

std::string render_zoom(const PieceSet& pieces, const Box& window, double stroke_width, unsigned canvas_px) {
  if (!(window.lo.x < window.hi.x) || !(window.lo.y < window.hi.y)) {
    throw std::invalid_argument("zoom window is empty");
  }
  const PieceSet clipped = clip_pieces(pieces, window);
  const double w = (window.hi.x - window.lo.x).to_double();
  const double h = (window.hi.y - window.lo.y).to_double();
  const double scale = canvas_px / std::max(w, h);
  const double width = w * scale;
  const double height = h * scale;
  const double ox = window.lo.x.to_double();
  const double oy = window.lo.y.to_double();
  auto map_x = [&](const Dyadic& v) { return (v.to_double() - ox) * scale; };
  auto map_y = [&](const Dyadic& v) { return height - (v.to_double() - oy) * scale; };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  for (const auto& b : clipped.boxes) {
    out += "<rect x=\"" + fmt(map_x(b.lo.x)) + "\" y=\"" + fmt(map_y(b.hi.y)) + "\" width=\"" +
           fmt(map_x(b.hi.x) - map_x(b.lo.x)) + "\" height=\"" + fmt(map_y(b.lo.y) - map_y(b.hi.y)) +
           "\" fill=\"black\"/>\n";
  }
  for (const auto& s : clipped.segments.segments) {
    out += "<line x1=\"" + fmt(map_x(s.a.x)) + "\" y1=\"" + fmt(map_y(s.a.y)) + "\" x2=\"" + fmt(map_x(s.b.x)) +
           "\" y2=\"" + fmt(map_y(s.b.y)) + "\" stroke=\"black\" stroke-width=\"" + fmt(stroke_width) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_pieces_svg(const PieceSet& pieces, double stroke_width, unsigned canvas_px) {
  if (pieces.empty()) throw std::invalid_argument("nothing to render");
  const Box unit{{Dyadic::integer(0), Dyadic::integer(0)}, {Dyadic::integer(1), Dyadic::integer(1)}};
  return render_zoom(pieces, unit, stroke_width, canvas_px);
}

}  // namespace genpascal
