#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "genpascal/fractal.hpp"
#include "genpascal/render.hpp"
#include "oracles.hpp"

using namespace genpascal;
using namespace genpascal::literals;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(GENPASCAL_GOLDEN_DIR) + "/" + name); }

// P1 text built straight from subword counts, rows in genealogical order.
std::string oracle_pbm(unsigned n, std::uint32_t p, std::uint32_t r) {
  const std::size_t size = std::size_t{1} << n;
  std::string out = "P1\n" + std::to_string(size) + " " + std::to_string(size) + "\n";
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (j > 0) out += ' ';
      out += oracle::count_subwords(oracle::binary(i), oracle::binary(j)) % p == r ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

Dyadic d(std::int64_t num, unsigned exp) { return Dyadic(num, exp); }

const Box kUnit{{Dyadic(), Dyadic()}, {Dyadic::integer(1), Dyadic::integer(1)}};

}  // namespace

TEST(GridPbm, DepthZero) { EXPECT_EQ(render_grid_pbm(build_grid(0, Prime(2)), 1), "P1\n1 1\n1\n"); }

TEST(GridPbm, MatchesSubwordCounts) {
  for (unsigned n : {1u, 3u, 5u}) {
    EXPECT_EQ(render_grid_pbm(build_grid(n, Prime(2)), 1), oracle_pbm(n, 2, 1));
    EXPECT_EQ(render_grid_pbm(build_grid(n, Prime(3)), 2), oracle_pbm(n, 3, 2));
  }
}

TEST(GridPbm, ResidueTwoModThree) {
  const Raster img = grid_raster(build_grid(3, Prime(3)), 2);
  std::size_t ones = 0;
  for (auto bit : img.bits) ones += bit;
  // Cells holding a value ≡ 2 mod 3, counted by brute force.
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      expected += oracle::count_subwords(oracle::binary(i), oracle::binary(j)) % 3 == 2;
  EXPECT_EQ(ones, expected);
  EXPECT_EQ(img(3, 1), 1);  // binom(11, 1) = 2
  EXPECT_EQ(img(7, 1), 0);  // binom(111, 1) = 3
}

TEST(GridPbm, Goldens) {
  EXPECT_EQ(render_grid_pbm(build_grid(3, Prime(2)), 1), golden("t3_p2_r1.pbm"));
  EXPECT_EQ(render_grid_pbm(build_grid(4, Prime(2)), 1), golden("t4_p2_r1.pbm"));
  EXPECT_EQ(render_grid_pbm(build_grid(7, Prime(3)), 2), golden("t7_p3_r2.pbm"));
  EXPECT_EQ(golden("t7_p3_r2.pbm"), oracle_pbm(7, 3, 2));
}

TEST(GridPbm, RejectsResidue) {
  EXPECT_THROW(render_grid_pbm(build_grid(2, Prime(3)), 3), std::invalid_argument);
  EXPECT_THROW(render_grid_pbm(build_grid(2, Prime(3)), 0), std::invalid_argument);
}

TEST(Raster, Orientation) {
  const ResidueGrid g = build_grid(4, Prime(2));
  const Raster math = math_raster(g, 1);
  const Raster fig = grid_raster(g, 1);
  EXPECT_EQ(flip_vertical(fig), math);
  EXPECT_EQ(flip_vertical(flip_vertical(math)), math);
  EXPECT_EQ(fig(0, 0), 1);    // u = v = ε at the top left
  EXPECT_EQ(fig(0, 15), 0);
  EXPECT_EQ(math(15, 0), 1);  // ε is the bottom row in math orientation
  EXPECT_EQ(math(0, 15), 1);  // diagonal ends top right
}

TEST(Pbm, RoundTrip) {
  for (std::uint32_t p : {2u, 5u}) {
    const Raster img = grid_raster(build_grid(6, Prime(p)), 1);
    EXPECT_EQ(parse_pbm(serialize_pbm(img)), img);
  }
  Raster wide{3, 2, {1, 0, 1, 0, 1, 1}};
  EXPECT_EQ(serialize_pbm(wide), "P1\n3 2\n1 0 1\n0 1 1\n");
  EXPECT_EQ(parse_pbm(serialize_pbm(wide)), wide);
}

TEST(Pbm, ParsesCommentsAndWhitespace) {
  const Raster img = parse_pbm("P1\n# comment\n2  2\n1 0\n\n0\t1 # trailing\n");
  EXPECT_EQ(img, (Raster{2, 2, {1, 0, 0, 1}}));
  EXPECT_EQ(parse_pbm("P1 2 1 10"), (Raster{2, 1, {1, 0}}));
}

TEST(Pbm, RejectsMalformed) {
  EXPECT_THROW(parse_pbm("P4\n1 1\n1\n"), std::invalid_argument);
  EXPECT_THROW(parse_pbm("P1\n2 2\n1 0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_pbm("P1\n1 1\n2\n"), std::invalid_argument);
  EXPECT_THROW(parse_pbm("P1\nx 1\n1\n"), std::invalid_argument);
}

TEST(Svg, UnitSquare) {
  PieceSet set;
  set.boxes.push_back(kUnit);
  const std::string svg = render_pieces_svg(set, 0.5, 1024);
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_NE(svg.find(R"(<rect x="0" y="0" width="1024" height="1024" fill="black"/>)"), std::string::npos);
  EXPECT_NE(svg.find(R"(viewBox="0 0 1024 1024")"), std::string::npos);
}

TEST(Svg, BaseSegment) {
  PieceSet set;
  set.segments.segments.push_back(segment_for("1"_w, "1"_w));
  const std::string svg = render_pieces_svg(set, 0.5, 1024);
  EXPECT_EQ(count(svg, "<line"), 1u);
  EXPECT_NE(svg.find(R"(<line x1="512" y1="512" x2="1024" y2="0" stroke="black" stroke-width="0.5"/>)"),
            std::string::npos);
  EXPECT_THROW(render_pieces_svg(PieceSet{}, 0.5, 1024), std::invalid_argument);
}

TEST(Svg, ApproximantStructure) {
  PieceSet set;
  set.segments = build_An(build_A0(8, odd_modulus()), 4);
  const std::string svg = render_pieces_svg(set, 0.5, 1024);
  EXPECT_EQ(count(svg, "<line"), set.segments.size());
  const std::regex coord(R"re((x1|y1|x2|y2)="([^"]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), coord); it != std::sregex_iterator(); ++it) {
    const double v = std::stod((*it)[2]);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1024.0);
  }
  EXPECT_EQ(svg, render_pieces_svg(set, 0.5, 1024));
}

TEST(Zoom, FullWindowMatchesPlainRender) {
  PieceSet set = build_Un_pieces(3, odd_modulus());
  set.segments = build_An(build_A0(6, odd_modulus()), 2);
  EXPECT_EQ(render_zoom(set, kUnit, 0.5, 512), render_pieces_svg(set, 0.5, 512));
}

TEST(Zoom, DisjointWindowIsEmpty) {
  PieceSet set;
  set.segments.segments.push_back(segment_for("1"_w, "1"_w));
  const Box away{{d(1, 3), d(1, 3)}, {d(1, 2), d(1, 2)}};
  const std::string svg = render_zoom(set, away, 0.5, 512);
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(count(svg, "<rect"), 0u);
  EXPECT_THROW(render_zoom(set, Box{{d(1, 1), Dyadic()}, {d(1, 1), Dyadic::integer(1)}}, 0.5, 512),
               std::invalid_argument);
}

TEST(Zoom, AccumulationWindow) {
  const Box window{{d(17, 9), d(27, 9)}, {d(1, 4), d(17, 5)}};
  PieceSet set;
  set.segments = build_A0(9, odd_modulus());
  const PieceSet clipped = clip_pieces(set, window);
  for (unsigned rr = 0; rr <= 3; ++rr) {
    const auto member = family_gap(0, rr);
    const Segment s = segment_for(member.u, member.v);
    bool found = false;
    for (const auto& c : clipped.segments.segments) found = found || c == s;
    EXPECT_TRUE(found) << rr;
  }
  for (const auto& c : clipped.segments.segments) {
    for (const Point& q : {c.a, c.b}) {
      ASSERT_GE(q.x, window.lo.x);
      ASSERT_LE(q.x, window.hi.x);
      ASSERT_GE(q.y, window.lo.y);
      ASSERT_LE(q.y, window.hi.y);
    }
  }
  const std::string svg = render_zoom(set, window, 0.5, 1024);
  EXPECT_EQ(count(svg, "<line"), clipped.segments.size());
}
