#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "genpascal/fractal.hpp"
#include "genpascal/hausdorff.hpp"

using namespace genpascal;
using namespace genpascal::literals;

namespace {

Point pt(double x, double y, unsigned e = 0) {
  return {Dyadic(static_cast<std::int64_t>(std::ldexp(x, static_cast<int>(e))), e),
          Dyadic(static_cast<std::int64_t>(std::ldexp(y, static_cast<int>(e))), e)};
}

PieceSet box_set(Point lo, Point hi) {
  PieceSet s;
  s.boxes.push_back({lo, hi});
  return s;
}

// Every sample of every piece, in double precision.
std::vector<Vec2<double>> samples(const PieceSet& set, unsigned g) {
  std::vector<Vec2<double>> out;
  const std::size_t steps = std::size_t{1} << g;
  for (const auto& b : set.boxes) {
    const Vec2<double> lo(b.lo.x.to_double(), b.lo.y.to_double());
    const Vec2<double> hi(b.hi.x.to_double(), b.hi.y.to_double());
    for (std::size_t i = 0; i <= steps; ++i)
      for (std::size_t j = 0; j <= steps; ++j)
        out.emplace_back(lo.x() + (hi.x() - lo.x()) * static_cast<double>(i) / static_cast<double>(steps),
                         lo.y() + (hi.y() - lo.y()) * static_cast<double>(j) / static_cast<double>(steps));
  }
  for (const auto& s : set.segments.segments) {
    const Vec2<double> a(s.a.x.to_double(), s.a.y.to_double());
    const Vec2<double> b(s.b.x.to_double(), s.b.y.to_double());
    for (std::size_t i = 0; i <= steps; ++i)
      out.push_back(a + (b - a) * (static_cast<double>(i) / static_cast<double>(steps)));
  }
  return out;
}

double exhaustive_directed(const PieceSet& from, const PieceSet& to, unsigned g) {
  double best = 0;
  for (const auto& p : samples(from, g)) best = std::max(best, distance_to_pieces(to, p));
  return best;
}

PieceSet segments_only(const SegmentSet& s) {
  PieceSet p;
  p.segments = s;
  return p;
}

PieceSet mixed() {
  PieceSet p = build_Un_pieces(3, odd_modulus());
  p.segments = build_An(build_A0(5, odd_modulus()), 2);
  return p;
}

}  // namespace

TEST(Distances, Segment) {
  const Vec2<double> a(0, 0), b(2, 0);
  EXPECT_DOUBLE_EQ(distance_to_segment(Vec2<double>(1, 1), a, b), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment(Vec2<double>(3, 0), a, b), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment(Vec2<double>(-3, 4), a, b), 5.0);
  EXPECT_DOUBLE_EQ(distance_to_segment(Vec2<double>(3, 4), a, a), 5.0);
  EXPECT_FLOAT_EQ(distance_to_segment(Vec2<float>(1, 1), Vec2<float>(0, 0), Vec2<float>(2, 2)), 0.0f);
}

TEST(Distances, Box) {
  const Vec2<double> lo(0, 0), hi(1, 1);
  EXPECT_DOUBLE_EQ(distance_to_box(Vec2<double>(0.5, 0.5), lo, hi), 0.0);
  EXPECT_DOUBLE_EQ(distance_to_box(Vec2<double>(2, 0.5), lo, hi), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_box(Vec2<double>(4, 5), lo, hi), 5.0);
}

TEST(PieceIndex, AgreesWithScan) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-0.25, 1.25);
  for (const PieceSet& set : {build_Un_pieces(6, odd_modulus()), segments_only(build_An(build_A0(8, odd_modulus()), 3)),
                              mixed()}) {
    const PieceIndex index(set, Eigen::AlignedBox2d(Vec2<double>(0, 0), Vec2<double>(1, 1)));
    for (int k = 0; k < 2000; ++k) {
      const Vec2<double> p(coord(rng), coord(rng));
      ASSERT_NEAR(index.distance(p), distance_to_pieces(set, p), 1e-15) << p.transpose();
    }
  }
}

TEST(SampleSpacing, Values) {
  EXPECT_DOUBLE_EQ(sample_spacing(box_set(pt(0, 0), pt(1, 1)), 2), 0.25);
  PieceSet s;
  s.segments.segments.push_back(segment_for("1"_w, "1"_w));
  EXPECT_DOUBLE_EQ(sample_spacing(s, 3), std::sqrt(0.5) / 8);
}

TEST(DirectedHausdorff, MatchesExhaustiveMaximum) {
  const PieceSet u4 = build_Un_pieces(4, odd_modulus());
  const PieceSet an = segments_only(build_An(build_A0(6, odd_modulus()), 2));
  const PieceSet mix = mixed();
  for (unsigned g : {0u, 2u, 4u}) {
    EXPECT_DOUBLE_EQ(directed_hausdorff(u4, an, g), exhaustive_directed(u4, an, g)) << g;
    EXPECT_DOUBLE_EQ(directed_hausdorff(an, u4, g), exhaustive_directed(an, u4, g)) << g;
    EXPECT_DOUBLE_EQ(directed_hausdorff(mix, u4, g), exhaustive_directed(mix, u4, g)) << g;
  }
}

TEST(Hausdorff, Axioms) {
  const std::vector<PieceSet> family{build_Un_pieces(3, odd_modulus()), build_Un_pieces(5, odd_modulus()),
                                     segments_only(build_An(build_A0(6, odd_modulus()), 2)), mixed()};
  for (const auto& x : family) EXPECT_EQ(hausdorff(x, x, 6).estimate, 0.0);
  for (const auto& x : family) {
    for (const auto& y : family) {
      const auto xy = hausdorff(x, y, 6);
      const auto yx = hausdorff(y, x, 6);
      EXPECT_EQ(xy.estimate, yx.estimate);
      EXPECT_GE(xy.estimate, 0.0);
      for (const auto& z : family) {
        const auto xz = hausdorff(x, z, 6);
        const auto zy = hausdorff(z, y, 6);
        const double slack = 3 * std::max({xy.error_bound, xz.error_bound, zy.error_bound});
        EXPECT_LE(xy.estimate, xz.estimate + zy.estimate + slack);
      }
    }
  }
}

TEST(Hausdorff, AdjacentUnitSquares) {
  const auto h = hausdorff(box_set(pt(0, 0), pt(1, 1)), box_set(pt(1, 0), pt(2, 1)));
  EXPECT_LE(std::abs(h.estimate - 1.0), h.error_bound);
  EXPECT_DOUBLE_EQ(h.estimate, 1.0);
  EXPECT_DOUBLE_EQ(h.error_bound, std::sqrt(2.0) / 4096);
}

TEST(Hausdorff, Refinement) {
  const PieceSet u = build_Un_pieces(5, odd_modulus());
  const PieceSet a = segments_only(build_An(build_A0(7, odd_modulus()), 3));
  for (unsigned g = 2; g < 10; ++g) {
    const auto coarse = hausdorff(u, a, g);
    const auto fine = hausdorff(u, a, g + 1);
    EXPECT_LE(std::abs(coarse.estimate - fine.estimate), coarse.error_bound) << g;
    EXPECT_DOUBLE_EQ(fine.error_bound * 2, coarse.error_bound) << g;
  }
}

TEST(Hausdorff, Errors) {
  const PieceSet unit = box_set(pt(0, 0), pt(1, 1));
  EXPECT_THROW(hausdorff(PieceSet{}, unit), std::invalid_argument);
  EXPECT_THROW(hausdorff(unit, PieceSet{}), std::invalid_argument);
  EXPECT_THROW(hausdorff(unit, unit, kMaxGridExp + 1), std::invalid_argument);
  EXPECT_NO_THROW(hausdorff(unit, unit, kMaxGridExp));
}
