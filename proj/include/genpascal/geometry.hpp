#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "genpascal/dyadic.hpp"
#include "genpascal/word.hpp"

namespace genpascal {

struct Point {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Closed segment with a <= b componentwise.
struct Segment {
  Point a;
  Point b;

  bool degenerate() const { return a == b; }
  /// j such that b - a is proportional to (1, 2^j), if any.
  std::optional<int> slope_exponent() const;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Closed axis-aligned box [lo.x, hi.x] x [lo.y, hi.y]. The squares of U_n
/// are boxes; so are their images under the vertical doubling map.
struct Box {
  Point lo;
  Point hi;

  bool empty() const { return hi.x < lo.x || hi.y < lo.y; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Where a segment set came from: star pairs with |u| <= max_len for
/// modulus (p, r), pushed through the maps up to level n.
struct Provenance {
  unsigned max_len = 0;
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  unsigned n = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SegmentSet {
  std::vector<Segment> segments;
  Provenance provenance;
  bool maximal = false;

  std::size_t size() const { return segments.size(); }
  bool empty() const { return segments.empty(); }
};

/// Operand of the Hausdorff estimator and the renderers: a finite union of
/// boxes and segments.
struct PieceSet {
  std::vector<Box> boxes;
  SegmentSet segments;

  bool empty() const { return boxes.empty() && segments.empty(); }
};

/// 0.w = sum w_i / 2^i.
Dyadic binary_fraction(const Word& w);

/// S_{u,v}: from A = (0.0^{|u|-|v|}v, 0.u) to A + (2^{-|u|}, 2^{-|u|}).
/// Requires canonical u, v with |u| >= |v| >= 1.
Segment segment_for(const Word& u, const Word& v);

/// Homothety of center 0 and ratio 1/2, applied `times` times.
Point apply_c(const Point& p, unsigned times);
Segment apply_c(const Segment& s, unsigned times);
Box apply_c(const Box& b, unsigned times);
PieceSet apply_c(const PieceSet& s, unsigned times);

/// (x, y) -> (x, 2y), applied `times` times. Throws std::out_of_range if a
/// result leaves [0,1] x [0,1].
Segment apply_h(const Segment& s, unsigned times);
PieceSet apply_h(const PieceSet& s, unsigned times);

bool on_segment(const Point& p, const Segment& s);

enum class Nesting {
  contains,              // second ⊂ first
  contained,             // first ⊂ second
  disjoint_or_endpoint,  // empty intersection or a single shared endpoint
  improper,              // any other intersection (crossing, partial overlap)
};

/// Exact geometric classification of two segments.
Nesting segment_nesting(const Segment& first, const Segment& second);

/// Word-level criterion for star pairs: S_{s,t} ⊂ S_{u,v} iff s = uw and
/// t = vz with |w| = |z|.
bool star_segment_contains(const Word& u, const Word& v, const Word& s, const Word& t);

/// Segments not strictly contained in another segment of the set (exact
/// duplicates keep their first occurrence). Input order is preserved.
/// Throws std::invalid_argument for segments whose slope is not a power
/// of two.
SegmentSet maximal_segments(const SegmentSet& set);

/// Point-set normal form of a union of segments: collinear overlapping or
/// touching pieces merged, isolated points kept only when not covered by a
/// segment, sorted.
std::vector<Segment> union_normal_form(const std::vector<Segment>& segments);

/// Exact intersection with a closed box; nullopt when empty.
std::optional<Segment> clip(const Segment& s, const Box& window);
std::optional<Box> clip(const Box& b, const Box& window);

}  // namespace genpascal
