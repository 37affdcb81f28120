#include "genpascal/fractal.hpp"

#include <set>
#include <stdexcept>

namespace genpascal {

SegmentSet build_A0(unsigned max_len, const Modulus& m, unsigned cap) {
  SegmentSet set;
  set.provenance = {max_len, m.prime().value(), m.residue(), 0};
  for (const auto& pair : enumerate_star_pairs(max_len, m, cap)) {
    set.segments.push_back(segment_for(pair.u, pair.v));
  }
  return set;
}

SegmentSet build_An(const SegmentSet& a0, unsigned n) {
  SegmentSet out;
  out.provenance = a0.provenance;
  out.provenance.n = n;
  std::set<Segment> seen;
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      for (const auto& s : a0.segments) {
        Segment image = apply_h(apply_c(s, i), j);
        if (seen.insert(image).second) out.segments.push_back(image);
      }
    }
  }
  return out;
}

std::vector<Box> unit_boxes(const SquareSet& squares) {
  std::vector<Box> boxes;
  boxes.reserve(squares.size());
  for (const auto& [x, y] : squares.anchors) {
    const Point lo{Dyadic::integer(static_cast<std::int64_t>(x)), Dyadic::integer(static_cast<std::int64_t>(y))};
    boxes.push_back({lo, {lo.x + Dyadic::integer(1), lo.y + Dyadic::integer(1)}});
  }
  return boxes;
}

PieceSet build_Un_pieces(unsigned n, const Modulus& m, unsigned cap) {
  const ResidueGrid grid = build_grid(n, m.prime(), cap);
  PieceSet tn;
  tn.boxes = unit_boxes(squares(grid, m.residue()));
  PieceSet un = apply_c(tn, n);
  un.segments.provenance = {0, m.prime().value(), m.residue(), n};
  return un;
}

namespace {

std::vector<Segment> strip_part(const SegmentSet& set, const Dyadic& left) {
  const Box strip{{left, Dyadic::integer(0)}, {Dyadic::integer(1), Dyadic::integer(1)}};
  std::vector<Segment> parts;
  for (const auto& s : set.segments) {
    if (auto c = clip(s, strip); c && !c->degenerate()) parts.push_back(*c);
  }
  return union_normal_form(parts);
}

}  // namespace

bool stabilisation_check(const SegmentSet& a0, unsigned small, unsigned large) {
  if (small > large) throw std::invalid_argument("stabilisation_check requires small <= large");
  const Dyadic left = Dyadic::inverse_power(small + 1);
  return strip_part(build_An(a0, small), left) == strip_part(build_An(a0, large), left);
}

}  // namespace genpascal
