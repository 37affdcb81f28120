#pragma once

#include "genpascal/geometry.hpp"
#include "genpascal/star_pairs.hpp"
#include "genpascal/triangle.hpp"

namespace genpascal {

/// Finite truncation of A_0: segments S_{u,v} for the star pairs with
/// |u| <= max_len. Every omitted segment has length <= sqrt(2) 2^{-(max_len+1)}.
SegmentSet build_A0(unsigned max_len, const Modulus& m, unsigned cap = kDefaultStarLengthCap);

/// Union of h^j(c^i(a0)) over 0 <= j <= i <= n, exact duplicates removed.
/// Order: by i, then j, then position in a0.
SegmentSet build_An(const SegmentSet& a0, unsigned n);

/// U_{n,r} = T_{n,r} / 2^n, as boxes of side 2^{-n}.
PieceSet build_Un_pieces(unsigned n, const Modulus& m, unsigned cap = kDefaultDepthCap);

/// The unit squares of a SquareSet, at integer coordinates (T_{n,r}).
std::vector<Box> unit_boxes(const SquareSet& squares);

/// Compares A_small and A_large restricted to the strip x >= 2^{-(small+1)}.
///
/// Parts of A_large that only touch the strip's left edge in isolated
/// points are dropped on both sides: they belong to the closure of A_0 but
/// not to any finite truncation of it.
bool stabilisation_check(const SegmentSet& a0, unsigned small, unsigned large);

}  // namespace genpascal
