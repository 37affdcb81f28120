#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "genpascal/binomial.hpp"

namespace genpascal {

template <typename Scalar>
using GridArray = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr unsigned kDefaultDepthCap = 12;

/// Residues binom(w_i, w_j) mod p for 0 <= i, j < 2^depth, where w_i is the
/// i-th word of L in genealogical order. Row i is the word u = w_i, column
/// j the word v = w_j.
struct ResidueGrid {
  unsigned depth;
  Prime prime;
  GridArray<std::uint8_t> cells;

  std::size_t size() const { return static_cast<std::size_t>(cells.rows()); }
  std::uint8_t operator()(std::size_t i, std::size_t j) const {
    return cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
};

/// Builds the grid row by row from the prefix row: w_i = w_{i/2} (i mod 2),
/// so binom(w_i, w_j) = binom(w_{i/2}, w_j) + [i ≡ j mod 2] binom(w_{i/2}, w_{j/2}).
///
/// Throws std::length_error when depth > cap and std::invalid_argument when
/// p does not fit the 8-bit residue storage.
ResidueGrid build_grid(unsigned depth, Prime p, unsigned cap = kDefaultDepthCap);

/// Unit squares (val2(v), val2(u)) + [0,1]^2 of T_{n,r}, stored by their
/// integer lower-left anchors {x, y}. Dividing by 2^depth gives U_{n,r}.
struct SquareSet {
  unsigned depth = 0;
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::vector<std::array<std::uint64_t, 2>> anchors;  // row-major scan order: y, then x

  std::size_t size() const { return anchors.size(); }
};

/// Cells of the grid holding residue r. Throws std::invalid_argument unless
/// 1 <= r < p.
SquareSet squares(const ResidueGrid& grid, std::uint32_t r);

/// Number of unit squares of T_n (p = 2, r = 1).
std::uint64_t count_unit_squares(unsigned n, unsigned cap = kDefaultDepthCap);

/// Number of pairs (u, v) in L_n x L_n with binom(u, v) > 0.
std::uint64_t count_positive_pairs(unsigned n, unsigned cap = kDefaultDepthCap);

/// V_n generated from V_1 = {(0,1), (1,1)} by the four maps
/// (2x,2y), (2x+1,2y+1), (x,2y), (x,2y+1). Points are (x, y) with
/// x = val2(v), y = val2(u). Sorted, without duplicates.
std::vector<std::pair<std::uint64_t, std::uint64_t>> build_Vn_by_maps(unsigned n);

}  // namespace genpascal
