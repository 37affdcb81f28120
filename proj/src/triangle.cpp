#include "genpascal/triangle.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace genpascal {

namespace {

void check_depth(unsigned depth, unsigned cap) {
  if (depth > cap) {
    throw std::length_error("depth " + std::to_string(depth) + " exceeds cap " +
                            std::to_string(cap));
  }
  if (depth > 15) throw std::length_error("depth above 15 is not addressable");
}

}  // namespace

ResidueGrid build_grid(unsigned depth, Prime p, unsigned cap) {
  check_depth(depth, cap);
  if (p.value() > 255) throw std::invalid_argument("grid residues are stored in 8 bits; p must be < 256");

  const Eigen::Index size = Eigen::Index{1} << depth;
  ResidueGrid grid{depth, p, GridArray<std::uint8_t>::Zero(size, size)};
  auto& cells = grid.cells;
  const unsigned mod = p.value();

  cells(0, 0) = 1;
  for (Eigen::Index i = 1; i < size; ++i) {
    const Eigen::Index parent = i >> 1;
    const Eigen::Index bit = i & 1;
    cells(i, 0) = 1;
    for (Eigen::Index j = 1; j < size; ++j) {
      unsigned value = cells(parent, j);
      if ((j & 1) == bit) value += cells(parent, j >> 1);
      if (value >= mod) value -= mod;
      cells(i, j) = static_cast<std::uint8_t>(value);
    }
  }
  return grid;
}

SquareSet squares(const ResidueGrid& grid, std::uint32_t r) {
  if (r < 1 || r >= grid.prime.value()) {
    throw std::invalid_argument("residue " + std::to_string(r) + " out of range");
  }
  SquareSet set;
  set.depth = grid.depth;
  set.p = grid.prime.value();
  set.r = r;
  const std::size_t size = grid.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (grid(i, j) == r) set.anchors.push_back({j, i});
    }
  }
  return set;
}

std::uint64_t count_unit_squares(unsigned n, unsigned cap) {
  const ResidueGrid grid = build_grid(n, Prime(2), cap);
  return static_cast<std::uint64_t>((grid.cells == 1).count());
}

std::uint64_t count_positive_pairs(unsigned n, unsigned cap) {
  check_depth(n, cap);
  // Same prefix recurrence as build_grid, over the positivity semiring.
  const Eigen::Index size = Eigen::Index{1} << n;
  GridArray<std::uint8_t> positive = GridArray<std::uint8_t>::Zero(size, size);
  positive(0, 0) = 1;
  for (Eigen::Index i = 1; i < size; ++i) {
    const Eigen::Index parent = i >> 1;
    const Eigen::Index bit = i & 1;
    positive(i, 0) = 1;
    for (Eigen::Index j = 1; j < size; ++j) {
      positive(i, j) = positive(parent, j) | (((j & 1) == bit) ? positive(parent, j >> 1) : 0);
    }
  }
  return static_cast<std::uint64_t>((positive != 0).count());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> build_Vn_by_maps(unsigned n) {
  if (n < 1) throw std::invalid_argument("V_n is defined for n >= 1");
  if (n > 30) throw std::length_error("V_n above n = 30 is not supported");
  std::set<std::pair<std::uint64_t, std::uint64_t>> current{{0, 1}, {1, 1}};
  for (unsigned k = 1; k < n; ++k) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& [x, y] : current) {
      next.emplace(2 * x, 2 * y);
      next.emplace(2 * x + 1, 2 * y + 1);
      next.emplace(x, 2 * y);
      next.emplace(x, 2 * y + 1);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

}  // namespace genpascal
