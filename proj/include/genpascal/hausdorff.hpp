#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "genpascal/geometry.hpp"

namespace genpascal {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// Euclidean distance from p to the closed segment [a, b].
template <typename Derived>
typename Derived::Scalar distance_to_segment(const Eigen::MatrixBase<Derived>& p,
                                             const Eigen::MatrixBase<Derived>& a,
                                             const Eigen::MatrixBase<Derived>& b) {
  using Scalar = typename Derived::Scalar;
  const auto d = (b - a).eval();
  const Scalar len2 = d.squaredNorm();
  if (len2 == Scalar(0)) return (p - a).norm();
  const Scalar t = std::clamp((p - a).dot(d) / len2, Scalar(0), Scalar(1));
  return (p - (a + t * d)).norm();
}

/// Euclidean distance from p to the closed box [lo, hi].
template <typename Derived>
typename Derived::Scalar distance_to_box(const Eigen::MatrixBase<Derived>& p,
                                         const Eigen::MatrixBase<Derived>& lo,
                                         const Eigen::MatrixBase<Derived>& hi) {
  return (p - p.cwiseMax(lo).cwiseMin(hi)).norm();
}

inline constexpr unsigned kDefaultGridExp = 12;
inline constexpr unsigned kMaxGridExp = 16;

/// Uniform bucket grid over a piece set answering exact point-to-set
/// distance queries.
class PieceIndex {
 public:
  PieceIndex(const PieceSet& pieces, const Eigen::AlignedBox2d& bounds);

  struct Nearest {
    double distance;
    std::uint32_t item;  // index in boxes-then-segments order
  };

  double distance(const Vec2<double>& p) const { return nearest(p).distance; }
  Nearest nearest(const Vec2<double>& p) const;
  double distance_to_item(std::uint32_t item, const Vec2<double>& p) const {
    return item_distance(items_[item], p);
  }

 private:
  struct Item {
    bool is_box;
    Vec2<double> lo;
    Vec2<double> hi;
  };

  double item_distance(const Item& item, const Vec2<double>& p) const;
  void add(std::uint32_t cell, std::uint32_t item, std::vector<std::vector<std::uint32_t>>& lists) const;

  std::vector<Item> items_;
  Vec2<double> origin_;
  double cell_ = 1.0;
  int cells_per_side_ = 1;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> members_;
};

/// Distance from p to the union of the pieces, by exhaustive scan.
double distance_to_pieces(const PieceSet& pieces, const Vec2<double>& p);

/// Largest spacing between neighbouring samples at resolution grid_exp.
/// Each segment is sampled at 2^grid_exp + 1 evenly spaced parameters,
/// each box on the (2^grid_exp + 1)^2 lattice spanning it.
double sample_spacing(const PieceSet& pieces, unsigned grid_exp);

/// max over samples x of `from` of d(x, to). Lipschitz branch and bound on
/// the sample lattice: the result equals the exhaustive maximum.
double directed_hausdorff(const PieceSet& from, const PieceSet& to, unsigned grid_exp);

struct HausdorffEstimate {
  double estimate;
  double error_bound;  // sqrt(2) * largest sample spacing
};

/// Deterministic estimate of the Hausdorff distance; the true value lies in
/// [estimate - error_bound, estimate + error_bound]. Throws
/// std::invalid_argument for empty operands or grid_exp > kMaxGridExp.
HausdorffEstimate hausdorff(const PieceSet& a, const PieceSet& b, unsigned grid_exp = kDefaultGridExp);

}  // namespace genpascal
