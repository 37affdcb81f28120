#include "genpascal/hausdorff.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace genpascal {

namespace {

Vec2<double> to_vec(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

Eigen::AlignedBox2d bounds_of(const PieceSet& pieces) {
  Eigen::AlignedBox2d box;
  for (const auto& b : pieces.boxes) {
    box.extend(to_vec(b.lo));
    box.extend(to_vec(b.hi));
  }
  for (const auto& s : pieces.segments.segments) {
    box.extend(to_vec(s.a));
    box.extend(to_vec(s.b));
  }
  return box;
}

constexpr double kPad = 1e-12;

}  // namespace

PieceIndex::PieceIndex(const PieceSet& pieces, const Eigen::AlignedBox2d& bounds) {
  for (const auto& b : pieces.boxes) items_.push_back({true, to_vec(b.lo), to_vec(b.hi)});
  for (const auto& s : pieces.segments.segments) items_.push_back({false, to_vec(s.a), to_vec(s.b)});
  if (items_.empty()) throw std::invalid_argument("PieceIndex over an empty piece set");

  const double extent = std::max(bounds.sizes().maxCoeff(), 1e-9);
  cells_per_side_ = std::clamp(static_cast<int>(std::ceil(2.0 * std::sqrt(double(items_.size())))), 1, 1024);
  cell_ = extent / cells_per_side_;
  origin_ = bounds.min();

  std::vector<std::vector<std::uint32_t>> lists(static_cast<std::size_t>(cells_per_side_) * cells_per_side_);
  auto index_of = [&](double v, double o) {
    return std::clamp(static_cast<int>(std::floor((v - o) / cell_)), 0, cells_per_side_ - 1);
  };
  for (std::uint32_t id = 0; id < items_.size(); ++id) {
    const Item& item = items_[id];
    const int cx0 = index_of(item.lo.x() - kPad, origin_.x());
    const int cx1 = index_of(item.hi.x() + kPad, origin_.x());
    if (item.is_box) {
      const int cy0 = index_of(item.lo.y() - kPad, origin_.y());
      const int cy1 = index_of(item.hi.y() + kPad, origin_.y());
      for (int cy = cy0; cy <= cy1; ++cy)
        for (int cx = cx0; cx <= cx1; ++cx) add(static_cast<std::uint32_t>(cy * cells_per_side_ + cx), id, lists);
      continue;
    }
    // Segment: walk the columns it crosses and register the rows it spans in each.
    const Vec2<double> d = item.hi - item.lo;
    for (int cx = cx0; cx <= cx1; ++cx) {
      double ya = item.lo.y();
      double yb = item.hi.y();
      if (d.x() != 0.0) {
        const double x0 = std::max(item.lo.x(), origin_.x() + cx * cell_);
        const double x1 = std::min(item.hi.x(), origin_.x() + (cx + 1) * cell_);
        ya = item.lo.y() + (x0 - item.lo.x()) / d.x() * d.y();
        yb = item.lo.y() + (x1 - item.lo.x()) / d.x() * d.y();
      }
      const int cy0 = index_of(std::min(ya, yb) - kPad, origin_.y());
      const int cy1 = index_of(std::max(ya, yb) + kPad, origin_.y());
      for (int cy = cy0; cy <= cy1; ++cy) add(static_cast<std::uint32_t>(cy * cells_per_side_ + cx), id, lists);
    }
  }

  offsets_.reserve(lists.size() + 1);
  offsets_.push_back(0);
  for (const auto& list : lists) {
    members_.insert(members_.end(), list.begin(), list.end());
    offsets_.push_back(static_cast<std::uint32_t>(members_.size()));
  }
}

void PieceIndex::add(std::uint32_t cell, std::uint32_t item,
                     std::vector<std::vector<std::uint32_t>>& lists) const {
  auto& list = lists[cell];
  if (list.empty() || list.back() != item) list.push_back(item);
}

double PieceIndex::item_distance(const Item& item, const Vec2<double>& p) const {
  return item.is_box ? distance_to_box(p, item.lo, item.hi) : distance_to_segment(p, item.lo, item.hi);
}

PieceIndex::Nearest PieceIndex::nearest(const Vec2<double>& p) const {
  const int n = cells_per_side_;
  const int px = std::clamp(static_cast<int>(std::floor((p.x() - origin_.x()) / cell_)), 0, n - 1);
  const int py = std::clamp(static_cast<int>(std::floor((p.y() - origin_.y()) / cell_)), 0, n - 1);
  // Distance from p to anything outside the (2r+1)^2 block around its cell.
  const double outside_x = std::max(0.0, p.x() - (origin_.x() + n * cell_)) + std::max(0.0, origin_.x() - p.x());
  const double outside_y = std::max(0.0, p.y() - (origin_.y() + n * cell_)) + std::max(0.0, origin_.y() - p.y());
  const bool inside = outside_x == 0.0 && outside_y == 0.0;

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_item = 0;
  auto scan = [&](int cx, int cy) {
    if (cx < 0 || cy < 0 || cx >= n || cy >= n) return;
    const auto cell = static_cast<std::size_t>(cy * n + cx);
    for (std::uint32_t k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
      const double d = item_distance(items_[members_[k]], p);
      if (d < best) {
        best = d;
        best_item = members_[k];
      }
    }
  };
  for (int r = 0; r <= n; ++r) {
    if (r == 0) {
      scan(px, py);
    } else {
      for (int cx = px - r; cx <= px + r; ++cx) {
        scan(cx, py - r);
        scan(cx, py + r);
      }
      for (int cy = py - r + 1; cy <= py + r - 1; ++cy) {
        scan(px - r, cy);
        scan(px + r, cy);
      }
    }
    if (inside && best <= r * cell_) break;
  }
  return {best, best_item};
}

double distance_to_pieces(const PieceSet& pieces, const Vec2<double>& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : pieces.boxes) best = std::min(best, distance_to_box(p, to_vec(b.lo), to_vec(b.hi)));
  for (const auto& s : pieces.segments.segments)
    best = std::min(best, distance_to_segment(p, to_vec(s.a), to_vec(s.b)));
  return best;
}

double sample_spacing(const PieceSet& pieces, unsigned grid_exp) {
  double widest = 0.0;
  for (const auto& b : pieces.boxes) {
    widest = std::max({widest, (b.hi.x - b.lo.x).to_double(), (b.hi.y - b.lo.y).to_double()});
  }
  for (const auto& s : pieces.segments.segments) widest = std::max(widest, (to_vec(s.b) - to_vec(s.a)).norm());
  return std::ldexp(widest, -static_cast<int>(grid_exp));
}

namespace {

// A rectangle of lattice indices [i0, i1] x [k0, k1] on one piece.
struct Region {
  double upper;  // bound on d over the region's samples
  std::uint32_t piece;
  std::uint32_t i0, i1, k0, k1;

  friend bool operator<(const Region& a, const Region& b) { return a.upper < b.upper; }
};

struct Sampler {
  Vec2<double> origin;
  Vec2<double> step_i;  // displacement per index along the first axis
  Vec2<double> step_k;  // zero for segments

  Vec2<double> at(std::uint32_t i, std::uint32_t k) const {
    return origin + static_cast<double>(i) * step_i + static_cast<double>(k) * step_k;
  }
};

}  // namespace

double directed_hausdorff(const PieceSet& from, const PieceSet& to, unsigned grid_exp) {
  if (from.empty() || to.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  if (grid_exp > kMaxGridExp) throw std::invalid_argument("grid_exp above cap");

  Eigen::AlignedBox2d bounds = bounds_of(from);
  bounds.extend(bounds_of(to));
  const PieceIndex index(to, bounds);

  const std::uint32_t last = std::uint32_t{1} << grid_exp;
  const double scale = std::ldexp(1.0, -static_cast<int>(grid_exp));

  std::vector<Sampler> samplers;
  std::vector<Region> roots;
  for (const auto& b : from.boxes) {
    const Vec2<double> lo = to_vec(b.lo);
    const Vec2<double> hi = to_vec(b.hi);
    samplers.push_back({lo, {(hi.x() - lo.x()) * scale, 0.0}, {0.0, (hi.y() - lo.y()) * scale}});
    roots.push_back({std::numeric_limits<double>::infinity(), static_cast<std::uint32_t>(samplers.size() - 1),
                     0, last, 0, last});
  }
  for (const auto& s : from.segments.segments) {
    const Vec2<double> a = to_vec(s.a);
    samplers.push_back({a, (to_vec(s.b) - a) * scale, Vec2<double>::Zero()});
    roots.push_back({std::numeric_limits<double>::infinity(), static_cast<std::uint32_t>(samplers.size() - 1),
                     0, last, 0, 0});
  }

  // Best-first over regions of the sample lattice. Two bounds on d over a
  // region: d is 1-Lipschitz, giving d(center) + (distance to the farthest
  // corner); and d <= d(., q) for the piece q nearest the center, which is
  // convex and so peaks at a corner. Regions that cannot beat the incumbent
  // are discarded without changing the maximum.
  double best = 0.0;
  std::priority_queue<Region> queue;
  auto evaluate = [&](Region region) {
    const Sampler& s = samplers[region.piece];
    const std::uint32_t ic = region.i0 + (region.i1 - region.i0) / 2;
    const std::uint32_t kc = region.k0 + (region.k1 - region.k0) / 2;
    const auto near = index.nearest(s.at(ic, kc));
    best = std::max(best, near.distance);
    if (region.i0 == region.i1 && region.k0 == region.k1) return;
    const double di = static_cast<double>(std::max(ic - region.i0, region.i1 - ic));
    const double dk = static_cast<double>(std::max(kc - region.k0, region.k1 - kc));
    const double lipschitz = near.distance + (di * s.step_i + dk * s.step_k).norm();
    const double convex = std::max({index.distance_to_item(near.item, s.at(region.i0, region.k0)),
                                    index.distance_to_item(near.item, s.at(region.i1, region.k0)),
                                    index.distance_to_item(near.item, s.at(region.i0, region.k1)),
                                    index.distance_to_item(near.item, s.at(region.i1, region.k1))});
    region.upper = std::min(lipschitz, convex);
    if (region.upper > best) queue.push(region);
  };
  for (const auto& root : roots) evaluate(root);

  while (!queue.empty()) {
    const Region region = queue.top();
    queue.pop();
    if (region.upper <= best) break;
    const std::uint32_t im = region.i0 + (region.i1 - region.i0) / 2;
    const std::uint32_t km = region.k0 + (region.k1 - region.k0) / 2;
    const bool split_i = region.i1 > region.i0;
    const bool split_k = region.k1 > region.k0;
    for (int a = 0; a < (split_i ? 2 : 1); ++a) {
      for (int c = 0; c < (split_k ? 2 : 1); ++c) {
        Region child = region;
        if (split_i) {
          child.i0 = a == 0 ? region.i0 : im + 1;
          child.i1 = a == 0 ? im : region.i1;
        }
        if (split_k) {
          child.k0 = c == 0 ? region.k0 : km + 1;
          child.k1 = c == 0 ? km : region.k1;
        }
        evaluate(child);
      }
    }
  }
  return best;
}

HausdorffEstimate hausdorff(const PieceSet& a, const PieceSet& b, unsigned grid_exp) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  if (grid_exp > kMaxGridExp) throw std::invalid_argument("grid_exp above cap");
  const double estimate = std::max(directed_hausdorff(a, b, grid_exp), directed_hausdorff(b, a, grid_exp));
  const double spacing = std::max(sample_spacing(a, grid_exp), sample_spacing(b, grid_exp));
  return {estimate, std::sqrt(2.0) * spacing};
}

}  // namespace genpascal
