#include "genpascal/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace genpascal {

namespace {

std::pair<std::int64_t, int> odd_part(const Dyadic& d) {
  std::int64_t n = d.num();
  int twos = -static_cast<int>(d.exp());
  while (n != 0 && n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  return {n, twos};
}

int sign(const Dyadic& d) { return d.num() > 0 ? 1 : (d.num() < 0 ? -1 : 0); }

int orientation(const Point& a, const Point& b, const Point& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool shares_endpoint(const Segment& s, const Segment& t) {
  return s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
}

struct LineKey {
  int slope;
  Dyadic intercept;
  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

LineKey line_of(const Segment& s) {
  const auto j = s.slope_exponent();
  if (!j) throw std::invalid_argument("segment slope is not a power of two");
  return {*j, s.a.y - s.a.x.scaled(*j)};
}

}  // namespace

std::optional<int> Segment::slope_exponent() const {
  const Dyadic dx = b.x - a.x;
  const Dyadic dy = b.y - a.y;
  if (sign(dx) <= 0 || sign(dy) <= 0) return std::nullopt;
  const auto [nx, ex] = odd_part(dx);
  const auto [ny, ey] = odd_part(dy);
  if (nx != ny) return std::nullopt;
  return ey - ex;
}

Dyadic binary_fraction(const Word& w) {
  if (w.size() > Dyadic::kMaxExponent) throw std::overflow_error("word too long for a dyadic coordinate");
  return Dyadic(static_cast<std::int64_t>(val2(w)), static_cast<unsigned>(w.size()));
}

Segment segment_for(const Word& u, const Word& v) {
  if (!u.is_canonical() || !v.is_canonical() || v.empty() || v.size() > u.size()) {
    throw std::invalid_argument("segment_for requires canonical u, v with |u| >= |v| >= 1");
  }
  if (u.size() > Dyadic::kMaxExponent) throw std::overflow_error("word too long for a dyadic coordinate");
  const auto len = static_cast<unsigned>(u.size());
  const Point a{Dyadic(static_cast<std::int64_t>(val2(v)), len), binary_fraction(u)};
  const Dyadic side = Dyadic::inverse_power(len);
  return {a, {a.x + side, a.y + side}};
}

Point apply_c(const Point& p, unsigned times) {
  const int k = -static_cast<int>(times);
  return {p.x.scaled(k), p.y.scaled(k)};
}

Segment apply_c(const Segment& s, unsigned times) { return {apply_c(s.a, times), apply_c(s.b, times)}; }

Box apply_c(const Box& b, unsigned times) { return {apply_c(b.lo, times), apply_c(b.hi, times)}; }

PieceSet apply_c(const PieceSet& s, unsigned times) {
  PieceSet out;
  out.segments.provenance = s.segments.provenance;
  out.boxes.reserve(s.boxes.size());
  for (const auto& b : s.boxes) out.boxes.push_back(apply_c(b, times));
  out.segments.segments.reserve(s.segments.size());
  for (const auto& seg : s.segments.segments) out.segments.segments.push_back(apply_c(seg, times));
  return out;
}

namespace {

const Dyadic kOne = Dyadic::integer(1);

Point double_y(const Point& p, unsigned times) {
  Point out{p.x, p.y.scaled(static_cast<int>(times))};
  if (kOne < out.y) throw std::out_of_range("apply_h leaves the unit square");
  return out;
}

}  // namespace

Segment apply_h(const Segment& s, unsigned times) { return {double_y(s.a, times), double_y(s.b, times)}; }

PieceSet apply_h(const PieceSet& s, unsigned times) {
  PieceSet out;
  out.segments.provenance = s.segments.provenance;
  for (const auto& b : s.boxes) out.boxes.push_back({double_y(b.lo, times), double_y(b.hi, times)});
  for (const auto& seg : s.segments.segments) out.segments.segments.push_back(apply_h(seg, times));
  return out;
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) && min(s.a.y, s.b.y) <= p.y &&
         p.y <= max(s.a.y, s.b.y);
}

Nesting segment_nesting(const Segment& first, const Segment& second) {
  if (on_segment(second.a, first) && on_segment(second.b, first)) return Nesting::contains;
  if (on_segment(first.a, second) && on_segment(first.b, second)) return Nesting::contained;

  const int o1 = orientation(first.a, first.b, second.a);
  const int o2 = orientation(first.a, first.b, second.b);
  const int o3 = orientation(second.a, second.b, first.a);
  const int o4 = orientation(second.a, second.b, first.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear. Compare along x, or along y for vertical lines.
    const bool vertical = first.a.x == first.b.x;
    auto coord = [vertical](const Point& p) { return vertical ? p.y : p.x; };
    const Dyadic lo = max(min(coord(first.a), coord(first.b)), min(coord(second.a), coord(second.b)));
    const Dyadic hi = min(max(coord(first.a), coord(first.b)), max(coord(second.a), coord(second.b)));
    if (hi < lo || hi == lo) return Nesting::disjoint_or_endpoint;
    return Nesting::improper;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return Nesting::disjoint_or_endpoint;
  // Lines meet in exactly one point, which lies on both segments.
  return shares_endpoint(first, second) ? Nesting::disjoint_or_endpoint : Nesting::improper;
}

bool star_segment_contains(const Word& u, const Word& v, const Word& s, const Word& t) {
  if (s.size() < u.size() || t.size() < v.size()) return false;
  if (s.size() - u.size() != t.size() - v.size()) return false;
  return s.str().starts_with(u.str()) && t.str().starts_with(v.str());
}

SegmentSet maximal_segments(const SegmentSet& set) {
  std::map<LineKey, std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < set.segments.size(); ++i) lines[line_of(set.segments[i])].push_back(i);

  std::vector<bool> keep(set.segments.size(), false);
  for (auto& [key, members] : lines) {
    std::stable_sort(members.begin(), members.end(), [&](std::size_t l, std::size_t r) {
      const Segment& a = set.segments[l];
      const Segment& b = set.segments[r];
      if (a.a.x != b.a.x) return a.a.x < b.a.x;
      return b.b.x < a.b.x;
    });
    std::optional<Dyadic> reach;
    for (std::size_t idx : members) {
      const Dyadic& end = set.segments[idx].b.x;
      if (reach && end <= *reach) continue;
      keep[idx] = true;
      reach = end;
    }
  }

  SegmentSet out;
  out.provenance = set.provenance;
  out.maximal = true;
  for (std::size_t i = 0; i < set.segments.size(); ++i) {
    if (keep[i]) out.segments.push_back(set.segments[i]);
  }
  return out;
}

std::vector<Segment> union_normal_form(const std::vector<Segment>& segments) {
  std::map<LineKey, std::vector<Segment>> lines;
  std::vector<Point> points;
  for (const auto& s : segments) {
    if (s.degenerate()) {
      points.push_back(s.a);
    } else {
      lines[line_of(s)].push_back(s);
    }
  }

  std::vector<Segment> merged;
  for (auto& [key, members] : lines) {
    std::sort(members.begin(), members.end());
    Segment current = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (members[i].a.x <= current.b.x) {
        if (current.b.x < members[i].b.x) current.b = members[i].b;
      } else {
        merged.push_back(current);
        current = members[i];
      }
    }
    merged.push_back(current);
  }

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Segment> isolated;
  for (const auto& p : points) {
    const bool covered =
        std::any_of(merged.begin(), merged.end(), [&](const Segment& s) { return on_segment(p, s); });
    if (!covered) isolated.push_back({p, p});
  }
  merged.insert(merged.end(), isolated.begin(), isolated.end());
  std::sort(merged.begin(), merged.end());
  return merged;
}

std::optional<Segment> clip(const Segment& s, const Box& window) {
  if (s.degenerate()) {
    const Point& p = s.a;
    if (window.lo.x <= p.x && p.x <= window.hi.x && window.lo.y <= p.y && p.y <= window.hi.y) return s;
    return std::nullopt;
  }
  const auto j = s.slope_exponent();
  if (!j) throw std::invalid_argument("clip: segment slope is not a power of two");
  auto x_at = [&](const Dyadic& y) { return s.a.x + (y - s.a.y).scaled(-*j); };
  auto y_at = [&](const Dyadic& x) { return s.a.y + (x - s.a.x).scaled(*j); };
  const Dyadic lo = max(max(s.a.x, window.lo.x), x_at(window.lo.y));
  const Dyadic hi = min(min(s.b.x, window.hi.x), x_at(window.hi.y));
  if (hi < lo) return std::nullopt;
  return Segment{{lo, y_at(lo)}, {hi, y_at(hi)}};
}

std::optional<Box> clip(const Box& b, const Box& window) {
  Box out{{max(b.lo.x, window.lo.x), max(b.lo.y, window.lo.y)},
          {min(b.hi.x, window.hi.x), min(b.hi.y, window.hi.y)}};
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace genpascal
