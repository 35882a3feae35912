#include "saddlewalk/bos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saddlewalk {

namespace {
// Closed-set slack: edge points survive the task->saddle round trip.
constexpr double kEdgeEps = 1e-9;
}  // namespace

BosRegion make_bos(const SaddleFrame& frame, double cap) {
  if (!(cap > 0.0)) throw std::invalid_argument("BoS cap must be positive");
  return {frame, std::abs(frame.y_left), std::abs(frame.y_right), cap};
}

BosRegion make_bos(Vec2 cop_left, Vec2 cop_right, double cap) {
  return make_bos(build_frame(cop_left, cop_right), cap);
}

bool bos_contains(Vec2 task_point, const BosRegion& region) {
  const Vec2 p = to_saddle(task_point, region.frame);
  if (std::abs(p.x) > region.cap + kEdgeEps) return false;
  const double r = p.norm();
  if (p.y >= 0.0 && r <= region.radius_left + kEdgeEps) return true;
  return p.y <= 0.0 && r <= region.radius_right + kEdgeEps;
}

std::vector<Vec2> bos_boundary(const BosRegion& region, int n) {
  if (n < 8) throw std::invalid_argument("boundary needs at least 8 points");
  const double rl = region.radius_left;
  const double rr = region.radius_right;
  const double cap = region.cap;

  // Corner abscissae: where each arc meets the strip (or its own equator).
  const double xu = std::min(cap, rl);
  const double xl = std::min(cap, rr);
  const double yu = std::sqrt(std::max(0.0, rl * rl - xu * xu));
  const double yl = std::sqrt(std::max(0.0, rr * rr - xl * xl));
  const double a_up = std::acos(xu / rl);
  const double a_lo = std::acos(xl / rr);

  struct Segment {
    int kind;  // 0 = upper arc, 1 = lower arc, 2 = chord
    double from, to;  // angles for arcs
    Vec2 p0, p1;      // endpoints for chords
    double length;
  };
  std::vector<Segment> segs;
  segs.push_back({0, a_up, kPi - a_up, {}, {}, rl * (kPi - 2.0 * a_up)});
  Segment left_cap{2, 0, 0, {-xu, yu}, {-xl, -yl}, 0};
  left_cap.length = (left_cap.p1 - left_cap.p0).norm();
  segs.push_back(left_cap);
  segs.push_back({1, kPi + a_lo, 2.0 * kPi - a_lo, {}, {}, rr * (kPi - 2.0 * a_lo)});
  Segment right_cap{2, 0, 0, {xl, -yl}, {xu, yu}, 0};
  right_cap.length = (right_cap.p1 - right_cap.p0).norm();
  segs.push_back(right_cap);

  double total = 0.0;
  for (const auto& s : segs) total += s.length;

  std::vector<Vec2> points;
  points.reserve(n);
  const double spacing = total / n;
  std::size_t seg_index = 0;
  double seg_start = 0.0;
  for (int i = 0; i < n; ++i) {
    const double target = i * spacing;
    while (seg_index + 1 < segs.size() &&
           target >= seg_start + segs[seg_index].length) {
      seg_start += segs[seg_index].length;
      ++seg_index;
    }
    const Segment& s = segs[seg_index];
    const double u = s.length > 0.0 ? (target - seg_start) / s.length : 0.0;
    Vec2 q;
    if (s.kind == 2) {
      q = {s.p0.x + (s.p1.x - s.p0.x) * u, s.p0.y + (s.p1.y - s.p0.y) * u};
    } else {
      const double ang = s.from + (s.to - s.from) * u;
      const double r = (s.kind == 0) ? rl : rr;
      q = {r * std::cos(ang), r * std::sin(ang)};
    }
    points.push_back(to_task(q, region.frame));
  }
  return points;
}

Vec2 nearest_border_saddle(Vec2 p, const BosRegion& region) {
  const double cap = region.cap;
  const double rl = region.radius_left;
  const double rr = region.radius_right;
  const double xu = std::min(cap, rl);
  const double xl = std::min(cap, rr);
  const double yu = std::sqrt(std::max(0.0, rl * rl - xu * xu));
  const double yl = std::sqrt(std::max(0.0, rr * rr - xl * xl));

  Vec2 best{xu, yu};
  double best_d = (p - best).norm();
  auto consider = [&](Vec2 q) {
    const double d = (p - q).norm();
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  };

  // Radial projection onto each arc, clamped to the arc's angular span.
  const double r = p.norm();
  if (r > 0.0) {
    const double ang = std::atan2(p.y, p.x);
    const double up = std::clamp(ang, std::acos(xu / rl), kPi - std::acos(xu / rl));
    consider({rl * std::cos(up), rl * std::sin(up)});
    double lo = ang < 0.0 ? ang : ang - 2.0 * kPi;  // wrap into [-pi, 0)
    lo = std::clamp(lo, -kPi + std::acos(xl / rr), -std::acos(xl / rr));
    consider({rr * std::cos(lo), rr * std::sin(lo)});
  } else {
    consider({0.0, rl});
    consider({0.0, -rr});
  }
  // Horizontal projection onto each cap segment (a point when the strip
  // does not clip the arcs).
  consider({+std::min(cap, xu), std::clamp(p.y, -yl, yu)});
  consider({-std::min(cap, xu), std::clamp(p.y, -yl, yu)});
  return best;
}

double boundary_distance_saddle(Vec2 p, const BosRegion& region) {
  const bool in_x = std::abs(p.x) <= region.cap;
  const double r = p.norm();
  const double radius = (p.y >= 0.0) ? region.radius_left : region.radius_right;
  if (in_x && r <= radius) {
    return std::min(radius - r, region.cap - std::abs(p.x));
  }
  return -(p - nearest_border_saddle(p, region)).norm();
}

}  // namespace saddlewalk
