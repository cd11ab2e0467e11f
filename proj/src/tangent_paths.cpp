// Copyright 2026 The Linearc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linearc/tangent_paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace linearc {
namespace {

// Sweeps closer than this to 0 (or 2π) are treated as "no arc".
constexpr double kSweepEpsilon = 1e-12;
constexpr double kLengthEpsilon = 1e-12;

std::string fmt_point(Point p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

Point arc_direction(const TurningCircle& c, double angle) {
  const Point r{std::cos(angle), std::sin(angle)};
  return c.turn == Turn::kCCW ? left_normal(r) : -left_normal(r);
}

}  // namespace

const char* to_string(Turn t) { return t == Turn::kCW ? "cw" : "ccw"; }

double ArcSegment::sweep() const {
  return circle.turn == Turn::kCCW ? wrap_two_pi(end_angle - start_angle) : wrap_two_pi(start_angle - end_angle);
}

Arc ArcSegment::geometry() const {
  return Arc{circle.center, circle.radius, start_angle, turn_sign(circle.turn) * sweep()};
}

Point start_point(const PathSegment& s) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return line->from;
  const auto& arc = std::get<ArcSegment>(s);
  return polar(arc.circle.center, arc.circle.radius, arc.start_angle);
}

Point end_point(const PathSegment& s) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return line->to;
  const auto& arc = std::get<ArcSegment>(s);
  return polar(arc.circle.center, arc.circle.radius, arc.end_angle);
}

Point start_direction(const PathSegment& s) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return unit(line->to - line->from);
  const auto& arc = std::get<ArcSegment>(s);
  return arc_direction(arc.circle, arc.start_angle);
}

Point end_direction(const PathSegment& s) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return unit(line->to - line->from);
  const auto& arc = std::get<ArcSegment>(s);
  return arc_direction(arc.circle, arc.end_angle);
}

double segment_length(const PathSegment& s) {
  if (const auto* line = std::get_if<LineSegment>(&s)) return distance(line->from, line->to);
  const auto& arc = std::get<ArcSegment>(s);
  return arc.circle.radius * arc.sweep();
}

bool is_arc(const PathSegment& s) { return std::holds_alternative<ArcSegment>(s); }

double path_length(const SmoothPath& path) {
  double total = 0.0;
  for (const auto& s : path.segments) total += segment_length(s);
  return total;
}

SmoothPath reversed(const SmoothPath& path) {
  SmoothPath out;
  out.segments.reserve(path.segments.size());
  for (auto it = path.segments.rbegin(); it != path.segments.rend(); ++it) {
    if (const auto* line = std::get_if<LineSegment>(&*it)) {
      out.segments.emplace_back(LineSegment{line->to, line->from});
    } else {
      const auto& arc = std::get<ArcSegment>(*it);
      TurningCircle c = arc.circle;
      c.turn = flip(c.turn);
      out.segments.emplace_back(ArcSegment{c, arc.end_angle, arc.start_angle});
    }
  }
  return out;
}

std::vector<Point> sample_path(const SmoothPath& path, double spacing) {
  std::vector<Point> pts;
  for (const auto& s : path.segments) {
    const double len = segment_length(s);
    const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int i = 0; i <= n; ++i) {
      const double t = static_cast<double>(i) / n;
      if (const auto* line = std::get_if<LineSegment>(&s)) {
        pts.push_back(line->from + t * (line->to - line->from));
      } else {
        const auto& arc = std::get<ArcSegment>(s);
        const double a = arc.start_angle + turn_sign(arc.circle.turn) * arc.sweep() * t;
        pts.push_back(polar(arc.circle.center, arc.circle.radius, a));
      }
    }
  }
  return pts;
}

double tangent_length(Point p, Point center, double radius) {
  const Point d = p - center;
  return std::sqrt(std::max(0.0, dot(d, d) - radius * radius));
}

std::array<Point, 2> tangents_from_point(Point p, Point center, double radius) {
  const double d = distance(p, center);
  if (!(d > radius)) {
    throw GeometryError("point " + fmt_point(p) + " is not outside the circle at " + fmt_point(center));
  }
  const double base = angle_of(p - center);
  const double alpha = std::acos(radius / d);
  return {polar(center, radius, base + alpha), polar(center, radius, base - alpha)};
}

// Travel direction u along the tangent. The contact point on a circle with
// turn sign s is c - s*r*n, n = left(u), so the line condition is
// (c2 - c1) . n = s2*r2 - s1*r1.
std::optional<LineSegment> directed_tangent(const TurningCircle& from, const TurningCircle& to) {
  const Point delta = to.center - from.center;
  const double d = norm(delta);
  if (d == 0.0) return std::nullopt;
  const double k = turn_sign(to.turn) * to.radius - turn_sign(from.turn) * from.radius;
  if (std::abs(k) > d * (1.0 + 1e-12)) return std::nullopt;
  const double a = std::clamp(k / d, -1.0, 1.0);
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  const Point e = delta / d;
  const Point n = a * e + b * left_normal(e);
  return LineSegment{from.center - turn_sign(from.turn) * from.radius * n,
                     to.center - turn_sign(to.turn) * to.radius * n};
}

std::vector<CommonTangent> common_tangents(Point c1, double r1, Point c2, double r2) {
  if (distance(c1, c2) == 0.0) {
    throw GeometryError("concentric circles at " + fmt_point(c1) + " have no common tangent");
  }
  std::vector<CommonTangent> out;
  for (Turn t1 : {Turn::kCCW, Turn::kCW}) {
    for (Turn t2 : {Turn::kCCW, Turn::kCW}) {
      if (auto line = directed_tangent({c1, r1, t1}, {c2, r2, t2})) out.push_back({*line, t1, t2});
    }
  }
  return out;
}

ArcSegment arc_between(const TurningCircle& circle, Point p1, Point p2) {
  for (Point p : {p1, p2}) {
    if (std::abs(distance(p, circle.center) - circle.radius) > 1e-6) {
      throw GeometryError("point " + fmt_point(p) + " is not on the circle at " + fmt_point(circle.center));
    }
  }
  return ArcSegment{circle, angle_of(p1 - circle.center), angle_of(p2 - circle.center)};
}

double chord_arc_length(double chord, double radius) {
  return 2.0 * radius * std::asin(std::clamp(chord / (2.0 * radius), -1.0, 1.0));
}

namespace {

CornerSolution wrap_corner(const CornerProblem& p, Turn turn) {
  const double s = turn_sign(turn);
  const double ds = distance(p.start, p.center);
  const double de = distance(p.end, p.center);
  const double entry_angle = angle_of(p.start - p.center) + s * std::acos(p.radius / ds);
  const double exit_angle = angle_of(p.end - p.center) - s * std::acos(p.radius / de);

  CornerSolution sol;
  sol.turn = turn;
  sol.entry = polar(p.center, p.radius, entry_angle);
  sol.exit = polar(p.center, p.radius, exit_angle);
  const ArcSegment arc{{p.center, p.radius, turn}, entry_angle, exit_angle};
  double sweep = arc.sweep();
  if (sweep > kTwoPi - kSweepEpsilon) sweep = 0.0;
  sol.half_angle = 0.5 * sweep;
  sol.path.segments.emplace_back(LineSegment{p.start, sol.entry});
  if (sweep > kSweepEpsilon) sol.path.segments.emplace_back(arc);
  sol.path.segments.emplace_back(LineSegment{sol.exit, p.end});
  sol.total_length = tangent_length(p.start, p.center, p.radius) + p.radius * sweep +
                     tangent_length(p.end, p.center, p.radius);
  return sol;
}

CornerSolution straight_corner(const CornerProblem& p) {
  CornerSolution sol;
  sol.degenerate = true;
  sol.entry = p.start;
  sol.exit = p.end;
  if (distance(p.start, p.end) > kLengthEpsilon) sol.path.segments.emplace_back(LineSegment{p.start, p.end});
  sol.total_length = distance(p.start, p.end);
  return sol;
}

}  // namespace

CornerSolution solve_corner(const CornerProblem& p) {
  if (!(distance(p.start, p.center) > p.radius) || !(distance(p.end, p.center) > p.radius)) {
    throw InfeasibleError("corner endpoints must lie strictly outside the turning circle at " +
                          fmt_point(p.center));
  }
  if (p.turn) return wrap_corner(p, *p.turn);

  const bool blocked = point_segment_distance(p.center, p.start, p.end) < p.radius;
  if (blocked) {
    CornerSolution ccw = wrap_corner(p, Turn::kCCW);
    CornerSolution cw = wrap_corner(p, Turn::kCW);
    if (std::abs(ccw.total_length - cw.total_length) <= 1e-12 * std::max(1.0, ccw.total_length)) {
      return cw.half_angle < ccw.half_angle ? cw : ccw;
    }
    return cw.total_length < ccw.total_length ? cw : ccw;
  }
  const Point chord = p.end - p.start;
  const double len2 = dot(chord, chord);
  if (len2 == 0.0) return straight_corner(p);
  const double t = dot(p.center - p.start, chord) / len2;
  if (t <= 0.0 || t >= 1.0) return straight_corner(p);
  // The corner pushes the chord away: a center on the left forces a right turn.
  return wrap_corner(p, cross(chord, p.center - p.start) > 0.0 ? Turn::kCW : Turn::kCCW);
}

namespace {

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

// Offsets psi1, psi2 >= 0 measure how far each contact point has advanced
// from the point of the circle nearest the corresponding endpoint. A line
// that cuts into the disc is charged an exact penalty, so the optimum sits on
// the tangency boundary.
double descend_corner(const CornerProblem& p, Turn turn) {
  const double s = turn_sign(turn);
  const double theta_s = angle_of(p.start - p.center);
  const double theta_e = angle_of(p.end - p.center);
  const double base = wrap_two_pi(s * (theta_e - theta_s));
  constexpr double kPenalty = 1e4;

  auto contact = [&](double theta, double psi, double dir) { return polar(p.center, p.radius, theta + dir * psi); };
  auto leg = [&](Point endpoint, Point q) {
    const double inside = p.radius - point_segment_distance(p.center, endpoint, q);
    return distance(endpoint, q) + (inside > 1e-13 ? kPenalty * inside : 0.0);
  };
  auto objective = [&](double psi1, double psi2) {
    const Point q1 = contact(theta_s, psi1, s);
    const Point q2 = contact(theta_e, psi2, -s);
    return leg(p.start, q1) + p.radius * wrap_two_pi(base - psi1 - psi2) + leg(p.end, q2);
  };

  double psi1 = 0.0, psi2 = 0.0;
  double value = objective(psi1, psi2);
  for (int iter = 0; iter < 50; ++iter) {
    psi1 = golden_section([&](double x) { return objective(x, psi2); }, 0.0, kPi / 2.0, 1e-13);
    psi2 = golden_section([&](double x) { return objective(psi1, x); }, 0.0, kPi / 2.0, 1e-13);
    const double next = objective(psi1, psi2);
    const bool done = std::abs(value - next) < 1e-13;
    value = next;
    if (done) break;
  }
  return value;
}

SmoothPath chain_path(Point start, std::span<const TurningCircle> circles, Point end) {
  std::vector<TurningCircle> anchors;
  anchors.reserve(circles.size() + 2);
  anchors.push_back({start, 0.0, Turn::kCCW});
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (!(circles[i].radius > 0.0)) {
      throw ChainError(i + 1, "turning circle " + std::to_string(i + 1) + " has non-positive radius");
    }
    anchors.push_back(circles[i]);
  }
  anchors.push_back({end, 0.0, Turn::kCCW});

  SmoothPath path;
  Point arrival = start;
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    const auto tangent = directed_tangent(anchors[i], anchors[i + 1]);
    if (!tangent) {
      throw ChainError(i, "no " + std::string(to_string(anchors[i].turn)) + "->" + to_string(anchors[i + 1].turn) +
                              " tangent between anchor " + std::to_string(i) + " at " +
                              fmt_point(anchors[i].center) + " and anchor " + std::to_string(i + 1) + " at " +
                              fmt_point(anchors[i + 1].center));
    }
    if (i > 0) {
      const ArcSegment arc = arc_between(anchors[i], arrival, tangent->from);
      const double sweep = arc.sweep();
      if (sweep > kSweepEpsilon && sweep < kTwoPi - kSweepEpsilon) path.segments.emplace_back(arc);
    }
    if (distance(tangent->from, tangent->to) > kLengthEpsilon) path.segments.emplace_back(*tangent);
    arrival = tangent->to;
  }
  return path;
}

double SpeedLaw::max_turn_speed(double rho) const { return v0 / (1.0 + std::exp(10.0 - rho * rho / 10.0)); }

double SpeedLaw::travel_time(const SmoothPath& path) const {
  double t = 0.0;
  for (const auto& s : path.segments) {
    if (const auto* arc = std::get_if<ArcSegment>(&s)) {
      t += segment_length(s) / max_turn_speed(arc->circle.radius);
    } else {
      t += segment_length(s) / v0;
    }
  }
  return t;
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kDiscontinuity: return "discontinuity";
    case ViolationKind::kTangency: return "tangency";
    case ViolationKind::kClearance: return "clearance";
    case ViolationKind::kRadius: return "radius";
    case ViolationKind::kBounds: return "bounds";
    case ViolationKind::kDegenerate: return "degenerate";
  }
  return "unknown";
}

std::vector<Violation> validate_path(const SmoothPath& path, const Scene& scene, const PathTolerances& tol) {
  std::vector<Violation> out;
  const double limit = scene.clearance() - tol.clearance;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const PathSegment& seg = path.segments[i];
    ClearanceHit hit;
    bool inside = true;
    if (const auto* line = std::get_if<LineSegment>(&seg)) {
      if (!(distance(line->from, line->to) > 0.0)) {
        out.push_back({ViolationKind::kDegenerate, i, 0.0, 0, "line segment has zero length"});
      }
      hit = segment_clearance(line->from, line->to, scene);
      inside = scene.in_bounds(line->from) && scene.in_bounds(line->to);
    } else {
      const auto& arc = std::get<ArcSegment>(seg);
      if (arc.circle.radius < kMinTurnRadius) {
        out.push_back({ViolationKind::kRadius, i, arc.circle.radius, 0,
                       "arc radius below the minimum turning radius"});
      }
      const double sweep = arc.sweep();
      if (!(sweep > 0.0 && sweep < kTwoPi)) {
        out.push_back({ViolationKind::kDegenerate, i, sweep, 0, "arc sweep outside (0, 2pi)"});
      }
      hit = arc_clearance(arc.geometry(), scene);
      inside = scene.in_bounds(arc.geometry());
    }
    if (hit.distance < limit) {
      out.push_back({ViolationKind::kClearance, i, hit.distance, hit.obstacle, "segment too close to obstacle"});
    } else {
      // Sampled cross-check of the exact distance.
      SmoothPath single{{seg}};
      for (Point q : sample_path(single, tol.sample_spacing)) {
        const double d = min_clearance(q, scene);
        if (d < limit) {
          out.push_back({ViolationKind::kClearance, i, d, 0, "sample point too close to an obstacle"});
          break;
        }
      }
    }
    if (!inside) out.push_back({ViolationKind::kBounds, i, 0.0, 0, "segment leaves the scene bounds"});

    if (i + 1 < path.segments.size()) {
      const PathSegment& next = path.segments[i + 1];
      const double gap = distance(end_point(seg), start_point(next));
      if (gap > tol.gap) {
        out.push_back({ViolationKind::kDiscontinuity, i, gap, 0, "segments do not share an endpoint"});
      }
      const double d = dot(end_direction(seg), start_direction(next));
      if (d < 1.0 - tol.tangency) {
        out.push_back({ViolationKind::kTangency, i, d, 0, "junction is not tangent-continuous"});
      }
    }
  }
  return out;
}

}  // namespace linearc
