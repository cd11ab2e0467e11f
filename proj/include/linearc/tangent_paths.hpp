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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "linearc/geometry.hpp"
#include "linearc/scene.hpp"

namespace linearc {

inline constexpr double kMinTurnRadius = 10.0;

enum class Turn { kCW, kCCW };

inline Turn flip(Turn t) { return t == Turn::kCW ? Turn::kCCW : Turn::kCW; }
inline double turn_sign(Turn t) { return t == Turn::kCCW ? 1.0 : -1.0; }
const char* to_string(Turn t);

struct TurningCircle {
  Point center;
  double radius = kMinTurnRadius;
  Turn turn = Turn::kCCW;
};

struct LineSegment {
  Point from;
  Point to;
};

/// Arc travelled from start_angle to end_angle in the circle's turn direction.
struct ArcSegment {
  TurningCircle circle;
  double start_angle = 0.0;
  double end_angle = 0.0;

  /// Swept angle in [0, 2π) measured in the travel direction.
  double sweep() const;
  Arc geometry() const;
};

using PathSegment = std::variant<LineSegment, ArcSegment>;

Point start_point(const PathSegment& s);
Point end_point(const PathSegment& s);
/// Unit travel direction at the start / end of a segment.
Point start_direction(const PathSegment& s);
Point end_direction(const PathSegment& s);
double segment_length(const PathSegment& s);
bool is_arc(const PathSegment& s);

struct SmoothPath {
  std::vector<PathSegment> segments;

  bool empty() const { return segments.empty(); }
};

double path_length(const SmoothPath& path);
/// Path traversed backwards with every turn direction flipped.
SmoothPath reversed(const SmoothPath& path);
/// Points spaced at most `spacing` apart along the path, including both ends.
std::vector<Point> sample_path(const SmoothPath& path, double spacing);

/// Tangent length sqrt(|p - c|^2 - r^2).
double tangent_length(Point p, Point center, double radius);

/// The two points q on the circle where pq is tangent. Throws GeometryError
/// when p is inside or on the circle.
std::array<Point, 2> tangents_from_point(Point p, Point center, double radius);

/// Directed tangent line from one turning circle to the next: leaves `from`
/// in its turn direction and arrives on `to` in its turn direction. A radius
/// of zero turns either end into a plain point. Empty when no such tangent
/// exists (overlapping circles with opposite turns).
std::optional<LineSegment> directed_tangent(const TurningCircle& from, const TurningCircle& to);

struct CommonTangent {
  LineSegment line;
  Turn first = Turn::kCCW;
  Turn second = Turn::kCCW;
  bool inner() const { return first != second; }
};

/// Up to four tangents shared by two circles, each tagged with the turn
/// directions it connects (outer tangents keep the direction, inner ones
/// reverse it). Throws GeometryError for concentric circles.
std::vector<CommonTangent> common_tangents(Point c1, double r1, Point c2, double r2);

/// Arc from p1 to p2 around `circle` in the given direction. Throws
/// GeometryError when either point is off the circle by more than 1e-6.
ArcSegment arc_between(const TurningCircle& circle, Point p1, Point p2);

/// Arc length from the chord, 2r*asin(chord / 2r). Valid for sweeps <= π.
double chord_arc_length(double chord, double radius);

/// Single-corner tangent problem: shortest line-arc-line path from start to
/// end wrapping one turning circle.
struct CornerProblem {
  Point start;
  Point end;
  Point center;
  double radius = kMinTurnRadius;
  /// Forces the wrap direction; chosen automatically when empty.
  std::optional<Turn> turn;
};

struct CornerSolution {
  Point entry;  ///< tangent point of the incoming line
  Point exit;   ///< tangent point of the outgoing line
  double half_angle = 0.0;
  Turn turn = Turn::kCCW;
  bool degenerate = false;  ///< straight start->end, no arc
  SmoothPath path;
  double total_length = 0.0;
};

/// Closed-form corner solution. When no direction is forced: if the circle
/// blocks the straight segment, the shorter of the two wraps wins (ties go to
/// the smaller sweep); otherwise the path wraps the circle on its far side
/// from the chord, unless the center projects outside the chord, in which
/// case the straight segment is returned as a degenerate solution.
/// Throws InfeasibleError when start or end is not strictly outside the circle.
CornerSolution solve_corner(const CornerProblem& problem);

/// Line-arc-line length for a fixed direction from tangent-point angles found
/// by cyclic golden-section descent. Independent cross-check of solve_corner.
double descend_corner(const CornerProblem& problem, Turn turn);

class ChainError : public GeometryError {
 public:
  ChainError(std::size_t first, std::string what) : GeometryError(std::move(what)), first_(first) {}
  /// Index of the first anchor of the failing pair (0 = start point).
  std::size_t first_index() const { return first_; }

 private:
  std::size_t first_;
};

/// Tangent-continuous path start -> circles... -> end.
SmoothPath chain_path(Point start, std::span<const TurningCircle> circles, Point end);

/// Maximum safe speed on an arc of radius rho: v0 / (1 + exp(10 - rho^2/10)).
struct SpeedLaw {
  double v0 = 5.0;

  double max_turn_speed(double rho) const;
  double travel_time(const SmoothPath& path) const;
};

enum class ViolationKind { kDiscontinuity, kTangency, kClearance, kRadius, kBounds, kDegenerate };
const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t segment = 0;
  double value = 0.0;
  int obstacle = 0;
  std::string message;
};

struct PathTolerances {
  double clearance = 1e-6;
  double tangency = 1e-9;
  double gap = 1e-6;
  double sample_spacing = 0.5;
};

/// Empty result means the path is legal in the scene.
std::vector<Violation> validate_path(const SmoothPath& path, const Scene& scene,
                                     const PathTolerances& tol = {});

}  // namespace linearc
