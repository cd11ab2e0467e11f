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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace linearc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a geometric precondition does not hold (point inside a circle,
// concentric circles, off-circle arc endpoints, wrong shape kind).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Raised when no legal path exists for a request.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Points double as 2D vectors.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double angle_of(Point v) { return std::atan2(v.y, v.x); }
inline Point unit(Point v) { return v / norm(v); }
// Counterclockwise quarter turn.
constexpr Point left_normal(Point v) { return {-v.y, v.x}; }
inline Point polar(Point center, double radius, double angle) {
  return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Maps any angle into [0, 2π).
inline double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

struct Segment {
  Point a;
  Point b;
};

// Parameter in [0, 1] of the point on segment ab closest to p.
inline double closest_parameter(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return 0.0;
  const double t = dot(p - a, d) / len2;
  return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
}

inline double point_segment_distance(Point p, Point a, Point b) {
  return distance(p, a + closest_parameter(p, a, b) * (b - a));
}

// True when closed segments ab and cd share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d);

double segment_segment_distance(Point a, Point b, Point c, Point d);

// Circular arc starting at `start_angle` and sweeping `sweep` radians
// (positive = counterclockwise). |sweep| <= 2π.
struct Arc {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;

  Point start() const { return polar(center, radius, start_angle); }
  Point end() const { return polar(center, radius, start_angle + sweep); }
  double length() const { return radius * std::abs(sweep); }
  // True when the ray at `angle` from the center meets the arc.
  bool spans(double angle) const;
};

double point_arc_distance(Point p, const Arc& arc);
double segment_arc_distance(Point a, Point b, const Arc& arc);

}  // namespace linearc
