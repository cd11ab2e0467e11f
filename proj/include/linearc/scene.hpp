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

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "linearc/geometry.hpp"

namespace linearc {

/// Axis-aligned rectangle given by its lower-left corner. Squares use
/// width == height.
struct AxisRect {
  Point anchor;
  double width = 0.0;
  double height = 0.0;
};

struct CircleShape {
  Point center;
  double radius = 0.0;
};

/// Triangle described as in a drawing legend: left corner, top vertex and
/// lower-right vertex.
struct Triangle {
  Point left;
  Point top;
  Point lower_right;
};

/// Parallelogram with a horizontal base: lower-left corner, base length and
/// the top-left vertex. The top edge is parallel to the base.
struct Parallelogram {
  Point anchor;
  double base = 0.0;
  Point top_left;
};

using Shape = std::variant<AxisRect, CircleShape, Triangle, Parallelogram>;

struct ObstacleSpec {
  int id = 0;
  Shape shape;
};

std::string_view shape_kind(const Shape& shape);

/// Vertices of a polygonal obstacle in counterclockwise order.
/// Throws GeometryError for circles.
std::vector<Point> obstacle_vertices(const ObstacleSpec& spec);

/// Closed convex obstacle body used for distance queries.
class Body {
 public:
  explicit Body(const ObstacleSpec& spec);

  int id() const { return id_; }
  bool is_disc() const { return is_disc_; }
  std::span<const Point> vertices() const { return vertices_; }
  Point disc_center() const { return center_; }
  double disc_radius() const { return radius_; }

  bool contains(Point p) const;
  double distance_to(Point p) const;
  double distance_to(Point a, Point b) const;
  double distance_to(const Arc& arc) const;

 private:
  int id_ = 0;
  bool is_disc_ = false;
  std::vector<Point> vertices_;
  Point center_;
  double radius_ = 0.0;
};

/// Planar workspace: rectangular bounds anchored at the origin, convex
/// obstacles and the clearance every path must keep from them.
/// Immutable after construction.
class Scene {
 public:
  Scene(double width, double height, std::vector<ObstacleSpec> obstacles, double clearance = 10.0);

  double width() const { return width_; }
  double height() const { return height_; }
  double clearance() const { return clearance_; }
  std::span<const ObstacleSpec> obstacles() const { return specs_; }
  std::span<const Body> bodies() const { return bodies_; }
  const ObstacleSpec& obstacle(int id) const;

  bool in_bounds(Point p, double tolerance = 1e-9) const;
  bool in_bounds(const Arc& arc, double tolerance = 1e-9) const;

 private:
  double width_;
  double height_;
  double clearance_;
  std::vector<ObstacleSpec> specs_;
  std::vector<Body> bodies_;
};

/// The twelve-obstacle 800x800 workspace with clearance 10.
Scene builtin_scene();

/// Boundary of the region within `clearance` of one obstacle.
struct CornerArc {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;  // counterclockwise from start_angle
};

struct EnvelopeRegion {
  int source = 0;
  bool is_circle = false;
  // Polygon envelopes.
  std::vector<Segment> offset_edges;
  std::vector<CornerArc> corner_arcs;
  // Circle envelopes.
  Point center;
  double radius = 0.0;

  // Enclosed area; polygons use A + P*c + pi*c^2.
  double area() const;
};

std::vector<EnvelopeRegion> inflate_scene(const Scene& scene);

/// Distance from p to the nearest obstacle (0 inside one). Returns +inf for
/// an empty scene.
double min_clearance(Point p, const Scene& scene);

inline constexpr double kClearanceEpsilon = 1e-9;

/// True iff every point of pq keeps at least the scene clearance (minus
/// `epsilon`) from every obstacle.
bool segment_clear(Point p, Point q, const Scene& scene, double epsilon = kClearanceEpsilon);
bool arc_clear(const Arc& arc, const Scene& scene, double epsilon = kClearanceEpsilon);

/// Smallest obstacle distance along the segment / arc, and the obstacle id
/// where it occurs (0 when the scene is empty).
struct ClearanceHit {
  double distance = 0.0;
  int obstacle = 0;
};
ClearanceHit segment_clearance(Point p, Point q, const Scene& scene);
ClearanceHit arc_clearance(const Arc& arc, const Scene& scene);

}  // namespace linearc
