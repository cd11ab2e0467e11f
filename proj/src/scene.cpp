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

#include "linearc/scene.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace linearc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double signed_area(std::span<const Point> poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return 0.5 * twice;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GeometryError(what);
}

}  // namespace

std::string_view shape_kind(const Shape& shape) {
  return std::visit(Overloaded{[](const AxisRect&) { return std::string_view("rect"); },
                               [](const CircleShape&) { return std::string_view("circle"); },
                               [](const Triangle&) { return std::string_view("triangle"); },
                               [](const Parallelogram&) { return std::string_view("parallelogram"); }},
                    shape);
}

std::vector<Point> obstacle_vertices(const ObstacleSpec& spec) {
  auto vertices = std::visit(
      Overloaded{
          [](const AxisRect& r) -> std::vector<Point> {
            const Point a = r.anchor;
            return {a, {a.x + r.width, a.y}, {a.x + r.width, a.y + r.height}, {a.x, a.y + r.height}};
          },
          [&](const CircleShape&) -> std::vector<Point> {
            throw GeometryError("obstacle " + std::to_string(spec.id) + " is a circle and has no vertices");
          },
          [](const Triangle& t) -> std::vector<Point> { return {t.left, t.lower_right, t.top}; },
          [](const Parallelogram& p) -> std::vector<Point> {
            const Point shift{p.base, 0.0};
            return {p.anchor, p.anchor + shift, p.top_left + shift, p.top_left};
          }},
      spec.shape);
  if (signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  return vertices;
}

Body::Body(const ObstacleSpec& spec) : id_(spec.id) {
  if (const auto* c = std::get_if<CircleShape>(&spec.shape)) {
    require(c->radius > 0.0, "obstacle " + std::to_string(spec.id) + ": radius must be positive");
    is_disc_ = true;
    center_ = c->center;
    radius_ = c->radius;
    return;
  }
  vertices_ = obstacle_vertices(spec);
  require(signed_area(vertices_) > 0.0, "obstacle " + std::to_string(spec.id) + ": degenerate polygon");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point a = vertices_[i];
    const Point b = vertices_[(i + 1) % vertices_.size()];
    const Point c = vertices_[(i + 2) % vertices_.size()];
    require(cross(b - a, c - b) > 0.0, "obstacle " + std::to_string(spec.id) + ": polygon is not convex");
  }
}

bool Body::contains(Point p) const {
  if (is_disc_) return distance(p, center_) <= radius_;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point a = vertices_[i];
    const Point b = vertices_[(i + 1) % vertices_.size()];
    if (cross(b - a, p - a) < 0.0) return false;
  }
  return true;
}

double Body::distance_to(Point p) const {
  if (is_disc_) return std::max(0.0, distance(p, center_) - radius_);
  if (contains(p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  }
  return best;
}

double Body::distance_to(Point a, Point b) const {
  if (is_disc_) return std::max(0.0, point_segment_distance(center_, a, b) - radius_);
  if (contains(a)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, segment_segment_distance(a, b, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  }
  return best;
}

double Body::distance_to(const Arc& arc) const {
  if (is_disc_) return std::max(0.0, point_arc_distance(center_, arc) - radius_);
  if (contains(arc.start())) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, segment_arc_distance(vertices_[i], vertices_[(i + 1) % vertices_.size()], arc));
  }
  return best;
}

Scene::Scene(double width, double height, std::vector<ObstacleSpec> obstacles, double clearance)
    : width_(width), height_(height), clearance_(clearance), specs_(std::move(obstacles)) {
  require(width_ > 0.0 && height_ > 0.0, "scene bounds must be positive");
  require(clearance_ > 0.0, "clearance must be positive");
  bodies_.reserve(specs_.size());
  for (const auto& spec : specs_) {
    for (const auto& other : bodies_) {
      require(other.id() != spec.id, "duplicate obstacle id " + std::to_string(spec.id));
    }
    Body body(spec);
    if (body.is_disc()) {
      const Point c = body.disc_center();
      const double r = body.disc_radius();
      require(in_bounds(Point{c.x - r, c.y - r}) && in_bounds(Point{c.x + r, c.y + r}),
              "obstacle " + std::to_string(spec.id) + " leaves the scene bounds");
    } else {
      for (Point v : body.vertices()) {
        require(in_bounds(v), "obstacle " + std::to_string(spec.id) + " leaves the scene bounds");
      }
    }
    bodies_.push_back(std::move(body));
  }
}

const ObstacleSpec& Scene::obstacle(int id) const {
  for (const auto& spec : specs_) {
    if (spec.id == id) return spec;
  }
  throw Error("no obstacle with id " + std::to_string(id));
}

bool Scene::in_bounds(Point p, double tolerance) const {
  return p.x >= -tolerance && p.y >= -tolerance && p.x <= width_ + tolerance && p.y <= height_ + tolerance;
}

bool Scene::in_bounds(const Arc& arc, double tolerance) const {
  if (!in_bounds(arc.start(), tolerance) || !in_bounds(arc.end(), tolerance)) return false;
  for (int k = 0; k < 4; ++k) {
    const double angle = k * kPi / 2.0;
    if (arc.spans(angle) && !in_bounds(polar(arc.center, arc.radius, angle), tolerance)) return false;
  }
  return true;
}

// Reference workspace: twelve legend obstacles in an 800x800 field.
Scene builtin_scene() {
  std::vector<ObstacleSpec> obstacles{
      {1, AxisRect{{300, 400}, 200, 200}},
      {2, CircleShape{{550, 450}, 70}},
      {3, Parallelogram{{360, 240}, 140, {400, 330}}},
      {4, Triangle{{280, 100}, {345, 210}, {410, 100}}},
      {5, AxisRect{{80, 60}, 150, 150}},
      {6, Triangle{{60, 300}, {150, 435}, {235, 300}}},
      {7, AxisRect{{0, 470}, 220, 60}},
      {8, Parallelogram{{150, 600}, 90, {180, 680}}},
      {9, AxisRect{{370, 680}, 60, 120}},
      {10, AxisRect{{540, 600}, 130, 130}},
      {11, AxisRect{{640, 520}, 80, 80}},
      {12, AxisRect{{500, 140}, 300, 60}},
  };
  return Scene(800.0, 800.0, std::move(obstacles), 10.0);
}

double EnvelopeRegion::area() const {
  if (is_circle) return kPi * radius * radius;
  // Shoelace over the boundary: offset edges plus the chord of each arc, then
  // add back the circular segments cut off by the chords.
  double twice = 0.0;
  double segments = 0.0;
  for (std::size_t i = 0; i < offset_edges.size(); ++i) {
    const Segment& e = offset_edges[i];
    const CornerArc& next = corner_arcs[(i + 1) % corner_arcs.size()];
    const Point arc_end = polar(next.center, next.radius, next.end_angle);
    twice += cross(e.a, e.b) + cross(e.b, arc_end);
    const double sweep = next.end_angle - next.start_angle;
    segments += 0.5 * next.radius * next.radius * (sweep - std::sin(sweep));
  }
  return 0.5 * twice + segments;
}

std::vector<EnvelopeRegion> inflate_scene(const Scene& scene) {
  const double c = scene.clearance();
  std::vector<EnvelopeRegion> regions;
  regions.reserve(scene.bodies().size());
  for (const Body& body : scene.bodies()) {
    EnvelopeRegion region;
    region.source = body.id();
    if (body.is_disc()) {
      region.is_circle = true;
      region.center = body.disc_center();
      region.radius = body.disc_radius() + c;
      regions.push_back(std::move(region));
      continue;
    }
    const auto v = body.vertices();
    const std::size_t n = v.size();
    std::vector<Point> normals(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point d = unit(v[(i + 1) % n] - v[i]);
      normals[i] = {d.y, -d.x};  // outward for counterclockwise vertices
    }
    // Arc i sits at vertex i and runs from the normal of the incoming edge to
    // the normal of the outgoing edge; edge i follows arc i.
    for (std::size_t i = 0; i < n; ++i) {
      const Point in = normals[(i + n - 1) % n];
      const Point out = normals[i];
      const double start = angle_of(in);
      const double sweep = wrap_two_pi(angle_of(out) - start);
      region.corner_arcs.push_back({v[i], c, start, start + sweep});
    }
    for (std::size_t i = 0; i < n; ++i) {
      region.offset_edges.push_back({v[i] + c * normals[i], v[(i + 1) % n] + c * normals[i]});
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

double min_clearance(Point p, const Scene& scene) {
  double best = std::numeric_limits<double>::infinity();
  for (const Body& body : scene.bodies()) best = std::min(best, body.distance_to(p));
  return best;
}

ClearanceHit segment_clearance(Point p, Point q, const Scene& scene) {
  ClearanceHit hit{std::numeric_limits<double>::infinity(), 0};
  for (const Body& body : scene.bodies()) {
    const double d = body.distance_to(p, q);
    if (d < hit.distance) hit = {d, body.id()};
  }
  return hit;
}

ClearanceHit arc_clearance(const Arc& arc, const Scene& scene) {
  ClearanceHit hit{std::numeric_limits<double>::infinity(), 0};
  for (const Body& body : scene.bodies()) {
    const double d = body.distance_to(arc);
    if (d < hit.distance) hit = {d, body.id()};
  }
  return hit;
}

bool segment_clear(Point p, Point q, const Scene& scene, double epsilon) {
  const double limit = scene.clearance() - epsilon;
  for (const Body& body : scene.bodies()) {
    if (body.distance_to(p, q) < limit) return false;
  }
  return true;
}

bool arc_clear(const Arc& arc, const Scene& scene, double epsilon) {
  const double limit = scene.clearance() - epsilon;
  for (const Body& body : scene.bodies()) {
    if (body.distance_to(arc) < limit) return false;
  }
  return true;
}

}  // namespace linearc
