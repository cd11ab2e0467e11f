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

#include <doctest.h>

#include <cmath>
#include <random>

#include "linearc/scene.hpp"
#include "oracles.hpp"

using namespace linearc;

namespace {

double shoelace(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

double reference_distance(const ObstacleSpec& spec, Point p) {
  if (const auto* c = std::get_if<CircleShape>(&spec.shape)) return oracle::disc_distance(p, c->center, c->radius);
  return oracle::polygon_distance(p, obstacle_vertices(spec));
}

}  // namespace

TEST_CASE("builtin scene has the twelve legend obstacles") {
  const Scene s = builtin_scene();
  CHECK(s.width() == 800.0);
  CHECK(s.height() == 800.0);
  CHECK(s.clearance() == 10.0);
  REQUIRE(s.obstacles().size() == 12);
  for (int id = 1; id <= 12; ++id) CHECK(s.obstacle(id).id == id);
  CHECK(shape_kind(s.obstacle(2).shape) == "circle");
  CHECK(shape_kind(s.obstacle(3).shape) == "parallelogram");
  CHECK(shape_kind(s.obstacle(6).shape) == "triangle");
  CHECK(shape_kind(s.obstacle(7).shape) == "rect");
}

TEST_CASE("polygon vertices are counterclockwise with the expected areas") {
  const Scene s = builtin_scene();
  CHECK(shoelace(obstacle_vertices(s.obstacle(1))) == doctest::Approx(200.0 * 200.0));
  CHECK(shoelace(obstacle_vertices(s.obstacle(7))) == doctest::Approx(220.0 * 60.0));
  // Triangle 6: base 175 from (60,300) to (235,300), apex height 135.
  CHECK(shoelace(obstacle_vertices(s.obstacle(6))) == doctest::Approx(0.5 * 175.0 * 135.0));
  // Parallelogram 3: base 140, height 90.
  CHECK(shoelace(obstacle_vertices(s.obstacle(3))) == doctest::Approx(140.0 * 90.0));
  CHECK_THROWS_AS(obstacle_vertices(s.obstacle(2)), GeometryError);
}

TEST_CASE("scene construction rejects bad input") {
  CHECK_THROWS_AS(Scene(800, 800, {{1, AxisRect{{0, 0}, 10, 10}}, {1, AxisRect{{50, 50}, 10, 10}}}), GeometryError);
  CHECK_THROWS_AS(Scene(800, 800, {{1, AxisRect{{790, 0}, 20, 10}}}), GeometryError);
  CHECK_THROWS_AS(Scene(800, 800, {{1, CircleShape{{100, 100}, -1}}}), GeometryError);
  CHECK_THROWS_AS(Scene(-1, 800, {}), GeometryError);
}

TEST_CASE("empty scene has infinite clearance") {
  const Scene s(100, 100, {});
  CHECK(std::isinf(min_clearance({50, 50}, s)));
  CHECK(inflate_scene(s).empty());
  CHECK(segment_clear({0, 0}, {100, 100}, s));
}

TEST_CASE("point distances agree with a brute-force reference") {
  const Scene s = builtin_scene();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 800.0);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(rng), u(rng)};
    double want = std::numeric_limits<double>::infinity();
    for (const auto& spec : s.obstacles()) {
      const double d = reference_distance(spec, p);
      CHECK(Body(spec).distance_to(p) == doctest::Approx(d).epsilon(1e-12).scale(1.0));
      want = std::min(want, d);
    }
    CHECK(min_clearance(p, s) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("segment and arc clearance match dense sampling") {
  const Scene s = builtin_scene();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 800.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  auto sampled = [&](auto point_at, double length) {
    const int n = std::max(2, static_cast<int>(length / 0.05));
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
      const Point p = point_at(static_cast<double>(k) / n);
      for (const auto& spec : s.obstacles()) best = std::min(best, reference_distance(spec, p));
    }
    return best;
  };
  for (int i = 0; i < 200; ++i) {
    const Point a{u(rng), u(rng)};
    const Point b = a + 60.0 * Point{std::cos(ang(rng)), std::sin(ang(rng))};
    const double exact = segment_clearance(a, b, s).distance;
    const double brute = sampled([&](double t) { return a + t * (b - a); }, distance(a, b));
    // Samples can only overestimate the minimum, by at most the spacing.
    CHECK(exact <= brute + 1e-9);
    CHECK(exact >= brute - 0.05);

    const Arc arc{{u(rng), u(rng)}, 10.0 + 40.0 * (u(rng) / 800.0), ang(rng), 2.0 * ang(rng)};
    const double arc_exact = arc_clearance(arc, s).distance;
    const double arc_brute = sampled(
        [&](double t) { return polar(arc.center, arc.radius, arc.start_angle + t * arc.sweep); }, arc.length());
    CHECK(arc_exact <= arc_brute + 1e-9);
    CHECK(arc_exact >= arc_brute - 0.05);
  }
}

TEST_CASE("segment-arc distance matches sampling") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const Arc arc{{u(rng) / 5, u(rng) / 5}, 5.0 + std::abs(u(rng)) / 5, ang(rng), 2.0 * ang(rng)};
    double brute = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 4000; ++k) {
      const Point q = polar(arc.center, arc.radius, arc.start_angle + arc.sweep * k / 4000.0);
      brute = std::min(brute, oracle::seg_dist(q, a, b));
    }
    const double exact = segment_arc_distance(a, b, arc);
    CHECK(exact <= brute + 1e-9);
    CHECK(exact >= brute - arc.length() / 4000.0);
  }
}

TEST_CASE("envelope areas match Monte-Carlo estimates") {
  const Scene s = builtin_scene();
  const auto regions = inflate_scene(s);
  REQUIRE(regions.size() == 12);
  std::mt19937_64 rng(5);
  for (const auto& region : regions) {
    const ObstacleSpec& spec = s.obstacle(region.source);
    double lo_x = 1e9, lo_y = 1e9, hi_x = -1e9, hi_y = -1e9;
    if (region.is_circle) {
      CHECK(region.radius == doctest::Approx(std::get<CircleShape>(spec.shape).radius + 10.0));
      lo_x = region.center.x - region.radius;
      hi_x = region.center.x + region.radius;
      lo_y = region.center.y - region.radius;
      hi_y = region.center.y + region.radius;
    } else {
      for (Point v : obstacle_vertices(spec)) {
        lo_x = std::min(lo_x, v.x - 10);
        hi_x = std::max(hi_x, v.x + 10);
        lo_y = std::min(lo_y, v.y - 10);
        hi_y = std::max(hi_y, v.y + 10);
      }
    }
    std::uniform_real_distribution<double> ux(lo_x, hi_x), uy(lo_y, hi_y);
    const int n = 200000;
    int hits = 0;
    for (int i = 0; i < n; ++i) hits += reference_distance(spec, {ux(rng), uy(rng)}) <= 10.0 ? 1 : 0;
    const double box = (hi_x - lo_x) * (hi_y - lo_y);
    const double p = static_cast<double>(hits) / n;
    const double estimate = box * p;
    const double sigma = box * std::sqrt(p * (1 - p) / n);
    CAPTURE(region.source);
    CHECK(std::abs(region.area() - estimate) <= 4.0 * sigma);
  }
}

TEST_CASE("clearance predicates respect the margin") {
  const Scene s = builtin_scene();
  // Rectangle 7 spans x in [0, 220], y in [470, 530]; its right side is x = 220.
  CHECK(segment_clear({230, 470}, {230, 530}, s));
  CHECK_FALSE(segment_clear({229, 470}, {229, 530}, s));
  CHECK(s.in_bounds(Point{0, 0}));
  CHECK_FALSE(s.in_bounds(Point{-1, 0}));
}
