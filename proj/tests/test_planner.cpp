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

#include "linearc/planner.hpp"
#include "oracles.hpp"

using namespace linearc;

namespace {

const Scene& scene() {
  static const Scene s = builtin_scene();
  return s;
}

bool has_node(const Roadmap& rm, Point p) {
  for (const auto& n : rm.nodes) {
    if (n.kind == NodeKind::kCorner && n.position == p) return true;
  }
  return false;
}

std::vector<Point> centers(const std::vector<Corner>& corners) {
  std::vector<Point> out;
  for (const auto& c : corners) out.push_back(c.circle.center);
  return out;
}

}  // namespace

TEST_CASE("named targets") {
  CHECK(named_target("a") == Point{300, 300});
  CHECK(named_target("C") == Point{700, 640});
  CHECK_FALSE(named_target("D").has_value());
}

TEST_CASE("roadmap keeps the reference corners") {
  const Roadmap to_b = build_roadmap(scene(), KnownTargets::O, KnownTargets::B);
  for (Point p : {Point{60, 300}, Point{150, 435}, Point{220, 470}, Point{220, 530}, Point{150, 600}}) {
    CAPTURE(p.x);
    CAPTURE(p.y);
    CHECK(has_node(to_b, p));
  }
  CHECK(to_b.nodes.front().kind == NodeKind::kStart);
  CHECK(to_b.nodes.back().kind == NodeKind::kGoal);
  const Roadmap to_a = build_roadmap(scene(), KnownTargets::O, KnownTargets::A);
  CHECK(has_node(to_a, {80, 210}));
}

TEST_CASE("empty-scene roadmap is a single edge") {
  const Scene empty(800, 800, {});
  const Roadmap rm = build_roadmap(empty, {10, 20}, {400, 500});
  REQUIRE(rm.nodes.size() == 2);
  CHECK(rm.graph.weight(0, 1) == distance({10, 20}, {400, 500}));
}

TEST_CASE("O to A is the one-corner path") {
  const PlanResult r = plan_route(scene(), {KnownTargets::O, KnownTargets::A, ExactEngine{}});
  CHECK(centers(r.corners) == std::vector<Point>{{80, 210}});
  CHECK(r.corners[0].circle.turn == Turn::kCW);
  const auto ref = oracle::chain({0, 0}, {{{80, 210}, -1}}, {300, 300}, 10.0);
  CHECK(std::abs(r.length - ref.total) <= 1e-9);
  CHECK(r.length == doctest::Approx(471.0372).epsilon(1e-7));
  CHECK(r.length == path_length(r.path));
  CHECK(validate_path(r.path, scene()).empty());
}

TEST_CASE("O to B reproduces the five corners") {
  const PlanResult r = plan_route(scene(), {KnownTargets::O, KnownTargets::B, ExactEngine{}});
  const std::vector<Point> want{{60, 300}, {150, 435}, {220, 470}, {220, 530}, {150, 600}};
  CHECK(centers(r.corners) == want);
  const auto ref =
      oracle::chain({0, 0}, {{want[0], -1}, {want[1], -1}, {want[2], 1}, {want[3], 1}, {want[4], -1}}, {100, 700}, 10.0);
  CHECK(std::abs(r.length - ref.total) <= 1e-6);
  CHECK(std::abs(r.engine_cost - r.length) <= 1e-9);
  CHECK(validate_path(r.path, scene()).empty());
}

TEST_CASE("O to C returns a legal path") {
  const PlanResult r = plan_route(scene(), {KnownTargets::O, KnownTargets::C, ExactEngine{}});
  CHECK(r.length > distance(KnownTargets::O, KnownTargets::C));
  CHECK(validate_path(r.path, scene()).empty());
}

TEST_CASE("start equal to goal gives an empty path") {
  const PlanResult r = plan_route(scene(), {KnownTargets::O, KnownTargets::O, ExactEngine{}});
  CHECK(r.path.segments.empty());
  CHECK(r.length == 0.0);
}

TEST_CASE("empty scene gives the straight segment") {
  const Scene empty(800, 800, {});
  const Point a{13.25, 700.5}, b{640.125, 17.75};
  const PlanResult r = plan_route(empty, {a, b, ExactEngine{}});
  REQUIRE(r.path.segments.size() == 1);
  CHECK(r.length == distance(a, b));
}

TEST_CASE("requests too close to an obstacle are rejected") {
  CHECK_THROWS_AS(plan_route(scene(), {{305, 405}, KnownTargets::A, ExactEngine{}}), RequestError);
  CHECK_THROWS_AS(plan_route(scene(), {KnownTargets::O, {235, 300}, ExactEngine{}}), RequestError);
  CHECK_THROWS_AS(plan_route(scene(), {KnownTargets::O, {900, 300}, ExactEngine{}}), RequestError);
}

TEST_CASE("walled-off goals are infeasible") {
  // A goal boxed in by four walls with 5-unit gaps can be reached by no path
  // that keeps 10 units from both sides.
  const Scene boxed(400, 400,
                    {{1, AxisRect{{150, 150}, 100, 10}},
                     {2, AxisRect{{150, 240}, 100, 10}},
                     {3, AxisRect{{150, 165}, 10, 70}},
                     {4, AxisRect{{240, 165}, 10, 70}}});
  CHECK_THROWS_AS(plan_route(boxed, {{20, 20}, {200, 200}, ExactEngine{}}), InfeasibleError);
}

TEST_CASE("colony engine never beats the exact engine") {
  for (Point goal : {KnownTargets::A, KnownTargets::B}) {
    const double exact = plan_route(scene(), {KnownTargets::O, goal, ExactEngine{}}).length;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      AcoParams p;
      p.seed = seed;
      try {
        const PlanResult r = plan_route(scene(), {KnownTargets::O, goal, AcoEngine{p}});
        CHECK(r.length >= exact - 1e-9);
        CHECK(validate_path(r.path, scene()).empty());
        REQUIRE(r.aco.has_value());
      } catch (const InfeasibleError&) {
        // A colony that ends on a disconnected route reports infeasibility.
      }
    }
  }
}

TEST_CASE("colony engine finds O to A") {
  const PlanResult r = plan_route(scene(), {KnownTargets::O, KnownTargets::A, AcoEngine{}});
  CHECK(r.length == doctest::Approx(471.0372).epsilon(1e-7));
  CHECK(r.engine == "aco");
}

TEST_CASE("enumeration is sorted and led by the exact answer") {
  for (Point goal : {KnownTargets::A, KnownTargets::B}) {
    const auto list = enumerate_candidates(scene(), KnownTargets::O, goal, 3);
    REQUIRE(list.size() == 3);
    const PlanResult exact = plan_route(scene(), {KnownTargets::O, goal, ExactEngine{}});
    CHECK(std::abs(list[0].length - exact.length) <= 1e-9);
    CHECK(centers(list[0].corners) == centers(exact.corners));
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].length <= list[i].length);
    for (const auto& c : list) CHECK(validate_path(c.path, scene()).empty());
  }
}
