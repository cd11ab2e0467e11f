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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linearc/aco_router.hpp"
#include "linearc/scene.hpp"
#include "linearc/tangent_paths.hpp"

namespace linearc {

/// Named points of the builtin workspace.
struct KnownTargets {
  static constexpr Point O{0.0, 0.0};
  static constexpr Point A{300.0, 300.0};
  static constexpr Point B{100.0, 700.0};
  static constexpr Point C{700.0, 640.0};
};

/// Resolves "O", "A", "B" or "C" (case-insensitive).
std::optional<Point> named_target(std::string_view name);

/// Raised when a request's start or goal is illegal.
class RequestError : public Error {
 public:
  using Error::Error;
};

enum class NodeKind { kStart, kGoal, kCorner };

struct RoadmapNode {
  NodeKind kind = NodeKind::kCorner;
  Point position;
  double radius = 0.0;  ///< turning radius, 0 for start/goal
  int obstacle = 0;     ///< source obstacle of a corner
};

/// Start, corner candidates and goal, ordered by progress from start to goal
/// (start first, goal last). Edge weights are straight-line distances
/// between node positions; an edge exists iff a clear tangent connects them.
struct Roadmap {
  std::vector<RoadmapNode> nodes;
  WeightedGraph graph{0};
};

Roadmap build_roadmap(const Scene& scene, Point start, Point goal);

struct ExactEngine {};
struct AcoEngine {
  AcoParams params;
};
using Engine = std::variant<ExactEngine, AcoEngine>;

struct RouteRequest {
  Point start;
  Point goal;
  Engine engine = ExactEngine{};
};

struct Corner {
  TurningCircle circle;
  int obstacle = 0;
};

struct PlanResult {
  std::vector<Corner> corners;
  SmoothPath path;
  double length = 0.0;
  double travel_time = 0.0;
  std::string engine;
  /// Exact engine: tangent-graph distance. Colony engine: roadmap cost of
  /// the selected node sequence.
  double engine_cost = 0.0;
  std::vector<std::size_t> roadmap_route;
  std::optional<AcoResult> aco;
};

/// Throws RequestError for an illegal start/goal and InfeasibleError (naming
/// the obstacles that block the direct segment) when no legal path exists.
PlanResult plan_route(const Scene& scene, const RouteRequest& request);

struct Candidate {
  std::vector<Corner> corners;
  SmoothPath path;
  double length = 0.0;
};

/// The k shortest legal chained paths over distinct corner-circle sequences
/// of at most `max_corners` corners, ascending by length.
std::vector<Candidate> enumerate_candidates(const Scene& scene, Point start, Point goal, std::size_t k,
                                            std::size_t max_corners = 12);

}  // namespace linearc
