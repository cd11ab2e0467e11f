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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "linearc/aco_router.hpp"
#include "linearc/planner.hpp"
#include "linearc/scene.hpp"
#include "linearc/tangent_paths.hpp"

namespace linearc {

/// Malformed input file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string what, std::size_t line = 0) : Error(std::move(what)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Scene files: {"bounds": [w, h], "clearance": c, "obstacles": [...]}, each
// obstacle {"id", "kind", ...} with the legend parameters:
//   rect          corner [x, y], length, width (width defaults to length)
//   circle        center [x, y], radius
//   triangle      corner [x, y], top [x, y], lower_right [x, y]
//   parallelogram corner [x, y], base, top_left [x, y]
nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);
Scene parse_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);

// Graph files: {"node_count", "missing_weight", "edges": [[i, j, w], ...]}
// with one-based node labels.
nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);
WeightedGraph load_graph(const std::filesystem::path& path);

/// Ordered segment list with type, endpoints, circle data and length.
nlohmann::json path_to_json(const SmoothPath& path);

/// Full-precision plan report.
nlohmann::json plan_to_json(const PlanResult& plan, Point start, Point goal);

/// Human-readable segment table: No / Start / End / Type / Length, 4 decimals.
void write_segment_table(std::ostream& os, const SmoothPath& path);

/// "generation best mean" rows.
void write_convergence(std::ostream& os, const AcoResult& result);

struct SvgOptions {
  bool envelopes = true;
  double stroke = 1.5;
};

/// Scene, clearance envelopes and an optional path. One element per
/// obstacle, per envelope region and per path segment.
std::string render_svg(const Scene& scene, const SmoothPath* path, const SvgOptions& options = {});

/// Fixture directory: $LINEARC_FIXTURES when set, else the source tree copy.
std::filesystem::path fixture_dir();

/// Format with exactly `decimals` digits after the point.
std::string fixed(double v, int decimals = 4);

}  // namespace linearc
