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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linearc/geometry.hpp"

namespace linearc {

/// Symmetric weight matrix. Node indices are zero-based; any weight equal to
/// or above `missing_weight()` means "no edge" and is charged as a penalty
/// when a route uses it anyway.
class WeightedGraph {
 public:
  static constexpr double kDefaultMissing = 1000.0;

  explicit WeightedGraph(std::size_t node_count, double missing_weight = kDefaultMissing);

  std::size_t node_count() const { return n_; }
  double missing_weight() const { return missing_; }
  double weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return i != j && weight(i, j) < missing_; }
  void set_edge(std::size_t i, std::size_t j, double weight);

  /// Optional drawing positions, one per node.
  std::vector<Point> coordinates;

 private:
  std::size_t n_;
  double missing_;
  std::vector<double> w_;
};

/// The 15-node roadmap from the colony listing. The mangled 500 entry is
/// placed between nodes 3 and 8.
WeightedGraph appendix_graph();

struct Route {
  std::vector<std::size_t> nodes;
  double cost = 0.0;
};

/// "1→4→8" with one-based labels.
std::string format_route(std::span<const std::size_t> nodes);

/// Exact shortest path; missing edges are treated as absent.
std::optional<Route> dijkstra_shortest(const WeightedGraph& g, std::size_t src, std::size_t dst);

/// Node-inclusion bits; bit i set means node i lies on the route.
class Chromosome {
 public:
  Chromosome() = default;
  explicit Chromosome(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  /// Parses "100100011010011".
  static Chromosome parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool on) { bits_[i] = on ? 1 : 0; }
  void toggle(std::size_t i) { bits_[i] ^= 1; }
  std::string to_string() const;
  friend bool operator==(const Chromosome&, const Chromosome&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Visits the included nodes in ascending index order; consecutive pairs
/// without an edge are charged the graph's missing weight.
Route decode_and_cost(const Chromosome& c, const WeightedGraph& g);

/// T0[i] = max(costs) - costs[i].
std::vector<double> pheromone_init(std::span<const double> costs);

struct AcoParams {
  int ants = 50;
  int generations = 100;
  double global_transfer = 0.2;  ///< P0
  double evaporation = 0.8;      ///< P
  std::uint64_t seed = 1;
  /// Restrict every generation to bit-flip moves (no global re-draw).
  bool local_only = false;
};

struct AcoResult {
  Chromosome best;
  Route route;
  double best_cost = 0.0;
  std::vector<double> best_curve;  ///< best-so-far cost after each generation
  std::vector<double> mean_curve;  ///< mean colony cost after each generation
  double seconds = 0.0;
};

/// Binary-chromosome ant colony between node 0 and the last node.
AcoResult aco_run(const WeightedGraph& g, const AcoParams& params);

}  // namespace linearc
