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

#include "linearc/aco_router.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace linearc {

WeightedGraph::WeightedGraph(std::size_t node_count, double missing_weight)
    : n_(node_count), missing_(missing_weight), w_(node_count * node_count, missing_weight) {
  for (std::size_t i = 0; i < n_; ++i) w_[i * n_ + i] = 0.0;
}

void WeightedGraph::set_edge(std::size_t i, std::size_t j, double weight) {
  if (i >= n_ || j >= n_) throw Error("edge endpoint out of range");
  if (i == j) throw Error("self-loops are not allowed");
  if (!(weight > 0.0)) throw Error("edge weights must be positive");
  w_[i * n_ + j] = weight;
  w_[j * n_ + i] = weight;
}

WeightedGraph appendix_graph() {
  struct Edge {
    int a, b;
    double w;
  };
  static constexpr Edge kEdges[] = {
      {1, 2, 70},    {1, 4, 276},  {1, 5, 208},   {2, 3, 141},  {2, 4, 211},  {2, 5, 120},  {2, 6, 182},
      {3, 4, 68},    {3, 5, 168},  {3, 6, 100},   {3, 7, 132},  {3, 8, 500},  {4, 7, 145},  {4, 8, 131},
      {5, 6, 120},   {5, 12, 313}, {6, 7, 60},    {7, 8, 131},  {7, 9, 141},  {7, 12, 89},  {8, 9, 49},
      {8, 14, 555},  {9, 11, 30},  {9, 14, 118},  {10, 11, 76}, {10, 12, 170}, {10, 13, 55}, {11, 12, 123},
      {11, 13, 128}, {11, 14, 69}, {13, 15, 141}, {14, 15, 82},
  };
  WeightedGraph g(15);
  for (const Edge& e : kEdges) g.set_edge(e.a - 1, e.b - 1, e.w);
  return g;
}

std::string format_route(std::span<const std::size_t> nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += "→";
    out += std::to_string(nodes[i] + 1);
  }
  return out;
}

std::optional<Route> dijkstra_shortest(const WeightedGraph& g, std::size_t src, std::size_t dst) {
  const std::size_t n = g.node_count();
  if (src >= n || dst >= n) throw Error("node index out of range");
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> prev(n, n);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[src] = 0.0;
  open.push({0.0, src});
  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (d > dist[u]) continue;
    if (u == dst) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const double nd = d + g.weight(u, v);
      if (nd < dist[v]) {
        dist[v] = nd;
        prev[v] = u;
        open.push({nd, v});
      }
    }
  }
  if (!std::isfinite(dist[dst])) return std::nullopt;
  Route r;
  r.cost = dist[dst];
  for (std::size_t v = dst; v != n; v = prev[v]) r.nodes.push_back(v);
  std::reverse(r.nodes.begin(), r.nodes.end());
  return r;
}

Chromosome Chromosome::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error("chromosome must contain only 0 and 1");
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return Chromosome(std::move(bits));
}

std::string Chromosome::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s += b ? '1' : '0';
  return s;
}

Route decode_and_cost(const Chromosome& c, const WeightedGraph& g) {
  if (c.size() != g.node_count()) throw Error("chromosome length does not match the graph");
  Route r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) r.nodes.push_back(i);
  }
  for (std::size_t i = 1; i < r.nodes.size(); ++i) {
    r.cost += std::min(g.weight(r.nodes[i - 1], r.nodes[i]), g.missing_weight());
  }
  return r;
}

std::vector<double> pheromone_init(std::span<const double> costs) {
  if (costs.empty()) throw Error("pheromone_init needs at least one cost");
  const double worst = *std::max_element(costs.begin(), costs.end());
  std::vector<double> t(costs.size());
  for (std::size_t i = 0; i < costs.size(); ++i) t[i] = worst - costs[i];
  return t;
}

namespace {

// Uniform index in [0, m) from raw engine output. mt19937_64 is fully
// specified by the standard, so runs are reproducible across toolchains.
std::size_t draw_index(std::mt19937_64& rng, std::size_t m) { return static_cast<std::size_t>(rng() % m); }
bool draw_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

}  // namespace

// Generation loop, following the six-step description of the colony:
//   1. place N ants: random chromosomes with the start and goal bits set;
//   2. initialise parameters and pheromone T0 = max(cost) - cost;
//   3. per ant, transition probability (T_best - T_ant) / T_best; below P0 the
//      ant does a small-scale search (flip max(1, round(lambda * free)) bits,
//      lambda = 1/generation), otherwise a wide search (re-draw every free
//      bit); a move is kept only if it lowers the ant's cost;
//   4. evaporate and re-deposit: T = (1 - P) T + (max cost - cost);
//   5. repeat from step 3;
//   6. report the best ant.
AcoResult aco_run(const WeightedGraph& g, const AcoParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = g.node_count();
  if (n < 2) throw Error("colony needs at least two nodes");
  if (params.ants < 1 || params.generations < 0) throw Error("ants must be >= 1 and generations >= 0");
  if (!(params.global_transfer > 0.0 && params.global_transfer < 1.0) ||
      !(params.evaporation > 0.0 && params.evaporation < 1.0)) {
    throw Error("P0 and P must lie in (0, 1)");
  }
  const std::size_t ants = static_cast<std::size_t>(params.ants);
  const std::size_t free_bits = n - 2;
  std::mt19937_64 rng(params.seed);

  std::vector<Chromosome> colony;
  colony.reserve(ants);
  for (std::size_t a = 0; a < ants; ++a) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = draw_bit(rng) ? 1 : 0;
    bits.front() = 1;
    bits.back() = 1;
    colony.emplace_back(std::move(bits));
  }
  std::vector<double> cost(ants);
  for (std::size_t a = 0; a < ants; ++a) cost[a] = decode_and_cost(colony[a], g).cost;
  std::vector<double> pheromone = pheromone_init(cost);

  AcoResult result;
  std::vector<std::size_t> order(free_bits);
  for (int gen = 1; gen <= params.generations; ++gen) {
    const double lambda = 1.0 / gen;
    const double best_pheromone = *std::max_element(pheromone.begin(), pheromone.end());
    const std::size_t flips =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(lambda * static_cast<double>(free_bits))));
    for (std::size_t a = 0; a < ants; ++a) {
      const double transition = best_pheromone > 0.0 ? (best_pheromone - pheromone[a]) / best_pheromone : 1.0;
      Chromosome candidate = colony[a];
      if (free_bits > 0 && (transition < params.global_transfer || params.local_only)) {
        std::iota(order.begin(), order.end(), std::size_t{1});
        const std::size_t k = std::min(flips, free_bits);
        for (std::size_t i = 0; i < k; ++i) {
          std::swap(order[i], order[i + draw_index(rng, free_bits - i)]);
          candidate.toggle(order[i]);
        }
      } else {
        for (std::size_t i = 1; i + 1 < n; ++i) candidate.set(i, draw_bit(rng));
      }
      const double c = decode_and_cost(candidate, g).cost;
      if (c < cost[a]) {
        colony[a] = std::move(candidate);
        cost[a] = c;
      }
    }
    const double worst = *std::max_element(cost.begin(), cost.end());
    for (std::size_t a = 0; a < ants; ++a) {
      pheromone[a] = (1.0 - params.evaporation) * pheromone[a] + (worst - cost[a]);
    }
    result.best_curve.push_back(*std::min_element(cost.begin(), cost.end()));
    result.mean_curve.push_back(std::accumulate(cost.begin(), cost.end(), 0.0) / static_cast<double>(ants));
  }

  const std::size_t best = static_cast<std::size_t>(std::min_element(cost.begin(), cost.end()) - cost.begin());
  result.best = colony[best];
  result.route = decode_and_cost(colony[best], g);
  result.best_cost = cost[best];
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace linearc
