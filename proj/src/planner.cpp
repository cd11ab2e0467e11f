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

#include "linearc/planner.hpp"

#include <algorithm>
#include <cstdint>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace linearc {

std::optional<Point> named_target(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'O': return KnownTargets::O;
    case 'A': return KnownTargets::A;
    case 'B': return KnownTargets::B;
    case 'C': return KnownTargets::C;
    default: return std::nullopt;
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSweepEpsilon = 1e-12;

struct CircleCandidate {
  Point center;
  double radius = 0.0;
  int obstacle = 0;
};

// Turning circles around every inflated corner, plus inflated discs.
std::vector<CircleCandidate> corner_circles(const Scene& scene) {
  const double r = std::max(scene.clearance(), kMinTurnRadius);
  std::vector<CircleCandidate> out;
  for (const Body& body : scene.bodies()) {
    if (body.is_disc()) {
      out.push_back({body.disc_center(), body.disc_radius() + r, body.id()});
    } else {
      for (Point v : body.vertices()) out.push_back({v, r, body.id()});
    }
  }
  return out;
}

// Directed tangent graph. States: 0 = start, 1 = goal, 2 + 2c = circle c
// turning CCW, 3 + 2c = circle c turning CW.
class TangentGraph {
 public:
  struct Tangent {
    std::size_t from = 0;
    std::size_t to = 0;
    LineSegment line;
    double length = 0.0;
  };

  TangentGraph(const Scene& scene, Point start, Point goal)
      : scene_(scene), start_(start), goal_(goal), circles_(corner_circles(scene)) {
    const std::size_t states = 2 + 2 * circles_.size();
    departing_.resize(states);
    arriving_.resize(states);
    for (std::size_t a = 0; a < states; ++a) {
      if (a == 1) continue;  // nothing leaves the goal
      for (std::size_t b = 1; b < states; ++b) {
        if (a == b || (a >= 2 && b >= 2 && circle_index(a) == circle_index(b))) continue;
        if (a == 0 && b == 1 && start == goal) continue;
        add_tangent(a, b);
      }
    }
  }

  static bool is_circle(std::size_t state) { return state >= 2; }
  static std::size_t circle_index(std::size_t state) { return (state - 2) / 2; }
  static std::size_t state_of(std::size_t circle, Turn turn) { return 2 + 2 * circle + (turn == Turn::kCW ? 1 : 0); }

  std::size_t state_count() const { return departing_.size(); }
  std::span<const CircleCandidate> circles() const { return circles_; }
  const Tangent& tangent(std::size_t id) const { return tangents_[id]; }
  std::span<const std::size_t> departing(std::size_t state) const { return departing_[state]; }
  Point start() const { return start_; }
  Point goal() const { return goal_; }

  TurningCircle circle_of(std::size_t state) const {
    if (state == 0) return {start_, 0.0, Turn::kCCW};
    if (state == 1) return {goal_, 0.0, Turn::kCCW};
    const auto& c = circles_[circle_index(state)];
    return {c.center, c.radius, (state - 2) % 2 == 0 ? Turn::kCCW : Turn::kCW};
  }

  Corner corner_of(std::size_t state) const {
    return {circle_of(state), circles_[circle_index(state)].obstacle};
  }

  // Arc length on the shared circle between an arriving and a departing
  // tangent, or +inf when the arc is not clear.
  double arc_cost(std::size_t arriving, std::size_t departing) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(arriving) << 32) | departing;
    if (auto it = arc_cache_.find(key); it != arc_cache_.end()) return it->second;
    const Tangent& in = tangents_[arriving];
    const Tangent& out = tangents_[departing];
    const TurningCircle c = circle_of(in.to);
    const ArcSegment arc{c, angle_of(in.line.to - c.center), angle_of(out.line.from - c.center)};
    const double sweep = arc.sweep();
    double cost = 0.0;
    if (sweep > kSweepEpsilon && sweep < kTwoPi - kSweepEpsilon) {
      const Arc g = arc.geometry();
      cost = arc_clear(g, scene_) && scene_.in_bounds(g) ? c.radius * sweep : kInf;
    }
    arc_cache_.emplace(key, cost);
    return cost;
  }

 private:
  void add_tangent(std::size_t a, std::size_t b) {
    const auto line = directed_tangent(circle_of(a), circle_of(b));
    if (!line) return;
    if (!scene_.in_bounds(line->from) || !scene_.in_bounds(line->to)) return;
    if (!segment_clear(line->from, line->to, scene_)) return;
    const std::size_t id = tangents_.size();
    tangents_.push_back({a, b, *line, distance(line->from, line->to)});
    departing_[a].push_back(id);
    arriving_[b].push_back(id);
  }

  const Scene& scene_;
  Point start_;
  Point goal_;
  std::vector<CircleCandidate> circles_;
  std::vector<Tangent> tangents_;
  std::vector<std::vector<std::size_t>> departing_;
  std::vector<std::vector<std::size_t>> arriving_;
  mutable std::unordered_map<std::uint64_t, double> arc_cache_;
};

void check_request(const Scene& scene, Point start, Point goal) {
  for (auto [name, p] : {std::pair{"start", start}, std::pair{"goal", goal}}) {
    std::ostringstream os;
    os << name << " (" << p.x << ", " << p.y << ")";
    if (!is_finite(p)) throw RequestError(os.str() + " is not finite");
    if (!scene.in_bounds(p)) throw RequestError(os.str() + " lies outside the scene bounds");
    const double d = min_clearance(p, scene);
    if (d < scene.clearance() - kClearanceEpsilon) {
      os << " is only " << d << " units from an obstacle (needs " << scene.clearance() << ")";
      throw RequestError(os.str());
    }
  }
}

[[noreturn]] void throw_infeasible(const Scene& scene, Point start, Point goal, const std::string& why) {
  std::ostringstream os;
  os << why << "; obstacles blocking the direct segment:";
  bool any = false;
  for (const Body& body : scene.bodies()) {
    if (body.distance_to(start, goal) < scene.clearance() - kClearanceEpsilon) {
      os << ' ' << body.id();
      any = true;
    }
  }
  if (!any) os << " none";
  throw InfeasibleError(os.str());
}

std::vector<TurningCircle> circles_of(std::span<const Corner> corners) {
  std::vector<TurningCircle> out;
  out.reserve(corners.size());
  for (const auto& c : corners) out.push_back(c.circle);
  return out;
}

// Dijkstra over tangent segments; a label is the length from the start to
// the end of the segment. `allow` filters tangents by their state pair.
using TangentFilter = std::function<bool(std::size_t, std::size_t)>;

std::optional<std::pair<std::vector<std::size_t>, double>> shortest_tangent_path(const TangentGraph& tg,
                                                                                 const TangentFilter& allow = {}) {
  std::vector<double> dist;
  std::vector<std::size_t> prev;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  auto relax = [&](std::size_t id, double d, std::size_t from) {
    if (id >= dist.size()) {
      dist.resize(id + 1, kInf);
      prev.resize(id + 1, none);
    }
    if (d < dist[id]) {
      dist[id] = d;
      prev[id] = from;
      open.push({d, id});
    }
  };
  auto allowed = [&](std::size_t id) { return !allow || allow(tg.tangent(id).from, tg.tangent(id).to); };
  for (std::size_t id : tg.departing(0)) {
    if (allowed(id)) relax(id, tg.tangent(id).length, none);
  }
  while (!open.empty()) {
    const auto [d, id] = open.top();
    open.pop();
    if (d > dist[id]) continue;
    const auto& t = tg.tangent(id);
    if (t.to == 1) {
      std::vector<std::size_t> chain;
      for (std::size_t v = id; v != none; v = prev[v]) chain.push_back(v);
      std::reverse(chain.begin(), chain.end());
      return std::pair{chain, d};
    }
    for (std::size_t next : tg.departing(t.to)) {
      if (!allowed(next)) continue;
      const double arc = tg.arc_cost(id, next);
      if (std::isfinite(arc)) relax(next, d + arc + tg.tangent(next).length, id);
    }
  }
  return std::nullopt;
}

bool legal(const SmoothPath& path, const Scene& scene) { return validate_path(path, scene).empty(); }

// Chromosomes decode nodes in ascending order, so a node that lies on no
// ascending start -> goal route can never appear in a connected route.
void prune_to_ascending_routes(Roadmap& rm) {
  const std::size_t n = rm.nodes.size();
  std::vector<char> from_start(n, 0), to_goal(n, 0);
  from_start[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!from_start[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rm.graph.has_edge(i, j)) from_start[j] = 1;
    }
  }
  to_goal[n - 1] = 1;
  for (std::size_t i = n; i-- > 0;) {
    if (!to_goal[i]) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (rm.graph.has_edge(j, i)) to_goal[j] = 1;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i + 1 == n || (from_start[i] && to_goal[i])) keep.push_back(i);
  }
  if (keep.size() == n) return;
  Roadmap out;
  out.graph = WeightedGraph(keep.size(), rm.graph.missing_weight());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    out.nodes.push_back(rm.nodes[keep[a]]);
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (rm.graph.has_edge(keep[a], keep[b])) out.graph.set_edge(a, b, rm.graph.weight(keep[a], keep[b]));
    }
  }
  rm = std::move(out);
}

}  // namespace

Roadmap build_roadmap(const Scene& scene, Point start, Point goal) {
  check_request(scene, start, goal);
  const TangentGraph tg(scene, start, goal);
  const auto circles = tg.circles();

  // Node order: start, corners by progress along start -> goal, goal.
  std::vector<std::size_t> order(circles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const Point axis = goal - start;
  auto progress = [&](Point p) { return axis == Point{} ? distance(p, start) : dot(p - start, axis); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return progress(circles[a].center) < progress(circles[b].center); });

  Roadmap rm;
  rm.nodes.push_back({NodeKind::kStart, start, 0.0, 0});
  std::vector<std::size_t> node_of_circle(circles.size());
  for (std::size_t c : order) {
    node_of_circle[c] = rm.nodes.size();
    rm.nodes.push_back({NodeKind::kCorner, circles[c].center, circles[c].radius, circles[c].obstacle});
  }
  rm.nodes.push_back({NodeKind::kGoal, goal, 0.0, 0});

  const double missing = 4.0 * (scene.width() + scene.height());
  rm.graph = WeightedGraph(rm.nodes.size(), missing);
  auto node_of_state = [&](std::size_t state) {
    if (state == 0) return std::size_t{0};
    if (state == 1) return rm.nodes.size() - 1;
    return node_of_circle[TangentGraph::circle_index(state)];
  };
  for (std::size_t s = 0; s < tg.state_count(); ++s) {
    for (std::size_t id : tg.departing(s)) {
      const std::size_t a = node_of_state(tg.tangent(id).from);
      const std::size_t b = node_of_state(tg.tangent(id).to);
      if (a == b) continue;
      rm.graph.set_edge(a, b, std::max(distance(rm.nodes[a].position, rm.nodes[b].position), 1e-9));
    }
  }
  prune_to_ascending_routes(rm);
  for (const auto& n : rm.nodes) rm.graph.coordinates.push_back(n.position);
  return rm;
}

namespace {

PlanResult finish(Point start, Point goal, std::vector<Corner> corners) {
  PlanResult r;
  const auto circles = circles_of(corners);
  r.path = start == goal && circles.empty() ? SmoothPath{} : chain_path(start, circles, goal);
  r.corners = std::move(corners);
  r.length = path_length(r.path);
  r.travel_time = SpeedLaw{}.travel_time(r.path);
  return r;
}

PlanResult plan_exact(const Scene& scene, Point start, Point goal) {
  if (start == goal) {
    PlanResult r = finish(start, goal, {});
    r.engine = "exact";
    return r;
  }
  const TangentGraph tg(scene, start, goal);
  const auto found = shortest_tangent_path(tg);
  if (!found) throw_infeasible(scene, start, goal, "no legal path");
  std::vector<Corner> corners;
  for (std::size_t i = 0; i + 1 < found->first.size(); ++i) {
    corners.push_back(tg.corner_of(tg.tangent(found->first[i]).to));
  }
  PlanResult r = finish(start, goal, std::move(corners));
  r.engine = "exact";
  r.engine_cost = found->second;
  const auto violations = validate_path(r.path, scene);
  if (!violations.empty()) {
    throw InfeasibleError("exact route failed validation: " + violations.front().message);
  }
  return r;
}

PlanResult plan_aco(const Scene& scene, Point start, Point goal, const AcoParams& params) {
  if (start == goal) {
    PlanResult r = finish(start, goal, {});
    r.engine = "aco";
    return r;
  }
  const Roadmap rm = build_roadmap(scene, start, goal);
  AcoResult colony = aco_run(rm.graph, params);
  bool connected = true;
  for (std::size_t i = 1; i < colony.route.nodes.size(); ++i) {
    connected = connected && rm.graph.has_edge(colony.route.nodes[i - 1], colony.route.nodes[i]);
  }
  if (!connected) {
    throw_infeasible(scene, start, goal, "colony found no connected roadmap route");
  }
  // Pull the rope taut over the colony's corners: tangents may only move
  // forward along the selected node order, either turn, skipping allowed.
  const TangentGraph tg(scene, start, goal);
  const auto circles = tg.circles();
  const std::size_t last = colony.route.nodes.size();
  std::vector<std::size_t> rank(circles.size(), 0);
  for (std::size_t i = 1; i + 1 < colony.route.nodes.size(); ++i) {
    const RoadmapNode& node = rm.nodes[colony.route.nodes[i]];
    for (std::size_t c = 0; c < circles.size(); ++c) {
      if (circles[c].center == node.position && circles[c].obstacle == node.obstacle) rank[c] = i;
    }
  }
  auto rank_of = [&](std::size_t state) {
    if (state == 0) return std::size_t{0};
    if (state == 1) return last;
    return rank[TangentGraph::circle_index(state)];
  };
  const auto found = shortest_tangent_path(tg, [&](std::size_t a, std::size_t b) {
    const std::size_t rb = rank_of(b);
    return rb != 0 && rank_of(a) < rb;
  });
  if (!found) {
    throw_infeasible(scene, start, goal,
                     "colony route " + format_route(colony.route.nodes) + " cannot be smoothed legally");
  }
  std::vector<Corner> corners;
  for (std::size_t i = 0; i + 1 < found->first.size(); ++i) {
    corners.push_back(tg.corner_of(tg.tangent(found->first[i]).to));
  }
  std::optional<PlanResult> best = finish(start, goal, std::move(corners));
  const auto violations = validate_path(best->path, scene);
  if (!violations.empty()) {
    throw InfeasibleError("colony route failed validation: " + violations.front().message);
  }
  best->engine = "aco";
  best->engine_cost = colony.best_cost;
  best->roadmap_route = colony.route.nodes;
  best->aco = std::move(colony);
  return *best;
}

}  // namespace

PlanResult plan_route(const Scene& scene, const RouteRequest& request) {
  check_request(scene, request.start, request.goal);
  if (const auto* aco = std::get_if<AcoEngine>(&request.engine)) {
    return plan_aco(scene, request.start, request.goal, aco->params);
  }
  return plan_exact(scene, request.start, request.goal);
}

std::vector<Candidate> enumerate_candidates(const Scene& scene, Point start, Point goal, std::size_t k,
                                            std::size_t max_corners) {
  if (k == 0) throw Error("k must be at least 1");
  check_request(scene, start, goal);
  if (start == goal) return {Candidate{}};
  const TangentGraph tg(scene, start, goal);

  // Best length per distinct circle sequence.
  std::map<std::vector<std::size_t>, std::pair<double, std::vector<std::size_t>>> found;
  auto threshold = [&]() {
    if (found.size() < k) return kInf;
    std::vector<double> lengths;
    for (const auto& [key, v] : found) lengths.push_back(v.first);
    std::nth_element(lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(k - 1), lengths.end());
    return lengths[k - 1];
  };
  double bound = kInf;

  std::vector<std::size_t> tangents;  // tangent ids along the current branch
  std::vector<char> used(tg.circles().size(), 0);

  std::function<void(std::size_t, double)> dfs = [&](std::size_t arriving, double length) {
    const auto& in = tg.tangent(arriving);
    struct Option {
      std::size_t id;
      double length;
      double bound;
    };
    std::vector<Option> options;
    for (std::size_t next : tg.departing(in.to)) {
      const auto& t = tg.tangent(next);
      if (t.to != 1) {
        if (tangents.size() >= max_corners || used[TangentGraph::circle_index(t.to)]) continue;
      }
      const double arc = tg.arc_cost(arriving, next);
      if (!std::isfinite(arc)) continue;
      const double len = length + arc + t.length;
      const double lb = len + distance(t.line.to, goal);
      if (lb < bound) options.push_back({next, len, lb});
    }
    std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) { return a.bound < b.bound; });
    for (const Option& o : options) {
      if (o.bound >= bound) break;
      const auto& t = tg.tangent(o.id);
      tangents.push_back(o.id);
      if (t.to == 1) {
        std::vector<std::size_t> key;
        for (std::size_t i = 0; i + 1 < tangents.size(); ++i) {
          key.push_back(TangentGraph::circle_index(tg.tangent(tangents[i]).to));
        }
        auto [it, inserted] = found.try_emplace(key, o.length, tangents);
        if (!inserted && o.length < it->second.first) it->second = {o.length, tangents};
        bound = threshold();
      } else {
        used[TangentGraph::circle_index(t.to)] = 1;
        dfs(o.id, o.length);
        used[TangentGraph::circle_index(t.to)] = 0;
      }
      tangents.pop_back();
    }
  };

  std::vector<std::size_t> roots(tg.departing(0).begin(), tg.departing(0).end());
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    return tg.tangent(a).length + distance(tg.tangent(a).line.to, goal) <
           tg.tangent(b).length + distance(tg.tangent(b).line.to, goal);
  });
  for (std::size_t root : roots) {
    const auto& t = tg.tangent(root);
    if (t.length + distance(t.line.to, goal) >= bound) continue;
    tangents.push_back(root);
    if (t.to == 1) {
      found.try_emplace({}, t.length, tangents);
      bound = threshold();
    } else {
      used[TangentGraph::circle_index(t.to)] = 1;
      dfs(root, t.length);
      used[TangentGraph::circle_index(t.to)] = 0;
    }
    tangents.pop_back();
  }

  std::vector<Candidate> out;
  for (const auto& [key, v] : found) {
    std::vector<Corner> corners;
    for (std::size_t i = 0; i + 1 < v.second.size(); ++i) corners.push_back(tg.corner_of(tg.tangent(v.second[i]).to));
    Candidate c;
    c.path = chain_path(start, circles_of(corners), goal);
    c.corners = std::move(corners);
    c.length = path_length(c.path);
    if (legal(c.path, scene)) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.length < b.length; });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace linearc
