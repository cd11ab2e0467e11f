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

// linearc: plan line-arc paths, run the colony, verify reference tables and
// draw scenes.
//
//   linearc plan --from O --to B [--engine aco --seed 3] [--out plan.json] [--svg plan.svg]
//   linearc aco [--graph g.json] --seed 1 [--runs 20] [--out curve.txt]
//   linearc verify [--tolerance 0.05]
//   linearc export-svg --svg scene.svg [--from O --to A]
//   linearc enumerate --from O --to B -k 3
//
// Exit status: 0 success, 1 verification failure, 2 bad input, 3 no legal path.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linearc/io.hpp"

namespace {

using namespace linearc;
using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct Options {
  std::string scene;
  std::string graph;
  std::string from = "O";
  std::string to;
  std::string engine = "exact";
  std::uint64_t seed = 1;
  int ants = 50;
  int gens = 100;
  int runs = 1;
  std::size_t k = 3;
  std::string out;
  std::string svg;
  std::optional<double> tolerance;
};

struct Endpoint {
  std::string label;
  Point p;
};

Endpoint parse_endpoint(const std::string& text) {
  if (auto named = named_target(text)) {
    std::string label = text;
    for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return {label, *named};
  }
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      std::size_t used = 0;
      const double x = std::stod(text.substr(0, comma), &used);
      const std::string rest = text.substr(comma + 1);
      std::size_t used_y = 0;
      const double y = std::stod(rest, &used_y);
      if (used_y == rest.size() && std::isfinite(x) && std::isfinite(y)) return {"", {x, y}};
    } catch (const std::exception&) {
    }
  }
  throw RequestError("expected O, A, B, C or x,y; got \"" + text + "\"");
}

std::string point_text(Point p) { return "(" + fixed(p.x) + ", " + fixed(p.y) + ")"; }

std::string endpoint_text(const Endpoint& e) {
  return e.label.empty() ? point_text(e.p) : e.label + " " + point_text(e.p);
}

Scene scene_of(const Options& o, std::string* label) {
  if (o.scene.empty()) {
    *label = "builtin";
    return builtin_scene();
  }
  *label = o.scene;
  return load_scene(o.scene);
}

WeightedGraph graph_of(const Options& o, std::string* label) {
  if (o.graph.empty()) {
    *label = "appendix";
    return appendix_graph();
  }
  *label = o.graph;
  return load_graph(o.graph);
}

AcoParams aco_params(const Options& o) {
  AcoParams p;
  p.ants = o.ants;
  p.generations = o.gens;
  p.seed = o.seed;
  return p;
}

Engine engine_of(const Options& o) {
  if (o.engine == "exact") return ExactEngine{};
  if (o.engine == "aco") return AcoEngine{aco_params(o)};
  throw RequestError("unknown engine \"" + o.engine + "\" (exact or aco)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string scene_summary(const Scene& scene, const std::string& label) {
  return label + " (" + std::to_string(scene.obstacles().size()) + " obstacles, clearance " +
         fixed(scene.clearance(), 1) + ", bounds " + fixed(scene.width(), 0) + "x" + fixed(scene.height(), 0) + ")";
}

int cmd_plan(const Options& o) {
  std::string label;
  const Scene scene = scene_of(o, &label);
  const Endpoint from = parse_endpoint(o.from);
  const Endpoint to = parse_endpoint(o.to);
  const PlanResult plan = plan_route(scene, {from.p, to.p, engine_of(o)});

  std::cout << "scene        " << scene_summary(scene, label) << '\n';
  std::cout << "from         " << endpoint_text(from) << '\n';
  std::cout << "to           " << endpoint_text(to) << '\n';
  std::cout << "engine       " << plan.engine;
  if (plan.aco) std::cout << " (seed " << o.seed << ", " << o.ants << " ants, " << o.gens << " generations)";
  std::cout << '\n';
  if (plan.aco) {
    std::cout << "colony route " << format_route(plan.roadmap_route) << " roadmap cost " << fixed(plan.engine_cost)
              << '\n';
  }
  std::cout << "corners      " << plan.corners.size() << '\n';
  for (const auto& c : plan.corners) {
    std::cout << "  " << point_text(c.circle.center) << " r=" << fixed(c.circle.radius, 1) << ' '
              << to_string(c.circle.turn) << " obstacle " << c.obstacle << '\n';
  }
  std::cout << '\n';
  write_segment_table(std::cout, plan.path);
  std::cout << "Travel time " << fixed(plan.travel_time) << '\n';

  if (!o.out.empty()) write_text(o.out, plan_to_json(plan, from.p, to.p).dump(2) + "\n");
  if (!o.svg.empty()) write_text(o.svg, render_svg(scene, &plan.path));
  return 0;
}

int cmd_aco(const Options& o) {
  std::string label;
  const WeightedGraph g = graph_of(o, &label);
  if (o.runs < 1) throw RequestError("--runs must be >= 1");
  const auto oracle = dijkstra_shortest(g, 0, g.node_count() - 1);
  std::cout << "graph    " << label << " (" << g.node_count() << " nodes)\n";
  std::cout << "params   ants " << o.ants << ", generations " << o.gens << ", P0 0.2, P 0.8\n";
  if (oracle) {
    std::cout << "oracle   " << format_route(oracle->nodes) << " cost " << fixed(oracle->cost) << '\n';
  }
  int hits = 0;
  for (int i = 0; i < o.runs; ++i) {
    Options run = o;
    run.seed = o.seed + static_cast<std::uint64_t>(i);
    const AcoResult r = aco_run(g, aco_params(run));
    const bool optimal = oracle && r.best_cost <= oracle->cost;
    hits += optimal ? 1 : 0;
    std::cout << "seed " << run.seed << "  chromosome " << r.best.to_string() << "  route " << format_route(r.route.nodes)
              << "  cost " << fixed(r.best_cost) << (optimal ? "  optimal" : "") << '\n';
    if (!o.out.empty() && i == 0) {
      std::ostringstream curve;
      write_convergence(curve, r);
      write_text(o.out, curve.str());
    }
  }
  if (o.runs > 1) std::cout << "optimal  " << hits << " of " << o.runs << " runs\n";
  return 0;
}

// Reference checks against the fixture tables.
class Verifier {
 public:
  explicit Verifier(std::optional<double> tolerance) : override_(tolerance) {}

  double tol(double fallback) const { return override_.value_or(fallback); }

  void check(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    failures_ += ok ? 0 : 1;
    ++count_;
  }

  void near(const std::string& name, double got, double want, double tolerance) {
    check(name, std::abs(got - want) <= tolerance,
          "got " + fixed(got, 5) + ", expected " + fixed(want, 5) + " +/- " + fixed(tolerance, 5));
  }

  void near_point(const std::string& name, Point got, Point want, double tolerance) {
    const double d = distance(got, want);
    check(name, d <= tolerance,
          "got " + point_text(got) + ", expected " + point_text(want) + " (off " + fixed(d, 5) + ", limit " +
              fixed(tolerance, 5) + ")");
  }

  int failures() const { return failures_; }
  int count() const { return count_; }

 private:
  std::optional<double> override_;
  int failures_ = 0;
  int count_ = 0;
};

Point json_point(const json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

void verify_table(Verifier& v, const Scene& scene, const std::string& key, const json& t) {
  const Point from = *named_target(t["from"].get<std::string>());
  const Point to = *named_target(t["to"].get<std::string>());
  const PlanResult plan = plan_route(scene, {from, to, ExactEngine{}});
  const std::string tag = key + " ";
  v.near(tag + "total", plan.length, t["total"].get<double>(), v.tol(t["total_tolerance"].get<double>()));
  if (t.contains("corrected_total")) {
    v.near(tag + "total (corrected)", plan.length, t["corrected_total"].get<double>(), 1e-4);
  }
  const auto& centers = t["arc_centers"];
  v.check(tag + "corner count", plan.corners.size() == centers.size(),
          std::to_string(plan.corners.size()) + " corners, expected " + std::to_string(centers.size()));
  for (std::size_t i = 0; i < std::min(centers.size(), plan.corners.size()); ++i) {
    v.near_point(tag + "arc center " + std::to_string(i + 1), plan.corners[i].circle.center, json_point(centers[i]),
                 1e-9);
  }
  const auto& rows = t["rows"];
  v.check(tag + "segment count", plan.path.segments.size() == rows.size(),
          std::to_string(plan.path.segments.size()) + " segments, expected " + std::to_string(rows.size()));
  const double ptol = v.tol(t["point_tolerance"].get<double>());
  for (std::size_t i = 0; i < std::min(rows.size(), plan.path.segments.size()); ++i) {
    const auto& row = rows[i];
    const auto& seg = plan.path.segments[i];
    const std::string name = tag + "row " + std::to_string(i + 1);
    v.check(name + " type", is_arc(seg) == (row["type"] == "arc"), is_arc(seg) ? "arc" : "line");
    for (const char* end : {"start", "end"}) {
      const Point got = std::string(end) == "start" ? start_point(seg) : end_point(seg);
      const std::string corrected = std::string(end) + "_corrected";
      if (row.contains(corrected)) {
        v.near_point(name + " " + end + " (erratum, corrected)", got, json_point(row[corrected]), 1e-4);
      } else {
        v.near_point(name + " " + end, got, json_point(row[end]), ptol);
      }
    }
    if (row.value("erratum", false)) {
      v.near(name + " length (erratum, corrected)", segment_length(seg), row["corrected"].get<double>(), 1e-4);
    } else {
      v.near(name + " length", segment_length(seg), row["printed"].get<double>(), v.tol(5e-4));
    }
  }
}

int cmd_verify(const Options& o) {
  const std::filesystem::path dir = fixture_dir();
  std::ifstream in(dir / "reference_tables.json");
  if (!in) throw ParseError("cannot open " + (dir / "reference_tables.json").string());
  json tables;
  try {
    tables = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("reference_tables.json: ") + e.what());
  }

  Verifier v(o.tolerance);
  const Scene scene = load_scene(dir / "builtin_scene.json");
  v.check("builtin scene fixture", scene_to_json(scene) == scene_to_json(builtin_scene()),
          "fixture file matches the compiled-in scene");
  verify_table(v, scene, "O->A", tables["o_to_a"]);
  verify_table(v, scene, "O->B", tables["o_to_b"]);

  const auto& b3 = tables["o_to_b3"];
  const CornerSolution corner = solve_corner({json_point(b3["start"]), json_point(b3["end"]),
                                              json_point(b3["center"]), b3["radius"].get<double>(), std::nullopt});
  v.near("O->B3 corner total (published)", corner.total_length, b3["published_total"].get<double>(),
         v.tol(b3["published_tolerance"].get<double>()));
  v.near("O->B3 corner total (closed-form reference)", corner.total_length, b3["oracle_total"].get<double>(),
         v.tol(b3["oracle_tolerance"].get<double>()));
  v.near("O->B3 first tangent segment", corner.path.segments.empty() ? 0.0 : segment_length(corner.path.segments[0]),
         b3["first_line"].get<double>(), v.tol(b3["first_line_tolerance"].get<double>()));

  const auto& sp = tables["speed"];
  const SpeedLaw law{sp["v0"].get<double>()};
  v.check("speed at turn radius", law.max_turn_speed(sp["radius"].get<double>()) == sp["speed"].get<double>(),
          "v(" + fixed(sp["radius"].get<double>(), 1) + ") = " + fixed(law.max_turn_speed(10.0), 12));

  const auto& gr = tables["graph"];
  const WeightedGraph g = load_graph(dir / "appendix_graph.json");
  const auto best = dijkstra_shortest(g, 0, g.node_count() - 1);
  std::vector<std::size_t> route;
  for (const auto& n : gr["route"]) route.push_back(n.get<std::size_t>() - 1);
  const double route_cost = decode_and_cost(
      [&] {
        std::string bits(g.node_count(), '0');
        for (auto n : route) bits[n] = '1';
        return Chromosome::parse(bits);
      }(),
      g).cost;
  v.near("graph: reference route cost", route_cost, gr["cost"].get<double>(), 1e-9);
  v.check("graph: shortest route", best && best->nodes == route,
          "got " + (best ? format_route(best->nodes) + " cost " + fixed(best->cost) : std::string("none")) +
              ", expected " + format_route(route) + " cost " + fixed(gr["cost"].get<double>()));
  AcoParams params;
  params.ants = gr["ants"].get<int>();
  params.generations = gr["generations"].get<int>();
  params.global_transfer = gr["global_transfer"].get<double>();
  params.evaporation = gr["evaporation"].get<double>();
  const std::string want = gr["chromosome"].get<std::string>();
  int hits = 0;
  const int seeds = gr["seeds"].get<int>();
  for (int s = 1; s <= seeds; ++s) {
    params.seed = static_cast<std::uint64_t>(s);
    const AcoResult r = aco_run(g, params);
    hits += r.best.to_string() == want && r.best_cost == gr["cost"].get<double>() ? 1 : 0;
  }
  v.check("graph: colony chromosome " + want, hits >= gr["required_successes"].get<int>(),
          std::to_string(hits) + " of " + std::to_string(seeds) + " seeds, need " +
              std::to_string(gr["required_successes"].get<int>()));

  std::cout << (v.count() - v.failures()) << " of " << v.count() << " checks passed\n";
  return v.failures() == 0 ? 0 : kExitVerify;
}

int cmd_export_svg(const Options& o) {
  std::string label;
  const Scene scene = scene_of(o, &label);
  const std::string target = !o.svg.empty() ? o.svg : o.out;
  if (target.empty()) throw RequestError("export-svg needs --svg or --out");
  std::optional<PlanResult> plan;
  if (!o.to.empty()) plan = plan_route(scene, {parse_endpoint(o.from).p, parse_endpoint(o.to).p, engine_of(o)});
  write_text(target, render_svg(scene, plan ? &plan->path : nullptr));
  std::cout << "wrote " << target << ": " << scene.obstacles().size() << " obstacles";
  if (plan) std::cout << ", " << plan->path.segments.size() << " path segments";
  std::cout << '\n';
  return 0;
}

int cmd_enumerate(const Options& o) {
  std::string label;
  const Scene scene = scene_of(o, &label);
  const Endpoint from = parse_endpoint(o.from);
  const Endpoint to = parse_endpoint(o.to);
  if (o.k < 1) throw RequestError("-k must be >= 1");
  const auto list = enumerate_candidates(scene, from.p, to.p, o.k);
  std::cout << "scene " << scene_summary(scene, label) << '\n';
  std::cout << "from  " << endpoint_text(from) << "  to " << endpoint_text(to) << '\n';
  json out = json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::cout << (i + 1) << ". " << fixed(list[i].length) << "  ";
    for (std::size_t c = 0; c < list[i].corners.size(); ++c) {
      const auto& circle = list[i].corners[c].circle;
      std::cout << (c ? " " : "") << point_text(circle.center) << ' ' << to_string(circle.turn);
    }
    if (list[i].corners.empty()) std::cout << "straight";
    std::cout << '\n';
    out.push_back(path_to_json(list[i].path));
  }
  if (!o.out.empty()) write_text(o.out, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-arc path planner"};
  app.require_subcommand(1);
  Options o;

  auto scene_opt = [&](CLI::App* sub) { sub->add_option("--scene", o.scene, "scene file (default: builtin)"); };
  auto route_opts = [&](CLI::App* sub, bool required) {
    sub->add_option("--from", o.from, "start: O, A, B, C or x,y")->capture_default_str();
    auto* to = sub->add_option("--to", o.to, "goal: O, A, B, C or x,y");
    if (required) to->required();
  };
  auto colony_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--ants", o.ants, "colony size")->capture_default_str();
    sub->add_option("--gens", o.gens, "generations")->capture_default_str();
  };
  auto engine_opt = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "exact or aco")->capture_default_str()->check(CLI::IsMember({"exact", "aco"}));
  };

  auto* plan = app.add_subcommand("plan", "plan a path and print its segment table");
  scene_opt(plan);
  route_opts(plan, true);
  engine_opt(plan);
  colony_opts(plan);
  plan->add_option("--out", o.out, "write the full-precision JSON report");
  plan->add_option("--svg", o.svg, "write a drawing");

  auto* aco = app.add_subcommand("aco", "run the colony on a weighted graph");
  aco->add_option("--graph", o.graph, "graph file (default: appendix graph)");
  colony_opts(aco);
  aco->add_option("--runs", o.runs, "consecutive seeds to run")->capture_default_str();
  aco->add_option("--out", o.out, "write the first run's convergence curve");

  auto* verify = app.add_subcommand("verify", "check the reference tables");
  verify->add_option("--tolerance", o.tolerance, "override the length and point tolerances");

  auto* svg = app.add_subcommand("export-svg", "draw the scene, envelopes and an optional path");
  scene_opt(svg);
  route_opts(svg, false);
  engine_opt(svg);
  colony_opts(svg);
  svg->add_option("--svg", o.svg, "output file");
  svg->add_option("--out", o.out, "output file (same as --svg)");

  auto* enumerate = app.add_subcommand("enumerate", "list the shortest corner sequences");
  scene_opt(enumerate);
  route_opts(enumerate, true);
  enumerate->add_option("-k", o.k, "number of candidates")->capture_default_str();
  enumerate->add_option("--out", o.out, "write the candidate paths as JSON");

  CLI11_PARSE(app, argc, argv);
  std::cout.setf(std::ios::unitbuf);

  try {
    if (plan->parsed()) return cmd_plan(o);
    if (aco->parsed()) return cmd_aco(o);
    if (verify->parsed()) return cmd_verify(o);
    if (svg->parsed()) return cmd_export_svg(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RequestError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
