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

#include "linearc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#ifndef LINEARC_FIXTURE_DIR
#define LINEARC_FIXTURE_DIR "fixtures"
#endif

namespace linearc {

using nlohmann::json;

std::string fixed(double v, int decimals) {
  if (v == 0.0) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("LINEARC_FIXTURES"); env != nullptr && *env != '\0') return env;
  return LINEARC_FIXTURE_DIR;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
  }
}

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_from(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  if (!obj[key].is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

Point point_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return point_from(obj[key], where + "." + key);
}

ObstacleSpec obstacle_from(const json& o, const std::string& where) {
  if (!o.is_object()) throw ParseError(where + ": expected an object");
  if (!o.contains("id") || !o["id"].is_number_integer()) throw ParseError(where + ": missing integer \"id\"");
  if (!o.contains("kind") || !o["kind"].is_string()) throw ParseError(where + ": missing \"kind\"");
  ObstacleSpec spec;
  spec.id = o["id"].get<int>();
  const std::string kind = o["kind"].get<std::string>();
  if (kind == "rect") {
    const double length = number_from(o, "length", where);
    const double width = o.contains("width") ? number_from(o, "width", where) : length;
    spec.shape = AxisRect{point_field(o, "corner", where), length, width};
  } else if (kind == "circle") {
    spec.shape = CircleShape{point_field(o, "center", where), number_from(o, "radius", where)};
  } else if (kind == "triangle") {
    spec.shape = Triangle{point_field(o, "corner", where), point_field(o, "top", where),
                          point_field(o, "lower_right", where)};
  } else if (kind == "parallelogram") {
    spec.shape = Parallelogram{point_field(o, "corner", where), number_from(o, "base", where),
                               point_field(o, "top_left", where)};
  } else {
    throw ParseError(where + ": unknown kind \"" + kind + "\"");
  }
  return spec;
}

// Best-effort source line of an obstacle, found from its id.
std::size_t obstacle_line(std::string_view text, const json& o) {
  if (!o.is_object() || !o.contains("id") || !o["id"].is_number_integer()) return 0;
  const std::regex re("\"id\"\\s*:\\s*" + std::to_string(o["id"].get<int>()) + "\\b");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(text.begin(), text.end(), m, re)) {
    return line_of_offset(text, static_cast<std::size_t>(m.position(0)));
  }
  return 0;
}

Scene scene_from_json_text(const json& j, std::string_view text) {
  if (!j.is_object()) throw ParseError("scene: expected an object");
  double width = 800.0, height = 800.0;
  if (j.contains("bounds")) {
    const Point b = point_from(j["bounds"], "bounds");
    width = b.x;
    height = b.y;
  }
  const double clearance = j.contains("clearance") ? number_from(j, "clearance", "scene") : 10.0;
  if (!j.contains("obstacles") || !j["obstacles"].is_array()) throw ParseError("scene: missing \"obstacles\" array");
  std::vector<ObstacleSpec> obstacles;
  const auto& arr = j["obstacles"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "obstacles[" + std::to_string(i) + "]";
    try {
      obstacles.push_back(obstacle_from(arr[i], where));
    } catch (const ParseError& e) {
      const std::size_t line = text.empty() ? 0 : obstacle_line(text, arr[i]);
      if (line == 0) throw;
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
    }
  }
  try {
    return Scene(width, height, std::move(obstacles), clearance);
  } catch (const GeometryError& e) {
    throw ParseError(std::string("scene: ") + e.what());
  }
}

}  // namespace

json scene_to_json(const Scene& scene) {
  json obstacles = json::array();
  for (const auto& spec : scene.obstacles()) {
    json o;
    o["id"] = spec.id;
    o["kind"] = std::string(shape_kind(spec.shape));
    if (const auto* r = std::get_if<AxisRect>(&spec.shape)) {
      o["corner"] = point_json(r->anchor);
      o["length"] = r->width;
      o["width"] = r->height;
    } else if (const auto* c = std::get_if<CircleShape>(&spec.shape)) {
      o["center"] = point_json(c->center);
      o["radius"] = c->radius;
    } else if (const auto* t = std::get_if<Triangle>(&spec.shape)) {
      o["corner"] = point_json(t->left);
      o["top"] = point_json(t->top);
      o["lower_right"] = point_json(t->lower_right);
    } else {
      const auto& p = std::get<Parallelogram>(spec.shape);
      o["corner"] = point_json(p.anchor);
      o["base"] = p.base;
      o["top_left"] = point_json(p.top_left);
    }
    obstacles.push_back(std::move(o));
  }
  return json{{"bounds", json::array({scene.width(), scene.height()})},
              {"clearance", scene.clearance()},
              {"obstacles", std::move(obstacles)}};
}

Scene scene_from_json(const json& j) { return scene_from_json_text(j, {}); }

Scene parse_scene(std::string_view text) { return scene_from_json_text(parse_json(text), text); }

Scene load_scene(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_scene(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

json graph_to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t j = i + 1; j < g.node_count(); ++j) {
      if (g.has_edge(i, j)) edges.push_back(json::array({i + 1, j + 1, g.weight(i, j)}));
    }
  }
  return json{{"node_count", g.node_count()}, {"missing_weight", g.missing_weight()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("node_count") || !j["node_count"].is_number_unsigned()) {
    throw ParseError("graph: missing \"node_count\"");
  }
  const double missing = j.contains("missing_weight") ? number_from(j, "missing_weight", "graph")
                                                      : WeightedGraph::kDefaultMissing;
  WeightedGraph g(j["node_count"].get<std::size_t>(), missing);
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph: missing \"edges\" array");
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    const auto& e = j["edges"][k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
        !e[2].is_number()) {
      throw ParseError(where + ": expected [i, j, weight]");
    }
    const auto a = e[0].get<std::size_t>();
    const auto b = e[1].get<std::size_t>();
    if (a < 1 || b < 1 || a > g.node_count() || b > g.node_count()) throw ParseError(where + ": node out of range");
    try {
      g.set_edge(a - 1, b - 1, e[2].get<double>());
    } catch (const Error& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return g;
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return graph_from_json(parse_json(text));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

json path_to_json(const SmoothPath& path) {
  json segs = json::array();
  for (const auto& s : path.segments) {
    json o;
    o["start"] = point_json(start_point(s));
    o["end"] = point_json(end_point(s));
    o["length"] = segment_length(s);
    if (const auto* arc = std::get_if<ArcSegment>(&s)) {
      o["type"] = "arc";
      o["center"] = point_json(arc->circle.center);
      o["radius"] = arc->circle.radius;
      o["turn"] = to_string(arc->circle.turn);
      o["start_angle"] = arc->start_angle;
      o["end_angle"] = arc->end_angle;
      o["sweep"] = arc->sweep();
    } else {
      o["type"] = "line";
    }
    segs.push_back(std::move(o));
  }
  return json{{"segments", std::move(segs)}, {"length", path_length(path)}};
}

json plan_to_json(const PlanResult& plan, Point start, Point goal) {
  json corners = json::array();
  for (const auto& c : plan.corners) {
    corners.push_back({{"center", point_json(c.circle.center)},
                       {"radius", c.circle.radius},
                       {"turn", to_string(c.circle.turn)},
                       {"obstacle", c.obstacle}});
  }
  json j{{"start", point_json(start)},
         {"goal", point_json(goal)},
         {"engine", plan.engine},
         {"engine_cost", plan.engine_cost},
         {"corners", std::move(corners)},
         {"path", path_to_json(plan.path)},
         {"length", plan.length},
         {"travel_time", plan.travel_time}};
  if (!plan.roadmap_route.empty()) {
    json route = json::array();
    for (auto n : plan.roadmap_route) route.push_back(n + 1);
    j["roadmap_route"] = std::move(route);
  }
  if (plan.aco) {
    j["aco"] = {{"chromosome", plan.aco->best.to_string()},
                {"best_cost", plan.aco->best_cost},
                {"generations", plan.aco->best_curve.size()}};
  }
  return j;
}

void write_segment_table(std::ostream& os, const SmoothPath& path) {
  auto pt = [](Point p) { return "(" + fixed(p.x) + ", " + fixed(p.y) + ")"; };
  os << std::left << std::setw(4) << "No" << std::setw(24) << "Start" << std::setw(24) << "End" << std::setw(44)
     << "Type" << "Length\n";
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const auto& s = path.segments[i];
    std::string type = "Straight line";
    if (const auto* arc = std::get_if<ArcSegment>(&s)) {
      type = "Arc about " + pt(arc->circle.center) + " r=" + fixed(arc->circle.radius, 1) + " " +
             to_string(arc->circle.turn);
    }
    os << std::left << std::setw(4) << (i + 1) << std::setw(24) << pt(start_point(s)) << std::setw(24)
       << pt(end_point(s)) << std::setw(44) << type << fixed(segment_length(s)) << '\n';
  }
  os << "Total length " << fixed(path_length(path)) << '\n';
}

void write_convergence(std::ostream& os, const AcoResult& result) {
  os << "# generation best mean\n";
  for (std::size_t i = 0; i < result.best_curve.size(); ++i) {
    os << (i + 1) << ' ' << fixed(result.best_curve[i], 6) << ' ' << fixed(result.mean_curve[i], 6) << '\n';
  }
}

namespace {

std::string svg_point(Point p) { return fixed(p.x) + " " + fixed(p.y); }

std::string svg_arc_to(double radius, double sweep, bool ccw, Point to) {
  return "A " + fixed(radius) + " " + fixed(radius) + " 0 " + (sweep > kPi ? "1" : "0") + " " + (ccw ? "1" : "0") +
         " " + svg_point(to);
}

}  // namespace

std::string render_svg(const Scene& scene, const SmoothPath* path, const SvgOptions& options) {
  std::ostringstream os;
  const std::string w = fixed(scene.width(), 0);
  const std::string h = fixed(scene.height(), 0);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\" stroke=\"black\"/>\n";
  os << "<g transform=\"translate(0," << h << ") scale(1,-1)\">\n";

  os << "<g class=\"obstacles\" fill=\"#9aa5b1\" stroke=\"#3e4c59\">\n";
  for (const Body& body : scene.bodies()) {
    if (body.is_disc()) {
      os << "<circle id=\"obstacle-" << body.id() << "\" cx=\"" << fixed(body.disc_center().x) << "\" cy=\""
         << fixed(body.disc_center().y) << "\" r=\"" << fixed(body.disc_radius()) << "\"/>\n";
    } else {
      os << "<polygon id=\"obstacle-" << body.id() << "\" points=\"";
      for (std::size_t i = 0; i < body.vertices().size(); ++i) {
        const Point v = body.vertices()[i];
        os << (i ? " " : "") << fixed(v.x) << ',' << fixed(v.y);
      }
      os << "\"/>\n";
    }
  }
  os << "</g>\n";

  if (options.envelopes) {
    os << "<g class=\"envelopes\" fill=\"none\" stroke=\"#e12d39\" stroke-dasharray=\"4 3\">\n";
    for (const auto& region : inflate_scene(scene)) {
      if (region.is_circle) {
        os << "<circle id=\"envelope-" << region.source << "\" cx=\"" << fixed(region.center.x) << "\" cy=\""
           << fixed(region.center.y) << "\" r=\"" << fixed(region.radius) << "\"/>\n";
        continue;
      }
      os << "<path id=\"envelope-" << region.source << "\" d=\"";
      for (std::size_t i = 0; i < region.corner_arcs.size(); ++i) {
        const CornerArc& a = region.corner_arcs[i];
        const Point from = polar(a.center, a.radius, a.start_angle);
        const Point to = polar(a.center, a.radius, a.end_angle);
        os << (i == 0 ? "M " : " L ") << svg_point(from) << ' '
           << svg_arc_to(a.radius, a.end_angle - a.start_angle, true, to);
      }
      os << " Z\"/>\n";
    }
    os << "</g>\n";
  }

  if (path != nullptr) {
    os << "<g class=\"path\" fill=\"none\" stroke=\"#0967d2\" stroke-width=\"" << fixed(options.stroke, 2) << "\">\n";
    for (std::size_t i = 0; i < path->segments.size(); ++i) {
      const auto& s = path->segments[i];
      os << "<path id=\"segment-" << (i + 1) << "\" d=\"M " << svg_point(start_point(s)) << ' ';
      if (const auto* arc = std::get_if<ArcSegment>(&s)) {
        os << svg_arc_to(arc->circle.radius, arc->sweep(), arc->circle.turn == Turn::kCCW, end_point(s));
      } else {
        os << "L " << svg_point(end_point(s));
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace linearc
