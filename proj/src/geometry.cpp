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

#include "linearc/geometry.hpp"

#include <algorithm>
#include <array>

namespace linearc {
namespace {

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point p, Point a, Point b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

bool Arc::spans(double angle) const {
  if (std::abs(sweep) >= kTwoPi) return true;
  if (sweep >= 0.0) return wrap_two_pi(angle - start_angle) <= sweep;
  return wrap_two_pi(start_angle - angle) <= -sweep;
}

double point_arc_distance(Point p, const Arc& arc) {
  const Point v = p - arc.center;
  const double d = norm(v);
  if (d > 0.0 && arc.spans(angle_of(v))) return std::abs(d - arc.radius);
  if (d == 0.0) return arc.radius;
  return std::min(distance(p, arc.start()), distance(p, arc.end()));
}

// The closest pair is either an endpoint of one curve against the other, a
// crossing, or an interior pair whose connecting line is normal to both; on a
// circle that forces the arc point onto the radius perpendicular to the segment.
double segment_arc_distance(Point a, Point b, const Arc& arc) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return point_arc_distance(a, arc);

  // Crossings of the segment's line with the full circle.
  const Point f = a - arc.center;
  const double qa = len2;
  const double qb = 2.0 * dot(f, d);
  const double qc = dot(f, f) - arc.radius * arc.radius;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    for (double t : {(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)}) {
      if (t >= 0.0 && t <= 1.0) {
        const Point hit = a + t * d;
        if (arc.spans(angle_of(hit - arc.center))) return 0.0;
      }
    }
  }

  double best = std::min({point_arc_distance(a, arc), point_arc_distance(b, arc),
                          point_segment_distance(arc.start(), a, b),
                          point_segment_distance(arc.end(), a, b)});
  const Point n = left_normal(d);
  const double base = angle_of(n);
  for (double angle : {base, base + kPi}) {
    if (arc.spans(angle)) {
      best = std::min(best, point_segment_distance(polar(arc.center, arc.radius, angle), a, b));
    }
  }
  return best;
}

}  // namespace linearc
