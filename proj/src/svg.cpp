/*
 * Copyright 2026 The hellycover authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hellycover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hellycover/incircle.hpp"

namespace hellycover {

namespace {

constexpr double kUnitsPerBodyUnit = 100.0;
constexpr double kPaddingFraction = 0.05;

struct Frame {
  double min_x, max_y;  // world-space anchor (y axis flips)
  double width, height;

  double X(double x) const { return (x - min_x) * kUnitsPerBodyUnit; }
  double Y(double y) const { return (max_y - y) * kUnitsPerBodyUnit; }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void expand(double& lo_x, double& lo_y, double& hi_x, double& hi_y, Point2 p,
            double r = 0.0) {
  lo_x = std::min(lo_x, p.x - r);
  lo_y = std::min(lo_y, p.y - r);
  hi_x = std::max(hi_x, p.x + r);
  hi_y = std::max(hi_y, p.y + r);
}

std::string body_path(const Body& body, const Frame& f) {
  std::string d;
  const double rpx = body.rho() * kUnitsPerBodyUnit;
  bool first = true;
  const auto move_or_line = [&](Point2 p) {
    d += first ? "M " : "L ";
    d += fmt(f.X(p.x)) + " " + fmt(f.Y(p.y)) + " ";
    first = false;
  };

  const std::vector<BoundaryPiece> pieces = boundary_pieces(body);
  if (pieces.size() == 1) {
    // Single-point core: a full circle needs two arc commands.
    const ArcPiece& arc = std::get<ArcPiece>(pieces[0]);
    const Point2 c = arc.center;
    const Point2 east{c.x + body.rho(), c.y};
    const Point2 west{c.x - body.rho(), c.y};
    d = "M " + fmt(f.X(east.x)) + " " + fmt(f.Y(east.y)) + " ";
    d += "A " + fmt(rpx) + " " + fmt(rpx) + " 0 0 0 " + fmt(f.X(west.x)) + " " +
         fmt(f.Y(west.y)) + " ";
    d += "A " + fmt(rpx) + " " + fmt(rpx) + " 0 0 0 " + fmt(f.X(east.x)) + " " +
         fmt(f.Y(east.y)) + " ";
    d += "Z";
    return d;
  }

  for (const BoundaryPiece& piece : pieces) {
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      move_or_line(e->a);
      d += "L " + fmt(f.X(e->b.x)) + " " + fmt(f.Y(e->b.y)) + " ";
    } else {
      const ArcPiece& arc = std::get<ArcPiece>(piece);
      const Point2 from = arc.center + body.rho() * unit(arc.start);
      const Point2 to = arc.center + body.rho() * unit(arc.start + arc.length);
      move_or_line(from);
      // CCW in world space is sweep=0 once the y axis flips.
      const char* large = arc.length > kPi ? "1" : "0";
      d += "A " + fmt(rpx) + " " + fmt(rpx) + " 0 " + large + " 0 " +
           fmt(f.X(to.x)) + " " + fmt(f.Y(to.y)) + " ";
    }
  }
  d += "Z";
  return d;
}

}  // namespace

Scene make_scene(const Body& body) {
  Scene scene{.body = body,
              .center = candidate_centers(body).front(),
              .r = chebyshev_incircle(body).r,
              .marked = std::nullopt,
              .points = std::nullopt,
              .labels = {}};
  char buf[64];
  std::snprintf(buf, sizeof(buf), "r = %.6g", scene.r);
  scene.labels.push_back(buf);
  return scene;
}

Scene make_scene(const Body& body, const CounterexampleCertificate& cert) {
  Scene scene{.body = body,
              .center = cert.center,
              .r = chebyshev_incircle(body).r,
              .marked = marked_set(body, cert.center, cert.params.R),
              .points = cert.points,
              .labels = {}};
  char buf[96];
  std::snprintf(buf, sizeof(buf), "r = %.6g", scene.r);
  scene.labels.push_back(buf);
  std::snprintf(buf, sizeof(buf), "R = %.6g", cert.params.R);
  scene.labels.push_back(buf);
  std::snprintf(buf, sizeof(buf), "alpha = %.6g", cert.alpha);
  scene.labels.push_back(buf);
  std::snprintf(buf, sizeof(buf), "k = %d, n = %d", cert.k, cert.params.n);
  scene.labels.push_back(buf);
  return scene;
}

std::string render_svg(const Scene& scene) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
  for (Point2 p : scene.body.core())
    expand(lo_x, lo_y, hi_x, hi_y, p, scene.body.rho());
  if (scene.points)
    for (Point2 p : scene.points->points) expand(lo_x, lo_y, hi_x, hi_y, p);

  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double pad = kPaddingFraction * span;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;

  Frame f{lo_x, hi_y, (hi_x - lo_x) * kUnitsPerBodyUnit,
          (hi_y - lo_y) * kUnitsPerBodyUnit};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(f.width) + "\" height=\"" + fmt(f.height) + "\" viewBox=\"0 0 " +
         fmt(f.width) + " " + fmt(f.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg += "<path d=\"" + body_path(scene.body, f) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  svg += "<circle cx=\"" + fmt(f.X(scene.center.x)) + "\" cy=\"" +
         fmt(f.Y(scene.center.y)) + "\" r=\"" + fmt(scene.r * kUnitsPerBodyUnit) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<circle cx=\"" + fmt(f.X(scene.center.x)) + "\" cy=\"" +
         fmt(f.Y(scene.center.y)) + "\" r=\"2\" fill=\"black\"/>\n";

  if (scene.marked) {
    // Red strokes along the boundary: sample the radial profile across each
    // marked interval.
    for (const AngularInterval& arc : scene.marked->U.arcs()) {
      const int steps = std::max(8, static_cast<int>(arc.length / 0.02));
      std::string d;
      for (int i = 0; i <= steps; ++i) {
        const double phi = arc.start + arc.length * i / steps;
        const double s = radial_distance(scene.body, scene.center, phi);
        const Point2 p = scene.center + s * unit(phi);
        d += (i == 0 ? "M " : "L ") + fmt(f.X(p.x)) + " " + fmt(f.Y(p.y)) + " ";
      }
      svg += "<path d=\"" + d +
             "\" fill=\"none\" stroke=\"red\" stroke-width=\"3\" "
             "class=\"marked-arc\"/>\n";
    }
  }

  if (scene.points) {
    for (Point2 p : scene.points->points) {
      svg += "<circle cx=\"" + fmt(f.X(p.x)) + "\" cy=\"" + fmt(f.Y(p.y)) +
             "\" r=\"2.5\" fill=\"steelblue\" class=\"config-point\"/>\n";
    }
  }

  double label_y = 18.0;
  for (const std::string& label : scene.labels) {
    svg += "<text x=\"8\" y=\"" + fmt(label_y) +
           "\" font-family=\"monospace\" font-size=\"14\">" + label + "</text>\n";
    label_y += 18.0;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hellycover
