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

// Command-line front end. All geometry runs behind the hellycover C API;
// this binary only parses arguments, moves files, and maps status codes to
// exit codes: 0 success, 1 operational/verification failure, 2 bad input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hellycover.h"

namespace {

struct StringResult {
  char* s = nullptr;
  ~StringResult() { hc_string_free(s); }
};

struct BodyHandle {
  hc_body* h = nullptr;
  ~BodyHandle() { hc_body_free(h); }
};

struct PointsHandle {
  hc_points* h = nullptr;
  ~PointsHandle() { hc_points_free(h); }
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

int exit_code_for(hc_status st) {
  switch (st) {
    case HC_OK: return 0;
    case HC_ERROR_PARSE:
    case HC_ERROR_INVALID_ARGUMENT: return 2;
    default: return 1;
  }
}

void check(hc_status st, const std::string& what) {
  if (st == HC_OK) return;
  die(exit_code_for(st),
      what + ": " + hc_status_name(st) + ": " + hc_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(2, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Whole-file atomic write: temp file in place, then rename.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die(1, "cannot write " + tmp);
    out << content;
    if (!out) die(1, "write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    die(1, "cannot rename " + tmp + " to " + path);
}

BodyHandle load_body(const std::string& path) {
  BodyHandle body;
  check(hc_body_parse(read_file(path).c_str(), &body.h), path);
  return body;
}

PointsHandle load_points(const std::string& path) {
  PointsHandle points;
  check(hc_points_parse(read_file(path).c_str(), &points.h), path);
  return points;
}

bool parse_xy(const std::string& text, double out[2]) {
  char extra;
  return std::sscanf(text.c_str(), "%lf,%lf%c", &out[0], &out[1], &extra) == 2;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      die(2, "--R: cannot parse number '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar covering toolkit: incircles, marked sets, rotational "
               "counterexample certificates, translation/rigid covering"};
  app.require_subcommand(1);

  std::string body_path, points_path, cert_path, out_path, csv_path;
  std::string center_text, radii_text, mode = "translate";
  int k = 0, budget = 8, grid_n = 720, refine_iters = 60;
  long long subset_budget = 100000, est_budget = 2000;
  uint64_t seed = 0;
  double tol = 1e-7;

  auto* cmd_incircle = app.add_subcommand("incircle", "inradius and admissible centers");
  cmd_incircle->add_option("--body", body_path, "body JSON file")->required();

  auto* cmd_contact = app.add_subcommand(
      "contact", "contact set report(s) at a center or over all candidates");
  cmd_contact->add_option("--body", body_path)->required();
  cmd_contact->add_option("--center", center_text, "center as x,y");

  auto* cmd_alpha = app.add_subcommand("alpha", "marked-measure profile alpha(R)");
  cmd_alpha->add_option("--body", body_path)->required();
  cmd_alpha->add_option("--center", center_text, "center as x,y")->required();
  cmd_alpha->add_option("--R", radii_text, "comma-separated radii")->required();
  cmd_alpha->add_option("--csv", csv_path, "also write the CSV to this file");

  auto* cmd_construct = app.add_subcommand(
      "construct", "build a counterexample certificate for a given k");
  cmd_construct->add_option("--body", body_path)->required();
  cmd_construct->add_option("--k", k, "subset size k")->required();
  cmd_construct->add_option("--budget", budget, "parameter schedule length");
  cmd_construct->add_option("--subset-budget", subset_budget,
                            "exhaustive below this many subsets, sampled above");
  cmd_construct->add_option("--seed", seed, "sampling seed");
  cmd_construct->add_option("--out", out_path, "certificate output file")->required();

  auto* cmd_verify = app.add_subcommand("verify", "re-check a stored certificate");
  cmd_verify->add_option("--cert", cert_path)->required();
  cmd_verify->add_option("--body", body_path)->required();

  auto* cmd_cover = app.add_subcommand("cover", "cover points by a body image");
  cmd_cover->add_option("--body", body_path)->required();
  cmd_cover->add_option("--points", points_path)->required();
  cmd_cover->add_option("--mode", mode, "translate or rigid")
      ->check(CLI::IsMember({"translate", "rigid"}));
  cmd_cover->add_option("--grid", grid_n, "rotation grid size (rigid mode)");
  cmd_cover->add_option("--refine", refine_iters, "refinement iterations");
  cmd_cover->add_option("--tol", tol, "covering tolerance");

  auto* cmd_helly = app.add_subcommand(
      "helly-est", "empirical Helly number of a configuration");
  cmd_helly->add_option("--body", body_path)->required();
  cmd_helly->add_option("--points", points_path)->required();
  cmd_helly->add_option("--budget", est_budget, "subsets per level");
  cmd_helly->add_option("--seed", seed, "sampling seed");

  auto* cmd_bound = app.add_subcommand(
      "bound", "perimeter/contact lower bound over candidate centers");
  cmd_bound->add_option("--body", body_path)->required();

  auto* cmd_plot = app.add_subcommand("plot", "SVG figure of the body and incircle");
  cmd_plot->add_option("--body", body_path)->required();
  cmd_plot->add_option("--cert", cert_path, "overlay a certificate");
  cmd_plot->add_option("--out", out_path, "SVG output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (cmd_incircle->parsed()) {
    BodyHandle body = load_body(body_path);
    StringResult out;
    check(hc_incircle(body.h, &out.s), "incircle");
    std::cout << out.s << "\n";
    return 0;
  }

  if (cmd_contact->parsed()) {
    BodyHandle body = load_body(body_path);
    double xy[2];
    const bool has_center = !center_text.empty();
    if (has_center && !parse_xy(center_text, xy))
      die(2, "--center: expected x,y");
    StringResult out;
    check(hc_contact(body.h, has_center ? xy : nullptr, &out.s), "contact");
    std::cout << out.s << "\n";
    return 0;
  }

  if (cmd_alpha->parsed()) {
    BodyHandle body = load_body(body_path);
    double xy[2];
    if (!parse_xy(center_text, xy)) die(2, "--center: expected x,y");
    const std::vector<double> radii = parse_double_list(radii_text);
    if (radii.empty()) die(2, "--R: empty radius list");
    StringResult out;
    check(hc_alpha_profile_csv(body.h, xy[0], xy[1], radii.data(), radii.size(),
                               &out.s),
          "alpha");
    std::cout << out.s;
    if (!csv_path.empty()) write_file_atomic(csv_path, out.s);
    return 0;
  }

  if (cmd_construct->parsed()) {
    BodyHandle body = load_body(body_path);
    StringResult cert;
    check(hc_construct(body.h, k, budget, subset_budget, seed, &cert.s),
          "construct");
    write_file_atomic(out_path, cert.s);
    std::cout << "certificate written to " << out_path << "\n";
    return 0;
  }

  if (cmd_verify->parsed()) {
    BodyHandle body = load_body(body_path);
    const std::string cert = read_file(cert_path);
    StringResult report;
    int clean = 0;
    const hc_status st = hc_verify(body.h, cert.c_str(), &report.s, &clean);
    if (st != HC_ERROR_VERIFICATION) check(st, "verify");
    if (report.s) std::cout << report.s << "\n";
    return clean ? 0 : 1;
  }

  if (cmd_cover->parsed()) {
    BodyHandle body = load_body(body_path);
    PointsHandle points = load_points(points_path);
    StringResult out;
    check(hc_cover(body.h, points.h, mode.c_str(), grid_n, refine_iters, tol,
                   &out.s),
          "cover");
    std::cout << out.s << "\n";
    return 0;
  }

  if (cmd_helly->parsed()) {
    BodyHandle body = load_body(body_path);
    PointsHandle points = load_points(points_path);
    StringResult out;
    check(hc_helly_estimate(body.h, points.h, est_budget, seed, &out.s),
          "helly-est");
    std::cout << out.s << "\n";
    return 0;
  }

  if (cmd_bound->parsed()) {
    BodyHandle body = load_body(body_path);
    StringResult out;
    check(hc_bound(body.h, &out.s), "bound");
    std::cout << out.s << "\n";
    return 0;
  }

  if (cmd_plot->parsed()) {
    BodyHandle body = load_body(body_path);
    StringResult svg;
    if (!cert_path.empty()) {
      const std::string cert = read_file(cert_path);
      check(hc_render_svg(body.h, cert.c_str(), &svg.s), "plot");
    } else {
      check(hc_render_svg(body.h, nullptr, &svg.s), "plot");
    }
    write_file_atomic(out_path, svg.s);
    std::cout << "figure written to " << out_path << "\n";
    return 0;
  }

  return 2;
}
