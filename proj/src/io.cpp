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

#include "hellycover/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace hellycover {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw ParseError(std::string(what) + ": not valid JSON");
  return doc;
}

double number_field(const json& j, const char* ctx) {
  if (!j.is_number()) throw ParseError(std::string(ctx) + ": expected a number");
  return j.get<double>();
}

std::vector<Point2> point_array(const json& arr, const char* field) {
  if (!arr.is_array())
    throw ParseError(std::string(field) + ": expected an array of [x, y] pairs");
  std::vector<Point2> pts;
  pts.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& p = arr[i];
    if (!p.is_array() || p.size() != 2)
      throw ParseError(std::string(field) + "[" + std::to_string(i) +
                       "]: expected an [x, y] pair");
    pts.push_back({number_field(p[0], field), number_field(p[1], field)});
  }
  return pts;
}

// Deterministic writer: nlohmann's dump() prints shortest-round-trip floats,
// so numeric output goes through format_number instead.
class Writer {
 public:
  Writer& raw(const std::string& s) {
    out_ += s;
    return *this;
  }
  Writer& num(double v) { return raw(format_number(v)); }
  Writer& integer(long long v) { return raw(std::to_string(v)); }
  Writer& str(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
    return *this;
  }
  Writer& point(Point2 p) {
    return raw("[").num(p.x).raw(", ").num(p.y).raw("]");
  }
  Writer& points(std::span<const Point2> pts) {
    raw("[");
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) raw(", ");
      point(pts[i]);
    }
    return raw("]");
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

const char* center_kind_name(CenterSetKind k) {
  switch (k) {
    case CenterSetKind::point: return "point";
    case CenterSetKind::segment: return "segment";
    default: return "polygon";
  }
}

constexpr const char* kContactInterpretation =
    "contact set read as boundary(K) intersected with the incircle; "
    "'discrete' means finitely many tangency points";

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Body parse_body_json(const std::string& text) {
  const json doc = parse_or_throw(text, "body");
  if (!doc.is_object()) throw ParseError("body: expected a JSON object");
  if (!doc.contains("core")) throw ParseError("body.core: missing field");
  if (!doc.contains("radius")) throw ParseError("body.radius: missing field");
  std::vector<Point2> core = point_array(doc["core"], "body.core");
  const double radius = number_field(doc["radius"], "body.radius");
  try {
    return Body(std::move(core), radius);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("body: ") + e.what());
  }
}

std::string body_to_json(const Body& body) {
  Writer w;
  w.raw("{\"core\": ").points(body.core()).raw(", \"radius\": ").num(body.rho()).raw("}");
  return w.take();
}

std::vector<Point2> parse_points_json(const std::string& text) {
  const json doc = parse_or_throw(text, "points");
  if (!doc.is_object() || !doc.contains("points"))
    throw ParseError("points: expected an object with a \"points\" field");
  std::vector<Point2> pts = point_array(doc["points"], "points");
  if (pts.empty()) throw ParseError("points: must contain at least one point");
  return pts;
}

std::string points_to_json(std::span<const Point2> points) {
  Writer w;
  w.raw("{\"points\": ").points(points).raw("}");
  return w.take();
}

std::string incircle_to_json(const Incircle& inc) {
  Writer w;
  w.raw("{\"r\": ").num(inc.r);
  w.raw(", \"centers\": {\"kind\": ").str(center_kind_name(inc.centers.kind));
  w.raw(", \"points\": ").points(inc.centers.points).raw("}}");
  return w.take();
}

namespace {

void contact_body(Writer& w, const ContactReport& rep) {
  w.raw("{\"center\": ").point(rep.center);
  w.raw(", \"r\": ").num(rep.r);
  w.raw(", \"tangent_points\": [");
  for (size_t i = 0; i < rep.tangent_points.size(); ++i) {
    if (i) w.raw(", ");
    w.num(rep.tangent_points[i]);
  }
  w.raw("], \"contact_arcs\": [");
  for (size_t i = 0; i < rep.contact_arcs.arcs().size(); ++i) {
    if (i) w.raw(", ");
    const AngularInterval& a = rep.contact_arcs.arcs()[i];
    w.raw("{\"start\": ").num(a.start).raw(", \"length\": ").num(a.length).raw("}");
  }
  w.raw("], \"alpha_contact\": ").num(rep.alpha_contact);
  w.raw(", \"beta\": ").num(rep.beta);
  w.raw(", \"discrete\": ").raw(rep.discrete ? "true" : "false");
  w.raw(", \"lower_bound\": ").num(rep.lower_bound);
  w.raw(", \"interpretation\": ").str(kContactInterpretation);
  w.raw("}");
}

}  // namespace

std::string contact_to_json(const ContactReport& rep) {
  Writer w;
  contact_body(w, rep);
  return w.take();
}

std::string contact_list_to_json(std::span<const ContactReport> reps) {
  Writer w;
  w.raw("{\"reports\": [");
  for (size_t i = 0; i < reps.size(); ++i) {
    if (i) w.raw(", ");
    contact_body(w, reps[i]);
  }
  w.raw("]}");
  return w.take();
}

std::string alpha_profile_to_csv(const AlphaProfile& profile) {
  std::string out = "R,alpha\n";
  char buf[96];
  for (const auto& [R, alpha] : profile.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", R, alpha);
    out += buf;
  }
  return out;
}

std::string alpha_profile_to_json(const AlphaProfile& profile, Point2 center) {
  Writer w;
  w.raw("{\"center\": ").point(center).raw(", \"rows\": [");
  for (size_t i = 0; i < profile.rows.size(); ++i) {
    if (i) w.raw(", ");
    w.raw("{\"R\": ").num(profile.rows[i].first);
    w.raw(", \"alpha\": ").num(profile.rows[i].second).raw("}");
  }
  w.raw("]}");
  return w.take();
}

std::string certificate_to_json(const CounterexampleCertificate& cert) {
  Writer w;
  w.raw("{\n\"body\": ").raw(body_to_json(cert.body));
  w.raw(",\n\"center\": ").point(cert.center);
  w.raw(",\n\"k\": ").integer(cert.k);
  w.raw(",\n\"params\": {\"epsilon\": ").num(cert.params.epsilon);
  w.raw(", \"n\": ").integer(cert.params.n);
  w.raw(", \"R\": ").num(cert.params.R);
  w.raw(", \"center\": ").point(cert.params.center).raw("}");
  w.raw(",\n\"alpha\": ").num(cert.alpha);
  w.raw(",\n\"points\": {\"points\": ").points(cert.points.points);
  w.raw(", \"provenance\": ").str(cert.points.provenance).raw("}");
  w.raw(",\n\"subset_strategy\": {\"kind\": ")
      .str(cert.strategy.exhaustive ? "exhaustive" : "sampled");
  w.raw(", \"count\": ").integer(cert.strategy.count);
  w.raw(", \"seed\": ").integer(static_cast<long long>(cert.strategy.seed)).raw("}");
  w.raw(",\n\"subset_results\": [");
  for (size_t i = 0; i < cert.subset_results.size(); ++i) {
    const SubsetResult& sr = cert.subset_results[i];
    if (i) w.raw(",");
    w.raw("\n{\"subset\": [");
    for (size_t j = 0; j < sr.subset.size(); ++j) {
      if (j) w.raw(", ");
      w.integer(sr.subset[j]);
    }
    w.raw("], \"theta\": ").num(sr.theta);
    w.raw(", \"margin\": ").num(sr.margin).raw("}");
  }
  w.raw("\n],\n\"noncover\": {\"hull_inradius\": ").num(cert.noncover.hull_inradius);
  w.raw(", \"body_inradius\": ").num(cert.noncover.body_inradius).raw("}");
  w.raw(",\n\"verdict\": ").raw(cert.verdict ? "true" : "false");
  w.raw("\n}\n");
  return w.take();
}

CounterexampleCertificate parse_certificate_json(const std::string& text) {
  const json doc = parse_or_throw(text, "certificate");
  if (!doc.is_object()) throw ParseError("certificate: expected a JSON object");
  for (const char* field : {"body", "center", "k", "params", "alpha", "points",
                            "subset_strategy", "subset_results", "noncover",
                            "verdict"}) {
    if (!doc.contains(field))
      throw ParseError(std::string("certificate.") + field + ": missing field");
  }

  Body body = parse_body_json(doc["body"].dump());
  const std::vector<Point2> center_arr = point_array(json::array({doc["center"]}),
                                                     "certificate.center");

  CounterexampleCertificate cert{.body = std::move(body),
                        .center = center_arr[0],
                        .k = 0,
                        .params = {},
                        .alpha = 0.0,
                        .points = {},
                        .strategy = {},
                        .subset_results = {},
                        .noncover = {},
                        .verdict = false};

  if (!doc["k"].is_number_integer())
    throw ParseError("certificate.k: expected an integer");
  cert.k = doc["k"].get<int>();

  const json& params = doc["params"];
  for (const char* field : {"epsilon", "n", "R", "center"})
    if (!params.contains(field))
      throw ParseError(std::string("certificate.params.") + field + ": missing field");
  cert.params.epsilon = number_field(params["epsilon"], "certificate.params.epsilon");
  if (!params["n"].is_number_integer())
    throw ParseError("certificate.params.n: expected an integer");
  cert.params.n = params["n"].get<int>();
  cert.params.R = number_field(params["R"], "certificate.params.R");
  cert.params.center = point_array(json::array({params["center"]}),
                                   "certificate.params.center")[0];
  cert.alpha = number_field(doc["alpha"], "certificate.alpha");

  const json& pts = doc["points"];
  if (!pts.is_object() || !pts.contains("points"))
    throw ParseError("certificate.points: expected an object with a \"points\" field");
  cert.points.points = point_array(pts["points"], "certificate.points.points");
  cert.points.provenance =
      pts.contains("provenance") && pts["provenance"].is_string()
          ? pts["provenance"].get<std::string>()
          : "";

  const json& strat = doc["subset_strategy"];
  if (!strat.is_object() || !strat.contains("kind") || !strat["kind"].is_string())
    throw ParseError("certificate.subset_strategy.kind: missing or not a string");
  const std::string kind = strat["kind"].get<std::string>();
  if (kind != "exhaustive" && kind != "sampled")
    throw ParseError("certificate.subset_strategy.kind: must be exhaustive or sampled");
  cert.strategy.exhaustive = kind == "exhaustive";
  if (strat.contains("count")) {
    if (!strat["count"].is_number_integer())
      throw ParseError("certificate.subset_strategy.count: expected an integer");
    cert.strategy.count = strat["count"].get<long long>();
  }
  if (strat.contains("seed")) {
    if (!strat["seed"].is_number_integer())
      throw ParseError("certificate.subset_strategy.seed: expected an integer");
    cert.strategy.seed = strat["seed"].get<uint64_t>();
  }

  const json& subsets = doc["subset_results"];
  if (!subsets.is_array())
    throw ParseError("certificate.subset_results: expected an array");
  cert.subset_results.reserve(subsets.size());
  for (size_t i = 0; i < subsets.size(); ++i) {
    const json& sr = subsets[i];
    const std::string ctx = "certificate.subset_results[" + std::to_string(i) + "]";
    if (!sr.is_object() || !sr.contains("subset") || !sr.contains("theta") ||
        !sr.contains("margin"))
      throw ParseError(ctx + ": expected {subset, theta, margin}");
    SubsetResult out;
    for (const json& idx : sr["subset"]) {
      if (!idx.is_number_integer())
        throw ParseError(ctx + ".subset: expected integer indices");
      out.subset.push_back(idx.get<int>());
    }
    out.theta = number_field(sr["theta"], (ctx + ".theta").c_str());
    out.margin = number_field(sr["margin"], (ctx + ".margin").c_str());
    cert.subset_results.push_back(std::move(out));
  }

  const json& nc = doc["noncover"];
  if (!nc.is_object() || !nc.contains("hull_inradius") || !nc.contains("body_inradius"))
    throw ParseError("certificate.noncover: expected {hull_inradius, body_inradius}");
  cert.noncover.hull_inradius =
      number_field(nc["hull_inradius"], "certificate.noncover.hull_inradius");
  cert.noncover.body_inradius =
      number_field(nc["body_inradius"], "certificate.noncover.body_inradius");

  if (!doc["verdict"].is_boolean())
    throw ParseError("certificate.verdict: expected a boolean");
  cert.verdict = doc["verdict"].get<bool>();
  return cert;
}

std::string verify_report_to_json(const VerifyReport& report) {
  Writer w;
  w.raw("{\"clean\": ").raw(report.clean ? "true" : "false");
  w.raw(", \"checked_subsets\": ").integer(report.checked_subsets);
  w.raw(", \"violations\": [");
  for (size_t i = 0; i < report.violations.size(); ++i) {
    if (i) w.raw(", ");
    w.str(report.violations[i]);
  }
  w.raw("]}");
  return w.take();
}

std::string cover_to_json(const CoverResult& result, const std::string& mode) {
  Writer w;
  w.raw("{\"mode\": ").str(mode);
  w.raw(", \"found\": ").raw(result.found ? "true" : "false");
  w.raw(", \"margin\": ").num(result.margin);
  if (result.found) {
    w.raw(", \"motion\": {\"theta\": ").num(result.motion.theta);
    w.raw(", \"t\": ").point(result.motion.t).raw("}");
  }
  if (result.impossibility) {
    w.raw(", \"impossibility\": {\"hull_inradius\": ")
        .num(result.impossibility->hull_inradius);
    w.raw(", \"body_inradius\": ").num(result.impossibility->body_inradius).raw("}");
  } else {
    w.raw(", \"impossibility\": null");
  }
  w.raw(", \"inconclusive\": ").raw(result.inconclusive ? "true" : "false");
  w.raw("}");
  return w.take();
}

std::string bound_to_json(const Body& body) {
  const std::vector<Point2> cands = candidate_centers(body);
  std::vector<ContactReport> reps;
  reps.reserve(cands.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Point2 c : cands) {
    reps.push_back(contact_report(body, c));
    lo = std::min(lo, reps.back().lower_bound);
    hi = std::max(hi, reps.back().lower_bound);
  }
  Writer w;
  w.raw("{\"min_lower_bound\": ").num(lo);
  w.raw(", \"max_lower_bound\": ").num(hi);
  w.raw(", \"reports\": [");
  for (size_t i = 0; i < reps.size(); ++i) {
    if (i) w.raw(", ");
    contact_body(w, reps[i]);
  }
  w.raw("]}");
  return w.take();
}

std::string helly_estimate_to_json(const HellyEstimate& est, int point_count) {
  Writer w;
  w.raw("{\"k_max\": ").integer(est.k_max);
  w.raw(", \"mode\": ").str(est.sampled ? "sampled" : "exhaustive");
  w.raw(", \"points\": ").integer(point_count);
  if (est.sampled)
    w.raw(", \"note\": ").str("sampled mode is an upper-confidence estimate, not a proof");
  w.raw("}");
  return w.take();
}

}  // namespace hellycover
