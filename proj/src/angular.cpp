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

#include "hellycover/angular.hpp"

#include <algorithm>
#include <cmath>

namespace hellycover {

AngularSet AngularSet::full_circle() {
  AngularSet s;
  s.segments_ = {{0.0, kTau}};
  s.arcs_ = {{0.0, kTau}};
  s.measure_ = kTau;
  return s;
}

AngularSet AngularSet::single(double start, double length) {
  AngularInterval arc{start, length};
  return from_intervals(std::span<const AngularInterval>(&arc, 1));
}

AngularSet AngularSet::from_intervals(std::span<const AngularInterval> raw) {
  // Cut the raw arcs at the 0/2pi seam; this is the only place split
  // endpoints are computed rather than copied.
  std::vector<Segment> segs;
  segs.reserve(raw.size() + 1);
  for (const AngularInterval& arc : raw) {
    if (!(arc.length > 0.0)) continue;
    const double start = normalize_angle(arc.start);
    const double len = std::min(arc.length, kTau);
    const double end = start + len;
    if (end <= kTau) {
      segs.push_back({start, end});
    } else {
      segs.push_back({start, kTau});
      segs.push_back({0.0, end - kTau});
    }
  }
  return from_segments(std::move(segs));
}

AngularSet AngularSet::from_segments(std::vector<Segment> segs) {
  AngularSet out;
  if (segs.empty()) return out;

  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  for (const Segment& s : segs) {
    if (!(s.hi > s.lo)) continue;
    if (!out.segments_.empty() && s.lo <= out.segments_.back().hi + kMergeEps) {
      out.segments_.back().hi = std::max(out.segments_.back().hi, s.hi);
    } else {
      out.segments_.push_back(s);
    }
  }
  out.derive_view();
  return out;
}

void AngularSet::derive_view() {
  arcs_.clear();
  measure_ = 0.0;
  if (segments_.empty()) return;

  // Full circle: a single segment covering the seam on both sides.
  if (segments_.size() == 1 && segments_[0].lo <= kMergeEps &&
      segments_[0].hi >= kTau - kMergeEps) {
    segments_ = {{0.0, kTau}};
    arcs_ = {{0.0, kTau}};
    measure_ = kTau;
    return;
  }

  const bool wraps = segments_.size() >= 2 && segments_.front().lo <= kMergeEps &&
                     segments_.back().hi >= kTau - kMergeEps;
  const size_t begin = wraps ? 1 : 0;
  const size_t end = wraps ? segments_.size() - 1 : segments_.size();
  for (size_t i = begin; i < end; ++i)
    arcs_.push_back({segments_[i].lo, segments_[i].hi - segments_[i].lo});
  if (wraps)
    arcs_.push_back({segments_.back().lo,
                     (kTau - segments_.back().lo) + segments_.front().hi});
  for (const AngularInterval& a : arcs_) measure_ += a.length;
}

bool AngularSet::is_full() const {
  return arcs_.size() == 1 && arcs_[0].length >= kTau;
}

bool AngularSet::contains(double angle) const {
  const double a = normalize_angle(angle);
  for (const Segment& s : segments_)
    if (a >= s.lo && a < s.hi) return true;
  return false;
}

AngularSet AngularSet::shifted(double delta) const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size() + 1);
  for (const Segment& s : segments_) {
    const double lo = normalize_angle(s.lo + delta);
    const double hi = lo + (s.hi - s.lo);
    if (hi <= kTau) {
      segs.push_back({lo, hi});
    } else {
      segs.push_back({lo, kTau});
      segs.push_back({0.0, hi - kTau});
    }
  }
  return from_segments(std::move(segs));
}

AngularSet angular_union(std::span<const AngularSet> sets) {
  std::vector<AngularSet::Segment> segs;
  for (const AngularSet& s : sets)
    segs.insert(segs.end(), s.segments_.begin(), s.segments_.end());
  return AngularSet::from_segments(std::move(segs));
}

AngularSet angular_union(const AngularSet& a, const AngularSet& b) {
  const AngularSet sets[2] = {a, b};
  return angular_union(std::span<const AngularSet>(sets, 2));
}

AngularSet angular_complement(const AngularSet& s) {
  if (s.is_empty()) return AngularSet::full_circle();
  if (s.is_full()) return AngularSet::empty_set();

  std::vector<AngularSet::Segment> gaps;
  double cursor = 0.0;
  for (const AngularSet::Segment& seg : s.segments_) {
    if (seg.lo > cursor) gaps.push_back({cursor, seg.lo});
    cursor = std::max(cursor, seg.hi);
  }
  if (cursor < kTau) gaps.push_back({cursor, kTau});
  return AngularSet::from_segments(std::move(gaps));
}

AngularSet angular_intersection(const AngularSet& a, const AngularSet& b) {
  return angular_complement(
      angular_union(angular_complement(a), angular_complement(b)));
}

AngularInterval largest_arc(const AngularSet& s) {
  if (s.is_empty()) throw ValidationError("largest_arc: empty angular set");
  const AngularInterval* best = &s.arcs()[0];
  for (const AngularInterval& a : s.arcs())
    if (a.length > best->length) best = &a;
  return *best;
}

bool angular_covers(const AngularSet& outer, const AngularSet& inner, double tol) {
  if (inner.is_empty()) return true;
  if (outer.is_full()) return true;
  for (const AngularInterval& arc : inner.arcs()) {
    if (arc.length <= 2.0 * tol) continue;  // below resolution
    // The shrunken arc must sit inside a single arc of outer.
    const double s = normalize_angle(arc.start + tol);
    const double len = arc.length - 2.0 * tol;
    bool ok = false;
    for (const AngularInterval& o : outer.arcs()) {
      const double d = normalize_angle(s - o.start);
      if (d <= o.length + tol && d + len <= o.length + tol) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

double angular_symmetric_difference_measure(const AngularSet& a, const AngularSet& b) {
  const double u = angular_union(a, b).measure();
  const double i = angular_intersection(a, b).measure();
  return u - i;
}

}  // namespace hellycover
