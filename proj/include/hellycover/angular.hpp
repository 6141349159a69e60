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

#pragma once

#include <span>
#include <vector>

#include "hellycover/geometry.hpp"

namespace hellycover {

/// Half-open arc [start, start + length) on the unit circle.
/// start lies in [0, 2pi); length in (0, 2pi]. An arc may wrap past 2pi.
struct AngularInterval {
  double start = 0.0;
  double length = 0.0;

  bool operator==(const AngularInterval&) const = default;
};

/// Canonical union of arcs on the circle.
///
/// Canonical form (as exposed by arcs()): arcs pairwise disjoint, sorted by
/// start, non-touching, at most one arc wrapping past 2pi, full circle stored
/// as the single arc [0, 2pi). Arc endpoints closer than kMergeEps are joined.
///
/// Internally the set keeps its seam-split segments and every operation
/// consumes those, so endpoint values are only copied between sets, never
/// re-derived; canonical equality is therefore exact under union/complement
/// round trips.
class AngularSet {
 public:
  static constexpr double kMergeEps = 1e-12;

  AngularSet() = default;  // empty set

  static AngularSet empty_set() { return AngularSet(); }
  static AngularSet full_circle();
  static AngularSet from_intervals(std::span<const AngularInterval> raw);
  static AngularSet single(double start, double length);

  const std::vector<AngularInterval>& arcs() const { return arcs_; }
  double measure() const { return measure_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;

  /// Membership of an angle (reduced mod 2pi). Half-open convention.
  bool contains(double angle) const;

  /// The set rotated by delta.
  AngularSet shifted(double delta) const;

  bool operator==(const AngularSet& o) const { return segments_ == o.segments_; }

 private:
  friend AngularSet angular_union(std::span<const AngularSet> sets);
  friend AngularSet angular_complement(const AngularSet& s);

  /// Non-wrapping closed segment [lo, hi], 0 <= lo < hi <= 2pi.
  struct Segment {
    double lo, hi;
    bool operator==(const Segment&) const = default;
  };

  static AngularSet from_segments(std::vector<Segment> segs);
  void derive_view();  // fill arcs_ and measure_ from segments_

  std::vector<Segment> segments_;
  std::vector<AngularInterval> arcs_;
  double measure_ = 0.0;
};

AngularSet angular_union(const AngularSet& a, const AngularSet& b);
AngularSet angular_union(std::span<const AngularSet> sets);
AngularSet angular_complement(const AngularSet& s);
AngularSet angular_intersection(const AngularSet& a, const AngularSet& b);

/// Longest arc of the set; ties resolved toward the smallest start.
/// Throws on the empty set.
AngularInterval largest_arc(const AngularSet& s);

/// True iff inner is contained in outer, allowing endpoint slack tol.
bool angular_covers(const AngularSet& outer, const AngularSet& inner, double tol);

/// Measure of the symmetric difference.
double angular_symmetric_difference_measure(const AngularSet& a, const AngularSet& b);

}  // namespace hellycover
