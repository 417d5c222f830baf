#ifndef SUBSEL_INDICATORS_HPP
#define SUBSEL_INDICATORS_HPP

#include "subsel/core.hpp"

namespace subsel {

/// d+(s, r) = sqrt(sum_i max(0, s_i - r_i)^2).
double igd_plus_distance(Point s, Point r) noexcept;

/// max_i (s_i - r_i): additive shift needed for s to weakly dominate r.
double additive_epsilon(Point s, Point r) noexcept;

// S is the evaluated set, R the reference set. Large |S| * |R| products go
// through a k-d tree over S; the result is identical to the direct scan.

/// Mean over r in R of the Euclidean distance to the nearest s in S.
double igd(const PointSet& s, const PointSet& r);

/// Mean over r in R of min over S of d+(s, r).
double igd_plus(const PointSet& s, const PointSet& r);

/// max over r in R of min over S of max_i (s_i - r_i).
double eps_plus(const PointSet& s, const PointSet& r);

/// Minimum pairwise Euclidean distance; duplicates give 0. Needs >= 2 points.
double uniformity(const PointSet& s);

}  // namespace subsel

#endif
