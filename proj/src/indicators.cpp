#include "subsel/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subsel/kdtree.hpp"

namespace subsel {

namespace {

constexpr double kTreeThreshold = 1 << 16;  // |S| * |R| above which the tree pays off

void check_pair(const PointSet& s, const PointSet& r) {
  if (s.empty() || r.empty()) throw InvalidInput("indicator needs non-empty evaluated and reference sets");
  if (s.dim() != r.dim()) throw InvalidInput("evaluated and reference sets differ in dimension");
}

bool use_tree(const PointSet& s, const PointSet& r) {
  return s.size() > 16 && static_cast<double>(s.size()) * static_cast<double>(r.size()) > kTreeThreshold;
}

// Per reference point: min over S of score(s, r); then folded by `reduce`.
template <class Score, class Bound, class Reduce>
double nearest_fold(const PointSet& s, const PointSet& r, Score score, Bound bound, Reduce reduce,
                    double init) {
  double acc = init;
  if (use_tree(s, r)) {
    KdTree tree(s);
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto q = r[i];
      auto hit = tree.nearest_by([&](std::size_t j) { return score(s[j], q); },
                                 [&](const double* lo, const double* hi) { return bound(lo, hi, q); });
      acc = reduce(acc, hit.value);
    }
    return acc;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto q = r[i];
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.size(); ++j) best = std::min(best, score(s[j], q));
    acc = reduce(acc, best);
  }
  return acc;
}

}  // namespace

double igd_plus_distance(Point s, Point r) noexcept {
  double acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double d = std::max(0.0, s[i] - r[i]);
    acc += d * d;
  }
  return std::sqrt(acc);
}

double additive_epsilon(Point s, Point r) noexcept {
  double e = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i) e = std::max(e, s[i] - r[i]);
  return e;
}

double igd(const PointSet& s, const PointSet& r) {
  check_pair(s, r);
  const std::size_t m = s.dim();
  double sum = nearest_fold(
      s, r, [](Point a, Point b) { return distance(a, b); },
      [m](const double* lo, const double* hi, Point q) {
        double acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
          double d = std::max({lo[j] - q[j], 0.0, q[j] - hi[j]});
          acc += d * d;
        }
        return std::sqrt(acc);
      },
      [](double a, double b) { return a + b; }, 0.0);
  return sum / static_cast<double>(r.size());
}

double igd_plus(const PointSet& s, const PointSet& r) {
  check_pair(s, r);
  const std::size_t m = s.dim();
  double sum = nearest_fold(
      s, r, [](Point a, Point b) { return igd_plus_distance(a, b); },
      [m](const double* lo, const double*, Point q) {
        double acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
          double d = std::max(0.0, lo[j] - q[j]);
          acc += d * d;
        }
        return std::sqrt(acc);
      },
      [](double a, double b) { return a + b; }, 0.0);
  return sum / static_cast<double>(r.size());
}

double eps_plus(const PointSet& s, const PointSet& r) {
  check_pair(s, r);
  const std::size_t m = s.dim();
  return nearest_fold(
      s, r, [](Point a, Point b) { return additive_epsilon(a, b); },
      [m](const double* lo, const double*, Point q) {
        double e = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m; ++j) e = std::max(e, lo[j] - q[j]);
        return e;
      },
      [](double a, double b) { return std::max(a, b); }, -std::numeric_limits<double>::infinity());
}

double uniformity(const PointSet& s) {
  if (s.size() < 2) throw InvalidInput("uniformity needs at least two points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::min(best, squared_distance(s[i], s[j]));
  return std::sqrt(best);
}

}  // namespace subsel
