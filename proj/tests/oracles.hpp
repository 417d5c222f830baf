#ifndef SUBSEL_TESTS_ORACLES_HPP
#define SUBSEL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "subsel/core.hpp"

namespace oracle {

using subsel::Point;
using subsel::PointSet;
using subsel::Vector;

inline PointSet random_set(std::size_t n, std::size_t m, std::mt19937_64& rng, double lo = 0, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> data(n * m);
  for (double& v : data) v = u(rng);
  return PointSet(m, std::move(data));
}

// Random points on the simplex face x_1 + ... + x_m = 1, mutually non-dominated.
inline PointSet random_front(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> data;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    std::vector<double> row(m);
    for (double& v : row) s += (v = e(rng));
    for (double v : row) data.push_back(v / s);
  }
  return PointSet(m, std::move(data));
}

inline bool dominates(Point a, Point b) {
  bool any = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) any = true;
  }
  return any;
}

inline std::vector<std::size_t> nondominated(const PointSet& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool dom = false;
    for (std::size_t j = 0; j < a.size() && !dom; ++j) dom = j != i && dominates(a[j], a[i]);
    if (!dom) out.push_back(i);
  }
  return out;
}

inline double dist(Point a, Point b) {
  double s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return std::sqrt(s);
}

inline double dplus(Point s, Point r) {
  double t = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    double d = std::max(0.0, s[j] - r[j]);
    t += d * d;
  }
  return std::sqrt(t);
}

inline double igd(const PointSet& s, const PointSet& r, bool plus = false) {
  double total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.size(); ++j) best = std::min(best, plus ? dplus(s[j], r[i]) : dist(s[j], r[i]));
    total += best;
  }
  return total / static_cast<double>(r.size());
}

inline double eps_plus(const PointSet& s, const PointSet& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.size(); ++j) {
      double e = -std::numeric_limits<double>::infinity();
      for (std::size_t d = 0; d < s.dim(); ++d) e = std::max(e, s[j][d] - r[i][d]);
      best = std::min(best, e);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

inline double uniformity(const PointSet& s) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::min(best, dist(s[i], s[j]));
  return best;
}

// Inclusion-exclusion over all subsets; only for tiny sets.
inline double hv_inclusion_exclusion(const PointSet& s, const Vector& ref) {
  const std::size_t n = s.size(), m = s.dim();
  double total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Vector corner(m, -std::numeric_limits<double>::infinity());
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        ++bits;
        for (std::size_t j = 0; j < m; ++j) corner[j] = std::max(corner[j], s[i][j]);
      }
    double v = 1;
    for (std::size_t j = 0; j < m; ++j) v *= std::max(0.0, ref[j] - corner[j]);
    total += (bits % 2 ? 1 : -1) * v;
  }
  return total;
}

// Plain greedy: full re-evaluation each step, first maximum wins.
inline std::vector<std::size_t> naive_greedy(std::size_t n, std::size_t k,
                                             const std::function<double(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> chosen;
  std::vector<char> used(n, 0);
  double cur = f(chosen);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = n;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      chosen.push_back(i);
      double g = f(chosen) - cur;
      chosen.pop_back();
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    used[best] = 1;
    chosen.push_back(best);
    cur = f(chosen);
  }
  return chosen;
}

// Best value of f over all k-subsets of {0..n-1}.
inline double exhaustive_max(std::size_t n, std::size_t k, const std::function<double(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      best = std::max(best, f(idx));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

// Quadratic farthest-point traversal.
inline std::vector<std::size_t> farthest_point(const PointSet& a, std::size_t k, std::size_t first) {
  std::vector<std::size_t> out{first};
  while (out.size() < k) {
    std::size_t best = a.size();
    double best_d = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::find(out.begin(), out.end(), i) != out.end()) continue;
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t s : out) d = std::min(d, subsel::squared_distance(a[i], a[s]));
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace oracle

#endif
