#include <cmath>
#include <limits>

#include "subsel/selectors.hpp"

namespace subsel {

double perpendicular_distance(Point s, Point v) noexcept {
  double sv = 0, vv = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    sv += s[j] * v[j];
    vv += v[j] * v[j];
  }
  double t = sv / vv;
  double r2 = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    double r = s[j] - t * v[j];
    r2 += r * r;
  }
  return std::sqrt(r2);
}

double angle_distance(Point s, Point v) noexcept {
  double sv = 0, ss = 0, vv = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    sv += s[j] * v[j];
    ss += s[j] * s[j];
    vv += v[j] * v[j];
  }
  // A zero vector has no direction; it ranks behind every real candidate.
  if (ss == 0) return std::numeric_limits<double>::infinity();
  return 1.0 - sv / std::sqrt(ss * vv);
}

std::vector<std::size_t> select_rvss(const PointSet& a, const ReferenceVectorSet& vectors, RvssDistance kind,
                                     bool translate, const Deadline& deadline) {
  if (a.empty()) throw InvalidInput("empty candidate set");
  const PointSet& v = vectors.vectors;
  if (v.dim() != a.dim()) throw InvalidInput("reference vectors and candidates differ in dimension");
  const std::size_t n = a.size(), m = a.dim(), k = v.size();
  deadline.check();

  Vector origin(m, 0.0);
  if (translate) origin = ideal_nadir(a).ideal;

  // Screening values come from one dot product per pair; only candidates
  // within rounding distance of the running best get the exact formula.
  std::vector<double> vt(m * k), inv_vv(k), inv_norm_v(k);
  for (std::size_t r = 0; r < k; ++r) {
    double vv = 0;
    for (std::size_t j = 0; j < m; ++j) {
      vt[j * k + r] = v[r][j];
      vv += v[r][j] * v[r][j];
    }
    inv_vv[r] = 1.0 / vv;
    inv_norm_v[r] = 1.0 / std::sqrt(vv);
  }

  std::vector<double> best(k, std::numeric_limits<double>::infinity());
  std::vector<double> screen_best(k, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> arg(k, 0);
  std::vector<double> sv(k);
  Vector s(m);
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & 0xffff) == 0) deadline.check();
    auto p = a[i];
    double ss = 0;
    for (std::size_t j = 0; j < m; ++j) {
      s[j] = p[j] - origin[j];
      ss += s[j] * s[j];
    }
    std::fill(sv.begin(), sv.end(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      const double sj = s[j];
      const double* col = vt.data() + j * k;
      for (std::size_t r = 0; r < k; ++r) sv[r] += sj * col[r];
    }

    if (kind == RvssDistance::Perpendicular) {
      const double tol = 1e-10 * ss;
      for (std::size_t r = 0; r < k; ++r) {
        double approx = ss - sv[r] * sv[r] * inv_vv[r];
        if (approx - tol > screen_best[r]) continue;
        double d = perpendicular_distance(s, v[r]);
        if (d < best[r]) {
          best[r] = d;
          arg[r] = i;
          screen_best[r] = d * d + tol;
        }
      }
    } else {
      if (ss == 0) continue;
      const double inv_s = 1.0 / std::sqrt(ss);
      for (std::size_t r = 0; r < k; ++r) {
        double approx = 1.0 - sv[r] * inv_s * inv_norm_v[r];
        if (approx - 1e-12 > screen_best[r]) continue;
        double d = angle_distance(s, v[r]);
        if (d < best[r]) {
          best[r] = d;
          arg[r] = i;
          screen_best[r] = d + 1e-12;
        }
      }
    }
  }
  return arg;
}

}  // namespace subsel
