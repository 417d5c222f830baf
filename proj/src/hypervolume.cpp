#include "subsel/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace subsel {

namespace {

// Rows of width d in a flat buffer.
struct Rows {
  std::vector<double> data;
  std::size_t d = 0;

  std::size_t size() const noexcept { return data.size() / d; }
  const double* row(std::size_t i) const noexcept { return data.data() + i * d; }
};

double box_volume(const double* p, const double* ref, std::size_t d) noexcept {
  double v = 1;
  for (std::size_t j = 0; j < d; ++j) v *= ref[j] - p[j];
  return v;
}

bool strictly_inside(const double* p, const double* ref, std::size_t d) noexcept {
  for (std::size_t j = 0; j < d; ++j)
    if (!(p[j] < ref[j])) return false;
  return true;
}

bool weakly_dominates_raw(const double* a, const double* b, std::size_t d) noexcept {
  for (std::size_t j = 0; j < d; ++j)
    if (a[j] > b[j]) return false;
  return true;
}

// Drops every row weakly dominated by another row (one copy of duplicates survives).
void prune_dominated(Rows& rows) {
  const std::size_t n = rows.size(), d = rows.d;
  if (n < 2) return;
  std::vector<char> dead(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dead[j]) continue;
      if (weakly_dominates_raw(rows.row(j), rows.row(i), d)) {
        dead[i] = 1;
        break;
      }
    }
  }
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dead[i]) continue;
    if (w != i) std::copy_n(rows.row(i), d, rows.data.data() + w * d);
    ++w;
  }
  rows.data.resize(w * d);
}

double sweep_2d(const Rows& rows, const double* ref) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* p = rows.row(a);
    const double* q = rows.row(b);
    return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
  });
  double area = 0;
  double ceiling = ref[1];
  for (std::size_t i : order) {
    const double* p = rows.row(i);
    if (p[1] < ceiling) {
      area += (ref[0] - p[0]) * (ceiling - p[1]);
      ceiling = p[1];
    }
  }
  return area;
}

// Rows must all be strictly inside ref.
double wfg(const Rows& rows, const double* ref) {
  const std::size_t n = rows.size(), d = rows.d;
  if (n == 0) return 0;
  if (n == 1) return box_volume(rows.row(0), ref, d);
  if (d == 2) return sweep_2d(rows, ref);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* p = rows.row(a);
    const double* q = rows.row(b);
    if (p[0] != q[0]) return p[0] > q[0];
    return std::lexicographical_compare(q + 1, q + d, p + 1, p + d);
  });

  const std::size_t dd = d - 1;
  Rows limit;
  limit.d = dd;
  double total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double* p = rows.row(order[k]);
    double slice = box_volume(p + 1, ref + 1, dd);
    if (k + 1 < n) {
      limit.data.clear();
      for (std::size_t l = k + 1; l < n; ++l) {
        const double* q = rows.row(order[l]);
        for (std::size_t j = 1; j < d; ++j) limit.data.push_back(std::max(p[j], q[j]));
      }
      prune_dominated(limit);
      slice -= wfg(limit, ref + 1);
    }
    total += (ref[0] - p[0]) * slice;
  }
  return total;
}

Rows inside_rows(const PointSet& s, Point ref) {
  Rows rows;
  rows.d = s.dim();
  rows.data.reserve(s.data().size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto p = s[i];
    if (strictly_inside(p.data(), ref.data(), rows.d)) rows.data.insert(rows.data.end(), p.begin(), p.end());
  }
  return rows;
}

void check_ref(const PointSet& s, Point ref) {
  if (!s.empty() && ref.size() != s.dim())
    throw InvalidInput("reference point dimension does not match the point set");
}

double orthant_ball_constant(std::size_t m) {
  double md = static_cast<double>(m);
  return std::pow(std::numbers::pi, md / 2) / (std::pow(2.0, md) * std::tgamma(md / 2 + 1));
}

}  // namespace

double hv_exact(const PointSet& s, Point ref) {
  check_ref(s, ref);
  Rows rows = inside_rows(s, ref);
  prune_dominated(rows);
  return wfg(rows, ref.data());
}

double hv_exclusive(Point p, const PointSet& others, Point ref) {
  check_ref(others, ref);
  const std::size_t d = p.size();
  if (ref.size() != d) throw InvalidInput("reference point dimension does not match the point");
  if (!strictly_inside(p.data(), ref.data(), d)) return 0;

  Rows limit;
  limit.d = d;
  limit.data.reserve(others.data().size());
  for (std::size_t i = 0; i < others.size(); ++i) {
    auto q = others[i];
    for (std::size_t j = 0; j < d; ++j) limit.data.push_back(std::max(p[j], q[j]));
    // A row clipped at the reference bound covers nothing.
    if (!strictly_inside(limit.data.data() + limit.data.size() - d, ref.data(), d))
      limit.data.resize(limit.data.size() - d);
  }
  prune_dominated(limit);
  double excl = box_volume(p.data(), ref.data(), d) - wfg(limit, ref.data());
  return std::max(excl, 0.0);
}

double hv_contribution(std::size_t i, const PointSet& s, Point ref) {
  if (i >= s.size()) throw InvalidInput("contribution index out of range");
  std::vector<std::size_t> rest;
  rest.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) rest.push_back(j);
  return hv_exclusive(s[i], s.subset(rest), ref);
}

DirectionVectorSet::DirectionVectorSet(std::size_t m, std::vector<double> data)
    : m_(m), data_(std::move(data)) {
  if (m == 0 || data_.empty() || data_.size() % m != 0)
    throw InvalidInput("direction set must hold at least one full vector");
}

DirectionVectorSet generate_directions(std::size_t m, std::size_t count, Seed seed) {
  if (m < 2) throw InvalidInput("directions need m >= 2");
  if (count < 1) throw InvalidInput("direction count must be >= 1");
  auto engine = seed.derive("directions").engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(count * m);
  for (std::size_t i = 0; i < count; ++i) {
    double* v = data.data() + i * m;
    double norm2 = 0;
    do {
      norm2 = 0;
      for (std::size_t j = 0; j < m; ++j) {
        v[j] = std::abs(normal(engine));
        norm2 += v[j] * v[j];
      }
    } while (!(norm2 > 0));
    double norm = std::sqrt(norm2);
    for (std::size_t j = 0; j < m; ++j) v[j] /= norm;
  }
  return DirectionVectorSet(m, std::move(data));
}

double ray_length(Point p, const PointSet& others, Point ref, Point dir) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t d = p.size();
  double len = inf;
  for (std::size_t j = 0; j < d; ++j) {
    double t = dir[j] > 0 ? (ref[j] - p[j]) / dir[j] : (ref[j] > p[j] ? inf : -inf);
    len = std::min(len, t);
  }
  for (std::size_t i = 0; i < others.size(); ++i) {
    auto q = others[i];
    // q dominates p + t*dir once t reaches max_j (q_j - p_j) / dir_j.
    double enter = -inf;
    for (std::size_t j = 0; j < d && enter < len; ++j) {
      double diff = q[j] - p[j];
      double t = dir[j] > 0 ? diff / dir[j] : (diff > 0 ? inf : -inf);
      enter = std::max(enter, t);
    }
    len = std::min(len, enter);
  }
  return len;
}

double hv_exclusive_approx(Point p, const PointSet& others, Point ref,
                           const DirectionVectorSet& dirs) {
  const std::size_t d = p.size();
  if (ref.size() != d || dirs.dim() != d || (!others.empty() && others.dim() != d))
    throw InvalidInput("dimension mismatch in approximate contribution");
  double sum = 0;
  for (std::size_t l = 0; l < dirs.size(); ++l) {
    double len = ray_length(p, others, ref, dirs[l]);
    if (len > 0) sum += std::pow(len, static_cast<double>(d));
  }
  return orthant_ball_constant(d) * sum / static_cast<double>(dirs.size());
}

double hv_contribution_approx(std::size_t i, const PointSet& s, Point ref,
                              const DirectionVectorSet& dirs) {
  if (i >= s.size()) throw InvalidInput("contribution index out of range");
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) rest.push_back(j);
  return hv_exclusive_approx(s[i], s.subset(rest), ref, dirs);
}

}  // namespace subsel
