#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "subsel/selectors.hpp"

namespace subsel {

namespace {

// k indices with pairwise different coordinates, drawn uniformly.
std::vector<std::size_t> distinct_initial(const PointSet& a, std::size_t k, Seed seed) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
  auto engine = seed.derive("css-init").engine();
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::set<Vector> seen;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < n && out.size() < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(perm[i], perm[pick(engine)]);
    auto p = a[perm[i]];
    if (seen.emplace(p.begin(), p.end()).second) out.push_back(perm[i]);
  }
  if (out.size() < k) throw InvalidInput("fewer distinct candidates than k");
  return out;
}

// Nearest centre per point (smallest centre index on ties); returns whether anything moved.
bool assign(const PointSet& a, const std::vector<double>& centres, std::size_t k,
            std::vector<std::size_t>& label, std::vector<double>& d2) {
  const std::size_t n = a.size(), m = a.dim();
  bool changed = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double* p = a[i].data();
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      const double* q = centres.data() + c * m;
      double s = 0;
      for (std::size_t j = 0; j < m; ++j) {
        double d = p[j] - q[j];
        s += d * d;
      }
      if (s < best_d) {
        best_d = s;
        best = c;
      }
    }
    if (label[i] != best) changed = true;
    label[i] = best;
    d2[i] = best_d;
  }
  return changed;
}

/**
 * Gives every empty cluster the point that is worst served by its own
 * centre (largest distance, smallest index on ties), taken from a cluster
 * that keeps at least one member. Returns the re-seeded (cluster, point) pairs.
 */
std::vector<std::pair<std::size_t, std::size_t>> reseed_empty(std::size_t k, std::vector<std::size_t>& label,
                                                              std::vector<double>& d2) {
  std::vector<std::size_t> size(k, 0);
  for (std::size_t l : label) ++size[l];
  std::vector<std::pair<std::size_t, std::size_t>> moved;
  for (std::size_t c = 0; c < k; ++c) {
    if (size[c] != 0) continue;
    std::size_t pick = label.size();
    double worst = -1;
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (size[label[i]] > 1 && d2[i] > worst) {
        worst = d2[i];
        pick = i;
      }
    }
    if (pick == label.size()) throw InvalidInput("fewer distinct candidates than k");
    --size[label[pick]];
    label[pick] = c;
    d2[pick] = 0;
    size[c] = 1;
    moved.emplace_back(c, pick);
  }
  return moved;
}

std::vector<std::vector<std::size_t>> members_of(std::size_t k, const std::vector<std::size_t>& label) {
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < label.size(); ++i) members[label[i]].push_back(i);
  return members;
}

// Member with the least total Euclidean distance to the other members.
std::size_t most_central(const PointSet& a, const std::vector<std::size_t>& members) {
  std::size_t best = members.front();
  double best_sum = std::numeric_limits<double>::infinity();
  for (std::size_t i : members) {
    double sum = 0;
    for (std::size_t j : members) {
      sum += distance(a[i], a[j]);
      if (sum > best_sum) break;
    }
    if (sum < best_sum) {
      best_sum = sum;
      best = i;
    }
  }
  return best;
}

}  // namespace

std::vector<std::size_t> select_css_means(const PointSet& a, std::size_t k, std::size_t max_iter, Seed seed,
                                          const Deadline& deadline) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
  deadline.check();
  if (k == 0) return {};
  const std::size_t n = a.size(), m = a.dim();
  std::vector<std::size_t> init = distinct_initial(a, k, seed);

  std::vector<double> centres(k * m);
  for (std::size_t c = 0; c < k; ++c) std::copy_n(a[init[c]].data(), m, centres.data() + c * m);

  std::vector<std::size_t> label(n, k);
  std::vector<double> d2(n, 0);
  for (std::size_t it = 0; it < std::max<std::size_t>(max_iter, 1); ++it) {
    deadline.check();
    bool changed = assign(a, centres, k, label, d2);
    changed |= !reseed_empty(k, label, d2).empty();
    if (!changed) break;
    if (it + 1 == std::max<std::size_t>(max_iter, 1)) break;

    std::fill(centres.begin(), centres.end(), 0.0);
    std::vector<std::size_t> size(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++size[label[i]];
      auto p = a[i];
      for (std::size_t j = 0; j < m; ++j) centres[label[i] * m + j] += p[j];
    }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t j = 0; j < m; ++j) centres[c * m + j] /= static_cast<double>(size[c]);
  }

  auto members = members_of(k, label);
  std::vector<std::size_t> out(k);
  for (std::size_t c = 0; c < k; ++c) {
    deadline.check();
    out[c] = most_central(a, members[c]);
  }
  return out;
}

std::vector<std::size_t> select_css_medoids(const PointSet& a, std::size_t k, std::size_t max_iter,
                                            Seed seed, const Deadline& deadline) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
  deadline.check();
  if (k == 0) return {};
  const std::size_t n = a.size(), m = a.dim();
  std::vector<std::size_t> medoids = distinct_initial(a, k, seed);

  std::vector<double> centres(k * m);
  std::vector<std::size_t> label(n, k);
  std::vector<double> d2(n, 0);
  for (std::size_t it = 0; it < max_iter; ++it) {
    deadline.check();
    for (std::size_t c = 0; c < k; ++c) std::copy_n(a[medoids[c]].data(), m, centres.data() + c * m);
    assign(a, centres, k, label, d2);
    reseed_empty(k, label, d2);

    auto members = members_of(k, label);
    bool moved = false;
    for (std::size_t c = 0; c < k; ++c) {
      deadline.check();
      std::size_t best = most_central(a, members[c]);
      if (best != medoids[c]) {
        medoids[c] = best;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return medoids;
}

}  // namespace subsel
