#include "subsel/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subsel {

namespace {

void check_finite(std::span<const double> values) {
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidInput("point set entries must be finite");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

PointSet::PointSet(std::size_t m, std::string label) : m_(m), label_(std::move(label)) {
  if (m < 2) throw InvalidInput("point sets need at least 2 objectives");
}

PointSet::PointSet(std::size_t m, std::vector<double> data, std::string label)
    : m_(m), data_(std::move(data)), label_(std::move(label)) {
  if (m < 2) throw InvalidInput("point sets need at least 2 objectives");
  if (data_.size() % m != 0) throw InvalidInput("point data is not a whole number of rows");
  check_finite(data_);
}

PointSet PointSet::from_rows(const std::vector<Vector>& rows, std::string label) {
  if (rows.empty()) throw InvalidInput("cannot infer dimension from zero rows");
  PointSet out(rows.front().size(), std::move(label));
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r);
  return out;
}

void PointSet::push_back(Point p) {
  if (p.size() != m_)
    throw InvalidInput("row has " + std::to_string(p.size()) + " entries, expected " +
                       std::to_string(m_));
  check_finite(p);
  data_.insert(data_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(m_, label_);
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw InvalidInput("subset index out of range");
    auto row = (*this)[i];
    out.data_.insert(out.data_.end(), row.begin(), row.end());
  }
  return out;
}

bool weakly_dominates(Point a, Point b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dominates(Point a, Point b) {
  if (a.size() != b.size()) throw InvalidInput("dominance check on vectors of different length");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> nondominated_indices(const PointSet& a) {
  // A dominator precedes its victim in lexicographic order, so each point
  // only has to be checked against the survivors seen so far.
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    auto p = a[i], q = a[j];
    return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
  });

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : kept) {
      if (dominates(a[j], a[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

PointSet nondominated_filter(const PointSet& a) {
  auto idx = nondominated_indices(a);
  return a.subset(idx);
}

IdealNadir ideal_nadir(const PointSet& a) {
  if (a.empty()) throw InvalidInput("ideal/nadir of an empty set");
  auto first = a[0];
  IdealNadir out{Vector(first.begin(), first.end()), Vector(first.begin(), first.end())};
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto p = a[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      out.ideal[j] = std::min(out.ideal[j], p[j]);
      out.nadir[j] = std::max(out.nadir[j], p[j]);
    }
  }
  return out;
}

Vector reference_point(Point nadir, double factor) {
  if (!(factor > 0)) throw InvalidInput("reference point factor must be positive");
  Vector r(nadir.begin(), nadir.end());
  for (double& v : r) v *= factor;
  return r;
}

double squared_distance(Point a, Point b) noexcept {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(Point a, Point b) noexcept { return std::sqrt(squared_distance(a, b)); }

Seed Seed::derive(std::string_view stream) const noexcept {
  return Seed(splitmix64(value_ ^ fnv1a64(stream)));
}

Deadline Deadline::after(double seconds) {
  if (!(seconds >= 0)) throw InvalidInput("time limit must be non-negative");
  if (!std::isfinite(seconds) || seconds > 1e9) return never();
  auto span = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  return Deadline(Clock::now() + span);
}

}  // namespace subsel
