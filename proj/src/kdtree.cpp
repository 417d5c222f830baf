#include "subsel/kdtree.hpp"

#include <algorithm>
#include <numeric>

namespace subsel {

KdTree::KdTree(const PointSet& points, std::size_t leaf_size) : points_(points), m_(points.dim()) {
  if (leaf_size == 0) leaf_size = 1;
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), std::uint32_t{0});
  if (!order_.empty()) build(0, static_cast<std::uint32_t>(order_.size()), leaf_size);
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size) {
  auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({begin, end, -1, -1});
  boxes_.resize(nodes_.size() * 2 * m_);

  double* l = boxes_.data() + static_cast<std::size_t>(id) * 2 * m_;
  double* h = l + m_;
  auto first = points_[order_[begin]];
  std::copy(first.begin(), first.end(), l);
  std::copy(first.begin(), first.end(), h);
  for (std::uint32_t k = begin + 1; k < end; ++k) {
    auto p = points_[order_[k]];
    for (std::size_t j = 0; j < m_; ++j) {
      l[j] = std::min(l[j], p[j]);
      h[j] = std::max(h[j], p[j]);
    }
  }
  if (end - begin <= leaf_size) return id;

  std::size_t axis = 0;
  double widest = -1;
  for (std::size_t j = 0; j < m_; ++j) {
    if (h[j] - l[j] > widest) {
      widest = h[j] - l[j];
      axis = j;
    }
  }
  if (widest <= 0) return id;  // all points identical

  std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) { return points_[a][axis] < points_[b][axis]; });
  std::int32_t left = build(begin, mid, leaf_size);
  std::int32_t right = build(mid, end, leaf_size);
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

KdTree::Hit KdTree::nearest(Point q) const {
  return nearest_by(
      [&](std::size_t i) { return squared_distance(points_[i], q); },
      [&](const double* l, const double* h) {
        double s = 0;
        for (std::size_t j = 0; j < m_; ++j) {
          double d = std::max({l[j] - q[j], 0.0, q[j] - h[j]});
          s += d * d;
        }
        return s;
      });
}

}  // namespace subsel
