#ifndef SUBSEL_KDTREE_HPP
#define SUBSEL_KDTREE_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "subsel/core.hpp"

namespace subsel {

/**
 * Static k-d tree over a point set, for exact nearest-point queries.
 *
 * The query is generic: `dist(i)` scores stored point i against the query
 * and `bound(lo, hi)` must return a lower bound of `dist` over the box
 * [lo, hi]. Ties are resolved towards the smallest stored index, so
 * results match a brute-force scan exactly.
 */
class KdTree {
 public:
  explicit KdTree(const PointSet& points, std::size_t leaf_size = 8);

  std::size_t size() const noexcept { return points_.size(); }
  const PointSet& points() const noexcept { return points_; }

  struct Hit {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    double value = std::numeric_limits<double>::infinity();
  };

  template <class Dist, class Bound>
  Hit nearest_by(Dist&& dist, Bound&& bound) const {
    Hit best;
    if (!nodes_.empty()) search(0, dist, bound, best);
    return best;
  }

  /// Nearest stored point by squared Euclidean distance.
  Hit nearest(Point q) const;

 private:
  struct Node {
    std::uint32_t begin = 0, end = 0;  // range in order_
    std::int32_t left = -1, right = -1;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size);
  const double* lo(std::size_t node) const noexcept { return boxes_.data() + node * 2 * m_; }
  const double* hi(std::size_t node) const noexcept { return boxes_.data() + node * 2 * m_ + m_; }

  template <class Dist, class Bound>
  void search(std::int32_t node, Dist& dist, Bound& bound, Hit& best) const {
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    if (nd.left < 0) {
      for (std::uint32_t k = nd.begin; k < nd.end; ++k) {
        std::size_t i = order_[k];
        double v = dist(i);
        if (v < best.value || (v == best.value && i < best.index)) best = {i, v};
      }
      return;
    }
    double bl = bound(lo(static_cast<std::size_t>(nd.left)), hi(static_cast<std::size_t>(nd.left)));
    double br = bound(lo(static_cast<std::size_t>(nd.right)), hi(static_cast<std::size_t>(nd.right)));
    std::int32_t first = nd.left, second = nd.right;
    if (br < bl) {
      std::swap(first, second);
      std::swap(bl, br);
    }
    if (bl <= best.value) search(first, dist, bound, best);
    if (br <= best.value) search(second, dist, bound, best);
  }

  PointSet points_;
  std::size_t m_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  std::vector<double> boxes_;
};

}  // namespace subsel

#endif
