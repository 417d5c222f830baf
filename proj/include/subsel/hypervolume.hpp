#ifndef SUBSEL_HYPERVOLUME_HPP
#define SUBSEL_HYPERVOLUME_HPP

#include "subsel/core.hpp"

namespace subsel {

/**
 * Exact hypervolume by the WFG recursion.
 *
 * Points that are not strictly better than `ref` in every objective are
 * clipped out (they contribute nothing). At each level the points are
 * sorted by their first objective, worst first; point i then owns a slab
 * of height ref_0 - p_0 whose cross-section is its (m-1)-dimensional
 * exclusive volume against the limit set of the later points. Two
 * objectives are handled by a linear sweep.
 */
double hv_exact(const PointSet& s, Point ref);

/// hv(T ∪ {p}) - hv(T), computed as box(p) minus hv of the limit set of T under p.
double hv_exclusive(Point p, const PointSet& others, Point ref);

/// Hypervolume lost when point i is removed from s.
double hv_contribution(std::size_t i, const PointSet& s, Point ref);

/// Unit direction vectors in the positive orthant (count >= 1).
class DirectionVectorSet {
 public:
  DirectionVectorSet(std::size_t m, std::vector<double> data);

  std::size_t dim() const noexcept { return m_; }
  std::size_t size() const noexcept { return data_.size() / m_; }
  Point operator[](std::size_t i) const noexcept { return {data_.data() + i * m_, m_}; }
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t m_;
  std::vector<double> data_;
};

/// Normalized absolute standard-normal draws: uniform on the orthant of the unit sphere.
DirectionVectorSet generate_directions(std::size_t m, std::size_t count, Seed seed);

/**
 * R2-style estimate of hv(T ∪ {p}) - hv(T).
 *
 * For every direction the ray p + t*dir is followed until it enters the
 * region dominated by some q in T (t_q = max_j (q_j - p_j) / dir_j) or leaves
 * the reference box; the estimate is c_m * mean(max(len, 0)^m) where c_m is
 * the volume of the unit ball's positive orthant. A point weakly dominated
 * by a member of T gets 0.
 */
double hv_exclusive_approx(Point p, const PointSet& others, Point ref,
                           const DirectionVectorSet& dirs);

double hv_contribution_approx(std::size_t i, const PointSet& s, Point ref,
                              const DirectionVectorSet& dirs);

/// Length of the unobstructed ray from p along dir (may be <= 0).
double ray_length(Point p, const PointSet& others, Point ref, Point dir);

}  // namespace subsel

#endif
