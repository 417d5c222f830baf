#ifndef SUBSEL_LAZY_GREEDY_HPP
#define SUBSEL_LAZY_GREEDY_HPP

#include "subsel/core.hpp"
#include "subsel/hypervolume.hpp"

namespace subsel {

/// Marginal-gain view of a set function being maximized greedily.
class GainOracle {
 public:
  virtual ~GainOracle() = default;
  /// Number of candidates.
  virtual std::size_t size() const = 0;
  /// Gain of adding candidate i to the current subset.
  virtual double gain(std::size_t i) = 0;
  /// Adds candidate i to the current subset.
  virtual void commit(std::size_t i) = 0;
};

struct GreedyGainEntry {
  std::size_t index = 0;
  double gain = 0;
  std::size_t stamp = 0;  // greedy step at which `gain` was computed
};

/**
 * Greedy maximization with lazily re-evaluated gains.
 *
 * Cached gains are upper bounds for a submodular objective, so a candidate
 * whose gain is current for this step and tops the heap is the exact argmax.
 * Ties go to the smallest index; the output therefore equals plain greedy
 * for the same oracle. The deadline is polled after every gain evaluation.
 */
std::vector<std::size_t> lazy_greedy(GainOracle& oracle, std::size_t k,
                                     const Deadline& deadline = Deadline::never());

/// Exclusive hypervolume against the selected points.
class HypervolumeGain final : public GainOracle {
 public:
  HypervolumeGain(const PointSet& candidates, Vector ref);
  std::size_t size() const override { return candidates_.size(); }
  double gain(std::size_t i) override { return hv_exclusive(candidates_[i], selected_, ref_); }
  void commit(std::size_t i) override { selected_.push_back(candidates_[i]); }

 private:
  const PointSet& candidates_;
  Vector ref_;
  PointSet selected_;
};

/// Ray-based approximation of the exclusive hypervolume.
class ApproxHypervolumeGain final : public GainOracle {
 public:
  ApproxHypervolumeGain(const PointSet& candidates, Vector ref, DirectionVectorSet dirs);
  std::size_t size() const override { return candidates_.size(); }
  double gain(std::size_t i) override {
    return hv_exclusive_approx(candidates_[i], selected_, ref_, dirs_);
  }
  void commit(std::size_t i) override { selected_.push_back(candidates_[i]); }

 private:
  const PointSet& candidates_;
  Vector ref_;
  DirectionVectorSet dirs_;
  PointSet selected_;
};

/**
 * Decrease of the IGD (or IGD+) sum against a reference set.
 *
 * Each reference point starts at an upper bound u_r of its distance to any
 * candidate (from the candidates' bounding box), which makes the objective
 * sum_r (u_r - min(u_r, d(S, r))) monotone submodular with f(empty) = 0
 * while leaving the greedy choices equal to IGD minimization.
 */
class IgdGain final : public GainOracle {
 public:
  enum class Distance { Euclidean, Plus };

  IgdGain(const PointSet& candidates, const PointSet& reference, Distance kind);
  std::size_t size() const override { return candidates_.size(); }
  double gain(std::size_t i) override;
  void commit(std::size_t i) override;

  /// Current objective value sum_r (u_r - cur_r).
  double objective() const;

 private:
  double dist(Point s, Point r) const;

  const PointSet& candidates_;
  const PointSet& reference_;
  Distance kind_;
  Vector upper_;
  Vector current_;
};

}  // namespace subsel

#endif
