#include "subsel/lazy_greedy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "subsel/indicators.hpp"

namespace subsel {

namespace {

struct HeapOrder {
  bool operator()(const GreedyGainEntry& a, const GreedyGainEntry& b) const noexcept {
    // priority_queue pops the "largest": highest gain, then smallest index.
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.index > b.index;
  }
};

}  // namespace

std::vector<std::size_t> lazy_greedy(GainOracle& oracle, std::size_t k, const Deadline& deadline) {
  const std::size_t n = oracle.size();
  if (k > n) throw InvalidInput("subset size k exceeds the number of candidates");
  deadline.check();

  std::vector<GreedyGainEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n && k > 0; ++i) {
    entries.push_back({i, oracle.gain(i), 0});
    deadline.check();
  }
  std::priority_queue<GreedyGainEntry, std::vector<GreedyGainEntry>, HeapOrder> heap(HeapOrder{},
                                                                                     std::move(entries));
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    for (;;) {
      GreedyGainEntry top = heap.top();
      heap.pop();
      if (top.stamp == step) {
        chosen.push_back(top.index);
        oracle.commit(top.index);
        break;
      }
      top.gain = oracle.gain(top.index);
      top.stamp = step;
      heap.push(top);
      deadline.check();
    }
  }
  return chosen;
}

HypervolumeGain::HypervolumeGain(const PointSet& candidates, Vector ref)
    : candidates_(candidates), ref_(std::move(ref)), selected_(candidates.dim()) {
  if (ref_.size() != candidates.dim()) throw InvalidInput("reference point dimension mismatch");
}

ApproxHypervolumeGain::ApproxHypervolumeGain(const PointSet& candidates, Vector ref,
                                             DirectionVectorSet dirs)
    : candidates_(candidates), ref_(std::move(ref)), dirs_(std::move(dirs)), selected_(candidates.dim()) {
  if (ref_.size() != candidates.dim() || dirs_.dim() != candidates.dim())
    throw InvalidInput("reference point or direction dimension mismatch");
}

IgdGain::IgdGain(const PointSet& candidates, const PointSet& reference, Distance kind)
    : candidates_(candidates), reference_(reference), kind_(kind) {
  if (candidates.empty() || reference.empty()) throw InvalidInput("IGD gain needs non-empty sets");
  if (candidates.dim() != reference.dim()) throw InvalidInput("candidate/reference dimension mismatch");
  auto box = ideal_nadir(candidates);
  const std::size_t m = candidates.dim();
  upper_.resize(reference.size());
  Vector far(m);
  for (std::size_t r = 0; r < reference.size(); ++r) {
    auto q = reference[r];
    // Farthest corner of the candidates' bounding box bounds every d(s, r).
    for (std::size_t j = 0; j < m; ++j) {
      if (kind == Distance::Euclidean)
        far[j] = (q[j] - box.ideal[j] >= box.nadir[j] - q[j]) ? box.ideal[j] : box.nadir[j];
      else
        far[j] = box.nadir[j];
    }
    upper_[r] = dist(far, q);
  }
  current_ = upper_;
}

double IgdGain::dist(Point s, Point r) const {
  return kind_ == Distance::Euclidean ? distance(s, r) : igd_plus_distance(s, r);
}

double IgdGain::gain(std::size_t i) {
  auto s = candidates_[i];
  double g = 0;
  for (std::size_t r = 0; r < reference_.size(); ++r) {
    double d = dist(s, reference_[r]);
    if (d < current_[r]) g += current_[r] - d;
  }
  return g;
}

void IgdGain::commit(std::size_t i) {
  auto s = candidates_[i];
  for (std::size_t r = 0; r < reference_.size(); ++r) current_[r] = std::min(current_[r], dist(s, reference_[r]));
}

double IgdGain::objective() const {
  double f = 0;
  for (std::size_t r = 0; r < reference_.size(); ++r) f += upper_[r] - current_[r];
  return f;
}

}  // namespace subsel
