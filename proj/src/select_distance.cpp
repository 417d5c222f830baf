#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "subsel/indicators.hpp"
#include "subsel/kdtree.hpp"
#include "subsel/selectors.hpp"

namespace subsel {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_k(const PointSet& a, std::size_t k) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
}

}  // namespace

std::size_t dss_initial_point(const PointSet& a) {
  if (a.empty()) throw InvalidInput("empty candidate set");
  std::size_t best = 0;
  double best_sum = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0;
    for (double v : a[i]) s += v;
    if (s > best_sum) {
      best_sum = s;
      best = i;
    }
  }
  return best;
}

std::vector<std::size_t> farthest_point_traversal(const PointSet& a, std::size_t k, std::size_t first,
                                                  const Deadline& deadline) {
  check_k(a, k);
  if (k == 0) return {};
  if (first >= a.size()) throw InvalidInput("initial point out of range");
  const std::size_t n = a.size(), m = a.dim();
  const double* data = a.data().data();

  std::vector<double> near(n, std::numeric_limits<double>::infinity());
  std::vector<char> taken(n, 0);
  std::vector<std::size_t> chosen{first};
  chosen.reserve(k);
  taken[first] = 1;

  std::size_t last = first;
  while (chosen.size() < k) {
    deadline.check();
    const double* p = data + last * m;
    std::size_t arg = kNone;
    double far = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const double* q = data + i * m;
      double s = 0;
      for (std::size_t j = 0; j < m; ++j) {
        double d = q[j] - p[j];
        s += d * d;
      }
      double v = std::min(near[i], s);
      near[i] = v;
      if (!taken[i] && v > far) {
        far = v;
        arg = i;
      }
    }
    taken[arg] = 1;
    chosen.push_back(arg);
    last = arg;
  }
  return chosen;
}

std::vector<std::size_t> select_dss(const PointSet& a, std::size_t k, const Deadline& deadline) {
  check_k(a, k);
  if (k == 0) return {};
  return farthest_point_traversal(a, k, dss_initial_point(a), deadline);
}

std::vector<std::size_t> idss_initial_subset(std::size_t n, std::size_t k, Seed seed) {
  if (k > n) throw InvalidInput("subset size k exceeds the number of candidates");
  auto engine = seed.derive("idss-init").engine();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(perm[i], perm[pick(engine)]);
  }
  perm.resize(k);
  return perm;
}

namespace {

/**
 * Incremental state for IDSS.
 *
 * The subset lives in k slots with a full slot-to-slot distance table.
 * Every non-member candidate keeps a heap key that upper-bounds its squared
 * distance to the subset, the member it was last measured against, and the
 * number of insertions at which that measurement was known to be exact.
 * Insertions never invalidate keys (distances only shrink); a removal hands
 * the removed member's cell to its nearest remaining member as an
 * unverified bound. The farthest query pops keys and refreshes stale ones
 * until the top entry is exact, as in lazy greedy.
 */
class IdssState {
 public:
  IdssState(const PointSet& a, std::vector<std::size_t> initial)
      : a_(a), n_(a.size()), k_(initial.size()), slot_pt_(std::move(initial)) {
    member_slot_.assign(n_, kNone);
    slot_id_.resize(k_);
    for (std::size_t s = 0; s < k_; ++s) {
      member_slot_[slot_pt_[s]] = s;
      slot_id_[s] = new_member(slot_pt_[s]);
    }
    build_slot_table();

    near_.assign(n_, kNone);
    dist2_.assign(n_, 0);
    exact_at_.assign(n_, kNone);
    version_.assign(n_, 0);

    KdTree tree(a_.subset(slot_pt_));
    std::vector<Entry> entries;
    entries.reserve(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      if (member_slot_[c] != kNone) continue;
      auto hit = tree.nearest(a_[c]);
      std::size_t id = slot_id_[hit.index];
      near_[c] = id;
      dist2_[c] = hit.value;
      exact_at_[c] = 0;
      cells_[id].push_back(c);
      entries.push_back({hit.value, c, 0});
    }
    heap_ = Heap(EntryOrder{}, std::move(entries));
  }

  const std::vector<std::size_t>& slots() const noexcept { return slot_pt_; }

  /// Squared uniformity level of the current subset.
  double min_slot_d2() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < k_; ++s) best = std::min(best, slot_nnd_[s]);
    return best;
  }

  /// Closest pair as (lower candidate index, higher candidate index).
  std::pair<std::size_t, std::size_t> closest_pair() const {
    std::pair<std::size_t, std::size_t> best{kNone, kNone};
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < k_; ++s) {
      std::size_t p = slot_pt_[s], q = slot_pt_[slot_nn_[s]];
      std::pair<std::size_t, std::size_t> pr{std::min(p, q), std::max(p, q)};
      if (slot_nnd_[s] < best_d || (slot_nnd_[s] == best_d && pr < best)) {
        best_d = slot_nnd_[s];
        best = pr;
      }
    }
    return best;
  }

  /// Removes the member in slot s; the slot stays empty until fill().
  void vacate(std::size_t s) {
    std::size_t x = slot_pt_[s];
    std::size_t partner_slot = slot_nn_[s];
    std::size_t partner_id = slot_id_[partner_slot];
    std::size_t xid = slot_id_[s];

    alive_[xid] = 0;
    member_slot_[x] = kNone;
    empty_slot_ = s;

    // Remaining members by distance from x; for c in x's cell,
    // d(c, t) >= d(x, t) - d(c, x) ends the scan early.
    ring_.clear();
    for (std::size_t t = 0; t < k_; ++t)
      if (t != s) ring_.push_back({std::sqrt(table_[s * k_ + t]), t});
    std::sort(ring_.begin(), ring_.end());
    for (std::size_t c : cells_[xid]) {
      if (near_[c] != xid || member_slot_[c] != kNone) continue;
      auto pc = a_[c];
      const double dcx = std::sqrt(dist2_[c]);
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_t = kNone;
      for (const auto& [dxt, t] : ring_) {
        if (dxt - dcx > std::sqrt(best) * (1 + 1e-12)) break;
        double d = squared_distance(pc, a_[slot_pt_[t]]);
        if (d < best || (d == best && t < best_t)) {
          best = d;
          best_t = t;
        }
      }
      set_near(c, slot_id_[best_t], best);
      exact_at_[c] = inserts_;
      push(c, best);
    }
    cells_[xid].clear();
    cells_[xid].shrink_to_fit();

    near_[x] = partner_id;
    dist2_[x] = slot_nnd_[s];
    exact_at_[x] = inserts_;
    push(x, dist2_[x]);
    cells_[partner_id].push_back(x);
  }

  /// Non-member farthest from the current members (smallest index on ties).
  std::size_t farthest(const Deadline& deadline) {
    for (;;) {
      Entry top = heap_.top();
      heap_.pop();
      std::size_t c = top.index;
      if (top.version != version_[c] || member_slot_[c] != kNone) continue;
      if (exact_at_[c] == inserts_) {
        heap_.push(top);  // keep its entry; the caller decides what happens to c
        return c;
      }
      refresh(c);
      push(c, dist2_[c]);
      deadline.check();
    }
  }

  /// Puts candidate z into the empty slot.
  void fill(std::size_t z) {
    const std::size_t s = empty_slot_;
    empty_slot_ = kNone;
    member_slot_[z] = s;
    slot_pt_[s] = z;
    slot_id_[s] = new_member(z);
    ++inserts_;
    log_.push_back(slot_id_[s]);

    auto pz = a_[z];
    slot_nn_[s] = kNone;
    slot_nnd_[s] = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < k_; ++t) {
      if (t == s) continue;
      double d = squared_distance(pz, a_[slot_pt_[t]]);
      table_[s * k_ + t] = table_[t * k_ + s] = d;
      if (better(d, t, slot_nnd_[s], slot_nn_[s])) {
        slot_nnd_[s] = d;
        slot_nn_[s] = t;
      }
    }
    for (std::size_t t = 0; t < k_; ++t) {
      if (t == s) continue;
      if (slot_nn_[t] == s) {
        recompute_slot(t);
      } else if (better(table_[t * k_ + s], s, slot_nnd_[t], slot_nn_[t])) {
        slot_nnd_[t] = table_[t * k_ + s];
        slot_nn_[t] = s;
      }
    }
  }

 private:
  struct Entry {
    double key;
    std::size_t index;
    std::uint32_t version;
  };
  struct EntryOrder {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
      if (a.key != b.key) return a.key < b.key;
      return a.index > b.index;
    }
  };
  using Heap = std::priority_queue<Entry, std::vector<Entry>, EntryOrder>;

  std::size_t new_member(std::size_t c) {
    member_pt_.push_back(c);
    alive_.push_back(1);
    cells_.emplace_back();
    return member_pt_.size() - 1;
  }

  // Slot nearest-neighbour ties go to the smallest candidate index.
  bool better(double d, std::size_t t, double best_d, std::size_t best_t) const {
    if (d != best_d) return d < best_d;
    return best_t == kNone || slot_pt_[t] < slot_pt_[best_t];
  }

  void recompute_slot(std::size_t s) {
    slot_nn_[s] = kNone;
    slot_nnd_[s] = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < k_; ++t) {
      if (t == s || t == empty_slot_) continue;
      if (better(table_[s * k_ + t], t, slot_nnd_[s], slot_nn_[s])) {
        slot_nnd_[s] = table_[s * k_ + t];
        slot_nn_[s] = t;
      }
    }
  }

  void build_slot_table() {
    table_.assign(k_ * k_, 0);
    for (std::size_t s = 0; s < k_; ++s)
      for (std::size_t t = s + 1; t < k_; ++t)
        table_[s * k_ + t] = table_[t * k_ + s] = squared_distance(a_[slot_pt_[s]], a_[slot_pt_[t]]);
    slot_nn_.assign(k_, kNone);
    slot_nnd_.assign(k_, std::numeric_limits<double>::infinity());
    for (std::size_t s = 0; s < k_; ++s) recompute_slot(s);
  }

  void push(std::size_t c, double key) {
    ++version_[c];
    heap_.push({key, c, version_[c]});
  }

  // Makes dist2_[c] the exact squared distance from c to the current members.
  void refresh(std::size_t c) {
    auto pc = a_[c];
    std::size_t since = exact_at_[c];
    if (since == kNone || inserts_ - since > k_) {
      std::size_t best_id = kNone;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < k_; ++t) {
        if (t == empty_slot_) continue;
        double d = squared_distance(pc, a_[slot_pt_[t]]);
        if (d < best) {
          best = d;
          best_id = slot_id_[t];
        }
      }
      set_near(c, best_id, best);
    } else {
      std::size_t best_id = near_[c];
      double best = dist2_[c];
      for (std::size_t e = since; e < inserts_; ++e) {
        std::size_t id = log_[e];
        if (!alive_[id]) continue;
        double d = squared_distance(pc, a_[member_pt_[id]]);
        if (d < best) {
          best = d;
          best_id = id;
        }
      }
      set_near(c, best_id, best);
    }
    exact_at_[c] = inserts_;
  }

  void set_near(std::size_t c, std::size_t id, double d2) {
    if (near_[c] != id) cells_[id].push_back(c);
    near_[c] = id;
    dist2_[c] = d2;
  }

  const PointSet& a_;
  std::size_t n_, k_;
  std::vector<std::size_t> slot_pt_, slot_id_, member_slot_;
  std::vector<double> table_;
  std::vector<std::size_t> slot_nn_;
  std::vector<double> slot_nnd_;
  std::size_t empty_slot_ = kNone;
  std::vector<std::pair<double, std::size_t>> ring_;

  std::vector<std::size_t> member_pt_;  // member id -> candidate
  std::vector<char> alive_;
  std::vector<std::vector<std::size_t>> cells_;  // member id -> candidates measured against it
  std::vector<std::size_t> log_;                 // member ids in insertion order
  std::size_t inserts_ = 0;

  std::vector<std::size_t> near_;
  std::vector<double> dist2_;
  std::vector<std::size_t> exact_at_;
  std::vector<std::uint32_t> version_;
  Heap heap_;
};

}  // namespace

std::vector<std::size_t> select_idss(const PointSet& a, std::size_t k, std::size_t max_iter, Seed seed,
                                     const Deadline& deadline) {
  check_k(a, k);
  deadline.check();
  std::vector<std::size_t> init = idss_initial_subset(a.size(), k, seed);
  if (k < 2 || max_iter == 0 || k == a.size()) return init;

  auto engine = seed.derive("idss-moves").engine();
  std::uniform_int_distribution<int> coin(0, 1);
  IdssState state(a, std::move(init));

  for (std::size_t it = 0; it < max_iter; ++it) {
    deadline.check();
    double before = state.min_slot_d2();
    auto [p, q] = state.closest_pair();
    std::size_t x = coin(engine) == 0 ? p : q;
    const auto& slots = state.slots();
    std::size_t s = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), x) - slots.begin());

    state.vacate(s);
    std::size_t z = state.farthest(deadline);
    state.fill(z);
    if (state.min_slot_d2() < before) {
      state.vacate(s);
      state.fill(x);
    }
  }
  return state.slots();
}

}  // namespace subsel
