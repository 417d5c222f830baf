#include "subsel/lazy_greedy.hpp"
#include "subsel/selectors.hpp"

namespace subsel {

std::vector<std::size_t> select_ghss(const PointSet& a, std::size_t k, const Vector& ref,
                                     const Deadline& deadline) {
  HypervolumeGain oracle(a, ref);
  return lazy_greedy(oracle, k, deadline);
}

std::vector<std::size_t> select_gahss(const PointSet& a, std::size_t k, const Vector& ref,
                                      const DirectionVectorSet& dirs, const Deadline& deadline) {
  ApproxHypervolumeGain oracle(a, ref, dirs);
  return lazy_greedy(oracle, k, deadline);
}

std::vector<std::size_t> select_gigdss(const PointSet& a, std::size_t k, const Deadline& deadline) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
  IgdGain oracle(a, a, IgdGain::Distance::Euclidean);
  return lazy_greedy(oracle, k, deadline);
}

std::vector<std::size_t> select_gigdpss(const PointSet& a, std::size_t k, const Deadline& deadline) {
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");
  IgdGain oracle(a, a, IgdGain::Distance::Plus);
  return lazy_greedy(oracle, k, deadline);
}

}  // namespace subsel
