#ifndef SUBSEL_DAS_DENNIS_HPP
#define SUBSEL_DAS_DENNIS_HPP

#include <optional>

#include "subsel/core.hpp"

namespace subsel {

/// Weight vectors on the unit simplex (components in [0, 1], sum 1).
struct ReferenceVectorSet {
  PointSet vectors;
  std::size_t outer_divisions = 0;
  std::size_t inner_divisions = 0;  // 0 for a single layer

  std::size_t size() const noexcept { return vectors.size(); }
};

/// C(n, r) for small arguments.
std::size_t binomial(std::size_t n, std::size_t r);

/// All simplex-lattice points with denominator h, in lexicographically descending order.
ReferenceVectorSet das_dennis(std::size_t m, std::size_t h);

/// Outer lattice h1 followed by the inner lattice h2 shrunk as v/2 + 1/(2m).
ReferenceVectorSet das_dennis_two_layer(std::size_t m, std::size_t h1, std::size_t h2);

/// Reference vectors whose count is exactly k: the standard layout for
/// m = 3, 5, 8, 10 (k = 91, 210, 156, 275), otherwise a single layer if one fits.
std::optional<ReferenceVectorSet> reference_vectors_for(std::size_t m, std::size_t k);

/// Standard subset size per objective count (91, 210, 156, 275), if defined.
std::optional<std::size_t> default_subset_size(std::size_t m) noexcept;

}  // namespace subsel

#endif
