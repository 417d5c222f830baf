#ifndef SUBSEL_SAMPLER_HPP
#define SUBSEL_SAMPLER_HPP

#include <array>
#include <string_view>

#include "subsel/core.hpp"

namespace subsel {

enum class FrontKind {
  LinearTriangular,
  ConvexTriangular,
  ConcaveTriangular,
  LinearInverted,
  ConvexInverted,
  ConcaveInverted,
};

inline constexpr std::array<FrontKind, 6> kAllFrontKinds = {
    FrontKind::LinearTriangular, FrontKind::ConvexTriangular, FrontKind::ConcaveTriangular,
    FrontKind::LinearInverted,   FrontKind::ConvexInverted,   FrontKind::ConcaveInverted,
};

std::string_view to_string(FrontKind kind) noexcept;
FrontKind parse_front_kind(std::string_view name);

/// Sphere exponent and whether the front is the inverted (f = 1 - g) image.
struct FrontShape {
  double p;
  bool inverted;
};

FrontShape shape_of(FrontKind kind) noexcept;

struct FrontSpec {
  FrontKind kind = FrontKind::LinearTriangular;
  std::size_t m = 3;
  std::size_t n = 0;
  Seed seed;
};

/**
 * n points uniformly spread on the positive-orthant unit l_p sphere.
 *
 * Each |x_i| is drawn as g^(1/p) with g ~ Gamma(1/p, 1), which is the
 * absolute value of an exponential-power variate with density
 * exp(-|x|^p) / (2 Gamma(1 + 1/p)); the point is then |x| / ||x||_p.
 */
PointSet sample_lp_sphere(std::size_t m, double p, std::size_t n, Seed seed);

/// Candidate set on the front described by `spec`; bit-reproducible per seed.
PointSet generate_front(const FrontSpec& spec);

/// Residual of the front equation: sum_i h_i^p - 1 with h = f or 1 - f.
double front_residual(FrontKind kind, Point f);

}  // namespace subsel

#endif
