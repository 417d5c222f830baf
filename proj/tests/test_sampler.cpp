#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "subsel/sampler.hpp"

using namespace subsel;

namespace {

// Asymptotic Kolmogorov-Smirnov critical value at the 1% level.
double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

}  // namespace

TEST_CASE("front kind names round-trip") {
  for (FrontKind k : kAllFrontKinds) CHECK(parse_front_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_front_kind("Flat"), InvalidInput);
}

TEST_CASE("front shapes") {
  CHECK(shape_of(FrontKind::LinearTriangular).p == 1);
  CHECK(shape_of(FrontKind::ConvexTriangular).p == 0.5);
  CHECK(shape_of(FrontKind::ConcaveTriangular).p == 2);
  CHECK(shape_of(FrontKind::ConvexInverted).p == 2);
  CHECK(shape_of(FrontKind::ConcaveInverted).p == 0.5);
  CHECK(shape_of(FrontKind::LinearInverted).inverted);
  CHECK_FALSE(shape_of(FrontKind::ConvexTriangular).inverted);
}

TEST_CASE("every sampled point lies on its front") {
  for (FrontKind kind : kAllFrontKinds)
    for (std::size_t m : {2u, 3u, 5u, 10u}) {
      PointSet s = generate_front({kind, m, 2000, Seed(m)});
      REQUIRE(s.size() == 2000);
      REQUIRE(s.dim() == m);
      double worst = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        worst = std::max(worst, std::abs(front_residual(kind, s[i])));
        for (double v : s[i]) {
          CHECK(v >= 0);
          CHECK(v <= 1);
        }
      }
      CHECK(worst < 1e-9);
    }
}

TEST_CASE("sampled fronts are mutually non-dominated") {
  for (FrontKind kind : kAllFrontKinds) {
    PointSet s = generate_front({kind, 3, 300, Seed(5)});
    CHECK(oracle::nondominated(s).size() == s.size());
  }
}

TEST_CASE("generation is reproducible per seed") {
  FrontSpec spec{FrontKind::ConcaveInverted, 4, 500, Seed(11)};
  CHECK(generate_front(spec) == generate_front(spec));
  spec.seed = Seed(12);
  CHECK_FALSE(generate_front(spec) == generate_front({FrontKind::ConcaveInverted, 4, 500, Seed(11)}));
  CHECK(generate_front(spec).label() == "ConcaveInverted_m4_n500");
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(generate_front({FrontKind::LinearTriangular, 1, 10, Seed(1)}), InvalidInput);
  CHECK_THROWS_AS(sample_lp_sphere(3, 0, 10, Seed(1)), InvalidInput);
}

TEST_CASE("linear two-objective front has a uniform first coordinate") {
  PointSet s = sample_lp_sphere(2, 1, 100000, Seed(2024));
  std::vector<double> x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i][0];
  std::sort(x.begin(), x.end());
  double d = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    d = std::max({d, (static_cast<double>(i) + 1) / n - x[i], x[i] - static_cast<double>(i) / n});
  CHECK(d < ks_critical_1pct(x.size()));
}
