#include <doctest.h>

#include "oracles.hpp"
#include "subsel/hypervolume.hpp"

using namespace subsel;

TEST_CASE("hypervolume of simple sets") {
  Vector ref{1.2, 1.2};
  CHECK(hv_exact(PointSet::from_rows({{0.5, 0.5}}), ref) == doctest::Approx(0.49));
  CHECK(hv_exact(PointSet(2), ref) == 0);
  PointSet s = PointSet::from_rows({{0, 1}, {1, 0}, {0.5, 0.5}});
  CHECK(hv_exact(s, Vector{2, 2}) == doctest::Approx(3.25));
  CHECK(hv_exact(PointSet::from_rows({{0, 0, 0}}), Vector{1, 2, 3}) == doctest::Approx(6));
}

TEST_CASE("points outside the reference box contribute nothing") {
  Vector ref{1, 1};
  CHECK(hv_exact(PointSet::from_rows({{1, 0.5}}), ref) == 0);
  CHECK(hv_exact(PointSet::from_rows({{2, 0}, {0.5, 0.5}}), ref) == doctest::Approx(0.25));
  CHECK(hv_exclusive(Vector{1.5, 0}, PointSet(2), ref) == 0);
}

TEST_CASE("hypervolume matches inclusion-exclusion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 2 + t % 4, n = 1 + t % 9;
    PointSet s = oracle::random_set(n, m, rng);
    Vector ref(m, 1.1);
    CHECK(hv_exact(s, ref) == doctest::Approx(oracle::hv_inclusion_exclusion(s, ref)).epsilon(1e-12));
  }
}

TEST_CASE("duplicates and dominated points do not change hypervolume") {
  std::mt19937_64 rng(9);
  PointSet s = oracle::random_front(30, 4, rng);
  Vector ref(4, 1.2);
  double base = hv_exact(s, ref);
  PointSet t = s;
  t.push_back(s[3]);
  t.push_back(Vector{0.9, 0.9, 0.9, 0.9});
  CHECK(hv_exact(t, ref) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("exclusive contribution equals a difference of hypervolumes") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 2 + t % 4;
    PointSet s = oracle::random_front(12, m, rng);
    Vector ref(m, 1.2);
    double total = hv_exact(s, ref);
    for (std::size_t i = 0; i < s.size(); i += 3) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) rest.push_back(j);
      double diff = total - hv_exact(s.subset(rest), ref);
      CHECK(hv_contribution(i, s, ref) == doctest::Approx(diff).epsilon(1e-9));
    }
  }
}

TEST_CASE("reference dimension mismatch") {
  CHECK_THROWS_AS(hv_exact(PointSet::from_rows({{0.1, 0.2}}), Vector{1, 1, 1}), InvalidInput);
}

TEST_CASE("direction vectors are unit and non-negative") {
  auto d = generate_directions(5, 100, Seed(1));
  REQUIRE(d.size() == 100);
  for (std::size_t i = 0; i < d.size(); ++i) {
    double n2 = 0;
    for (double v : d[i]) {
      CHECK(v >= 0);
      n2 += v * v;
    }
    CHECK(n2 == doctest::Approx(1).epsilon(1e-12));
  }
  CHECK(generate_directions(5, 10, Seed(1)).data() == generate_directions(5, 10, Seed(1)).data());
}

TEST_CASE("ray length") {
  Vector p{0.5, 0.5}, ref{1, 1};
  PointSet none(2);
  Vector diag{std::sqrt(0.5), std::sqrt(0.5)};
  CHECK(ray_length(p, none, ref, diag) == doctest::Approx(0.5 * std::sqrt(2.0)));
  // a point weakly dominating p blocks every ray
  CHECK(ray_length(p, PointSet::from_rows({{0.4, 0.5}}), ref, diag) <= 0);
  // an axis-aligned ray escapes a blocker that is worse along the other axis
  CHECK(ray_length(p, PointSet::from_rows({{0.7, 0.2}}), ref, Vector{0, 1}) == doctest::Approx(0.5));
  CHECK(ray_length(p, PointSet::from_rows({{0.7, 0.2}}), ref, Vector{1, 0}) == doctest::Approx(0.2));
}

TEST_CASE("approximate contribution converges to the exact one") {
  std::mt19937_64 rng(5);
  for (std::size_t m : {2u, 3u}) {
    PointSet s = oracle::random_front(8, m, rng);
    Vector ref(m, 1.2);
    auto dirs = generate_directions(m, 200000, Seed(m));
    for (std::size_t i = 0; i < s.size(); i += 2) {
      double exact = hv_contribution(i, s, ref);
      double approx = hv_contribution_approx(i, s, ref, dirs);
      CHECK(approx == doctest::Approx(exact).epsilon(0.03));
    }
  }
}

TEST_CASE("approximate contribution of a dominated point is zero") {
  PointSet s = PointSet::from_rows({{0.2, 0.2}, {0.5, 0.5}});
  auto dirs = generate_directions(2, 50, Seed(1));
  CHECK(hv_contribution_approx(1, s, Vector{1, 1}, dirs) == 0);
}
