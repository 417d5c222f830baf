#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "subsel/core.hpp"

using namespace subsel;

TEST_CASE("point set rejects bad shapes and values") {
  CHECK_THROWS_AS(PointSet(1), InvalidInput);
  CHECK_THROWS_AS(PointSet(2, Vector{1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(PointSet(2, Vector{1.0, std::nan("")}), InvalidInput);
  CHECK_THROWS_AS(PointSet(2, Vector{1.0, HUGE_VAL}), InvalidInput);
  PointSet s(3);
  CHECK_THROWS_AS(s.push_back(Vector{1, 2}), InvalidInput);
  s.push_back(Vector{1, 2, 3});
  CHECK(s.size() == 1);
  CHECK_THROWS_AS(s.subset(std::vector<std::size_t>{1}), InvalidInput);
}

TEST_CASE("subset keeps order and repeats") {
  PointSet s = PointSet::from_rows({{0, 1}, {2, 3}, {4, 5}});
  std::vector<std::size_t> idx{2, 0, 2};
  PointSet t = s.subset(idx);
  CHECK(t.data() == std::vector<double>{4, 5, 0, 1, 4, 5});
}

TEST_CASE("dominance") {
  Vector a{1, 2}, b{1, 3}, c{2, 1};
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK_FALSE(dominates(a, a));
  CHECK_FALSE(dominates(a, c));
  CHECK(weakly_dominates(a, a));
  CHECK_THROWS_AS(dominates(a, Vector{1, 2, 3}), InvalidInput);
}

TEST_CASE("non-dominated filter matches the pairwise oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::size_t m = 2 + t % 3;
    PointSet a = oracle::random_set(60 + t, m, rng);
    // coarse grid values force ties and duplicates
    std::vector<double> d = a.data();
    for (double& v : d) v = std::round(v * 6) / 6;
    a = PointSet(m, d);
    CHECK(nondominated_indices(a) == oracle::nondominated(a));
  }
}

TEST_CASE("non-dominated filter keeps duplicates of front points") {
  PointSet a = PointSet::from_rows({{1, 2}, {1, 2}, {2, 2}, {0, 3}});
  CHECK(nondominated_indices(a) == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("ideal, nadir and reference point") {
  PointSet a = PointSet::from_rows({{0.2, 0.9}, {0.5, 0.1}});
  auto in = ideal_nadir(a);
  CHECK(in.ideal == Vector{0.2, 0.1});
  CHECK(in.nadir == Vector{0.5, 0.9});
  Vector r = reference_point(in.nadir);
  CHECK(r[0] == doctest::Approx(0.6));
  CHECK(r[1] == doctest::Approx(1.08));
  CHECK_THROWS_AS(ideal_nadir(PointSet(2)), InvalidInput);
}

TEST_CASE("seed streams are deterministic and distinct") {
  Seed s(42);
  CHECK(s.derive("a") == Seed(42).derive("a"));
  CHECK_FALSE(s.derive("a") == s.derive("b"));
  CHECK_FALSE(s.derive("a") == Seed(43).derive("a"));
  CHECK(s.derive("a").engine()() == Seed(42).derive("a").engine()());
}

TEST_CASE("deadline") {
  CHECK_FALSE(Deadline::never().expired());
  CHECK_NOTHROW(Deadline::never().check());
  Deadline zero = Deadline::after(0);
  CHECK(zero.expired());
  CHECK_THROWS_AS(zero.check(), TimedOut);
  CHECK_FALSE(Deadline::after(3600).expired());
  CHECK_THROWS_AS(Deadline::after(-1), InvalidInput);
  Deadline short_one = Deadline::after(0.01);
  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  CHECK(short_one.expired());
}
