#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "subsel/manifest.hpp"
#include "subsel/point_io.hpp"
#include "subsel/rank.hpp"
#include "subsel/records.hpp"
#include "subsel/runner.hpp"

using namespace subsel;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("subsel_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::optional<double>> row(std::initializer_list<double> v, std::initializer_list<std::size_t> missing) {
  std::vector<std::optional<double>> out(v.begin(), v.end());
  for (std::size_t i : missing) out[i].reset();
  return out;
}

}  // namespace

TEST_CASE("csv and binary round-trips are value exact") {
  std::mt19937_64 rng(51);
  PointSet a = oracle::random_set(500, 4, rng, -1e3, 1e3);
  std::vector<double> d = a.data();
  d[0] = 1e-300;
  d[1] = 0.1;
  d[2] = -0.0;
  a = PointSet(4, d);
  CHECK(parse_points(to_csv(a)) == a);
  CHECK(parse_binary(to_binary(a)) == a);
  fs::path dir = scratch_dir("io");
  write_points(a, dir / "a.csv");
  write_points(a, dir / "a.bin", PointFormat::Binary);
  CHECK(read_points(dir / "a.csv") == a);
  CHECK(read_points(dir / "a.bin") == a);
  CHECK(read_points(dir / "a.bin").label() == "a");
  CHECK(to_csv(a).rfind("m=4\n", 0) == 0);
}

TEST_CASE("lenient parsing of foreign archives") {
  PointSet a = parse_points("# comment\n1 2 3\n4;5;6\r\n\n7,8,9\n");
  CHECK(a.size() == 3);
  CHECK(a.dim() == 3);
  CHECK(a[2][0] == 7);
}

TEST_CASE("malformed point files") {
  CHECK_THROWS_AS(parse_points("m=3\n1,2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_points("1,2,3\n1,2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_points("1,x\n"), InvalidInput);
  CHECK_THROWS_AS(parse_points("1,nan\n"), InvalidInput);
  CHECK_THROWS_AS(parse_binary("PSS1"), InvalidInput);
  CHECK_THROWS_AS(read_points("/nonexistent/file.csv"), IoError);
  CHECK_THROWS_AS(parse_point_format("xml"), InvalidInput);
}

TEST_CASE("evaluate fills every metric") {
  Metrics m = evaluate(PointSet::from_rows({{0.5, 0.5}}), Vector{1.2, 1.2}, PointSet::from_rows({{0.5, 0.5}}));
  CHECK(*m.hv == doctest::Approx(0.49));
  CHECK(*m.igd == 0);
  CHECK(*m.igd_plus == 0);
  CHECK(*m.eps_plus == 0);
  CHECK_FALSE(m.uniformity);
  CHECK_THROWS_AS(evaluate(PointSet::from_rows({{0.5, 0.5}}), Vector{1, 1, 1}, PointSet::from_rows({{0.5, 0.5}})),
                  InvalidInput);
}

TEST_CASE("run records round-trip through json lines") {
  RunRecord r;
  r.dataset = "LinearTriangular_m3_n100_s1";
  r.method = "CSS-MEA";
  r.seed = 7;
  r.repetition = 3;
  r.k = 2;
  r.metrics.hv = 0.1;
  r.metrics.uniformity = 1.0 / 3;
  r.runtime_seconds = 0.25;
  r.indices = {4, 9};
  RunRecord back = record_from_json_line(to_json_line(r));
  CHECK(back.key() == r.key());
  CHECK(*back.metrics.hv == 0.1);
  CHECK(*back.metrics.uniformity == 1.0 / 3);
  CHECK_FALSE(back.metrics.igd);
  CHECK(back.indices == r.indices);
  CHECK_THROWS_AS(record_from_json_line("{"), InvalidInput);

  fs::path dir = scratch_dir("records");
  append_record(dir / "r.jsonl", r);
  append_record(dir / "r.jsonl", r);
  { std::ofstream(dir / "r.jsonl", std::ios::app) << "{\"dataset\": \"trunc"; }
  CHECK(read_records(dir / "r.jsonl").size() == 2);
}

TEST_CASE("rank rows") {
  CHECK(rank_row(row({3, 0, 1, 0}, {1, 3}), Orientation::Maximize) == std::vector<double>{1, 3.5, 2, 3.5});
  CHECK(rank_row(row({5, 5, 2}, {}), Orientation::Maximize) == std::vector<double>{1.5, 1.5, 3});
  CHECK(rank_row(row({5, 5, 2}, {}), Orientation::Minimize) == std::vector<double>{2.5, 2.5, 1});
  CHECK_THROWS_AS(rank_row(row({1, 2}, {0, 1}), Orientation::Maximize), InvalidInput);
}

TEST_CASE("missing cells share the worst ranks among ten methods") {
  auto one = rank_row(row({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {4}), Orientation::Maximize);
  CHECK(one[4] == 10);
  auto two = rank_row(row({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {2, 3}), Orientation::Maximize);
  CHECK(two[2] == 9.5);
  CHECK(two[3] == 9.5);
  auto three = rank_row(row({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {0, 2, 3}), Orientation::Maximize);
  CHECK(three[0] == 9);
  CHECK(three[2] == 9);
  CHECK(three[3] == 9);
  double sum = 0;
  for (double r : three) sum += r;
  CHECK(sum == 55);
}

TEST_CASE("rank aggregate averages over rows") {
  auto t = rank_aggregate({row({3, 2, 1}, {}), row({1, 2, 3}, {})}, Orientation::Maximize);
  CHECK(t.average_rank == std::vector<double>{2, 2, 2});
  CHECK_THROWS_AS(rank_aggregate({}, Orientation::Maximize), InvalidInput);
  CHECK_THROWS_AS(rank_aggregate({row({1, 2}, {}), row({1}, {})}, Orientation::Maximize), InvalidInput);
}

TEST_CASE("ranks from records use the mean over seeds and treat timeouts as missing") {
  auto rec = [](std::string d, std::string m, std::uint64_t rep, std::optional<double> hv) {
    RunRecord r;
    r.dataset = std::move(d);
    r.method = std::move(m);
    r.repetition = rep;
    r.timed_out = !hv;
    r.metrics.hv = hv;
    return r;
  };
  std::vector<RunRecord> rs = {rec("A", "X", 0, 1.0), rec("A", "X", 1, 3.0), rec("A", "Y", 0, 2.5),
                               rec("A", "Z", 0, std::nullopt), rec("B", "X", 0, 1.0), rec("B", "Y", 0, 1.0),
                               rec("B", "Z", 0, 0.5)};
  RankTable t = rank_records(rs, "hv");
  CHECK(t.methods == std::vector<std::string>{"X", "Y", "Z"});
  CHECK(*t.values[0][0] == 2.0);
  CHECK(t.ranks[0] == std::vector<double>{2, 1, 3});
  CHECK(t.ranks[1] == std::vector<double>{1.5, 1.5, 3});
  CHECK(t.average_rank[2] == 3);
  CHECK(to_csv(t).find("-(3)") != std::string::npos);
  CHECK(orientation_of("igd") == Orientation::Minimize);
  CHECK_THROWS_AS(orientation_of("speed"), InvalidInput);
}

TEST_CASE("suite presets") {
  auto full = preset_suite("full", 1);
  CHECK(full.datasets.size() == 72);
  CHECK(preset_suite("small", 1).datasets.size() == 24);
  CHECK(preset_suite("desk", 1).datasets.size() == 6);
  CHECK_THROWS_AS(preset_suite("huge", 1), InvalidInput);
  CHECK(full.time_limit_seconds == 3600);
  CHECK(full.selectors.size() == 10);
  for (const auto& c : full.selectors) CHECK(c.repetitions == (is_randomized(c.method) ? 10u : 1u));
  CHECK_NOTHROW(full.validate());
}

TEST_CASE("manifest json round-trip and validation") {
  SuiteManifest s = preset_suite("desk", 9);
  s.selectors[0].params.ref_point = Vector{1.5, 1.5, 1.5};
  SuiteManifest back = manifest_from_json(to_json(s));
  CHECK(to_json(back) == to_json(s));
  s.datasets.push_back(s.datasets.front());
  CHECK_THROWS_AS(s.validate(), InvalidInput);

  SuiteManifest ext;
  DatasetDescriptor d;
  d.id = "archive";
  d.file = "/nonexistent/archive.csv";
  ext.datasets.push_back(d);
  CHECK_THROWS_AS(ext.validate(false), InvalidInput);  // no reference file
  ext.datasets[0].reference_file = "/nonexistent/ref.csv";
  CHECK_NOTHROW(ext.validate(false));
  CHECK_THROWS_AS(ext.validate(true), InvalidInput);
}

TEST_CASE("bench runs are resumable and order independent") {
  SuiteManifest s;
  s.id = "tiny";
  for (FrontKind kind : {FrontKind::LinearTriangular, FrontKind::ConvexInverted}) {
    DatasetDescriptor d;
    d.front = FrontSpec{kind, 3, 300, Seed(2)};
    d.id = dataset_id(*d.front);
    d.k = 10;
    s.datasets.push_back(d);
  }
  for (Method m : {Method::DSS, Method::IDSS, Method::CSS_MEA, Method::GHSS}) {
    SelectorConfig c;
    c.method = m;
    c.repetitions = is_randomized(m) ? 2 : 1;
    c.seeds = {11, 12};
    c.seeds.resize(c.repetitions);
    s.selectors.push_back(c);
  }
  fs::path dir = scratch_dir("bench");
  auto first = run_suite(s, dir / "one.jsonl", {.workers = 1});
  CHECK(first.executed == 12);
  auto again = run_suite(s, dir / "one.jsonl", {.workers = 1});
  CHECK(again.executed == 0);
  CHECK(again.skipped == 12);

  auto parallel = run_suite(s, dir / "two.jsonl", {.workers = 3});
  CHECK(parallel.executed == 12);
  auto one = read_records(dir / "one.jsonl"), two = read_records(dir / "two.jsonl");
  REQUIRE(one.size() == two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].key() == two[i].key());
    CHECK(one[i].indices == two[i].indices);
    CHECK(*one[i].metrics.hv == *two[i].metrics.hv);
  }

  // a partially written file resumes where it stopped
  {
    std::ofstream out(dir / "three.jsonl");
    for (std::size_t i = 0; i < 5; ++i) out << to_json_line(one[i]) << '\n';
  }
  auto rest = run_suite(s, dir / "three.jsonl", {.workers = 2});
  CHECK(rest.skipped == 5);
  CHECK(rest.executed == 7);
  auto three = read_records(dir / "three.jsonl");
  REQUIRE(three.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(three[i].indices == one[i].indices);
}

TEST_CASE("timed out cells carry no metrics") {
  SuiteManifest s;
  DatasetDescriptor d;
  d.front = FrontSpec{FrontKind::LinearTriangular, 3, 200, Seed(2)};
  d.id = "lt";
  s.datasets.push_back(d);
  SelectorConfig c;
  c.method = Method::GHSS;
  s.selectors.push_back(c);
  s.time_limit_seconds = 0;
  fs::path dir = scratch_dir("timeout");
  auto sum = run_suite(s, dir / "r.jsonl");
  CHECK(sum.timed_out == 1);
  auto r = read_records(dir / "r.jsonl").front();
  CHECK(r.timed_out);
  CHECK_FALSE(r.metrics.hv);
  CHECK(r.indices.empty());
}

TEST_CASE("worker count honours the environment") {
  ::setenv("SUBSEL_WORKERS", "3", 1);
  CHECK(worker_count(1) == 3);
  ::setenv("SUBSEL_WORKERS", "zero", 1);
  CHECK(worker_count(2) == 2);
  ::unsetenv("SUBSEL_WORKERS");
  CHECK(worker_count(0) == 1);
}
