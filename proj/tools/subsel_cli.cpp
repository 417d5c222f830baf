#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "subsel/manifest.hpp"
#include "subsel/point_io.hpp"
#include "subsel/rank.hpp"
#include "subsel/records.hpp"
#include "subsel/runner.hpp"

using namespace subsel;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kTimeout = 3;
constexpr int kIo = 4;

Vector parse_vector(const std::string& text) {
  PointSet p = parse_points(text);
  if (p.size() != 1) throw InvalidInput("expected one comma-separated vector, got '" + text + "'");
  auto row = p[0];
  return Vector(row.begin(), row.end());
}

void write_text(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void emit_record(const RunRecord& r, const std::string& out) {
  if (out.empty())
    std::cout << to_json_line(r) << '\n';
  else
    append_record(out, r);
}

struct Common {
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_generate(const Common& c, const std::string& kind, std::size_t m, std::size_t n, const std::string& preset) {
  if (c.out.empty()) throw InvalidInput("--out is required");
  PointFormat format = parse_point_format(c.format);
  const std::string ext = format == PointFormat::Csv ? ".csv" : ".bin";

  if (!preset.empty()) {
    SuiteManifest suite = preset_suite(preset, c.seed);
    fs::path dir(c.out);
    for (const auto& d : suite.datasets) {
      write_points(generate_front(*d.front), dir / (d.id + ext), format);
      std::cerr << "wrote " << (dir / (d.id + ext)).string() << '\n';
    }
    write_manifest(suite, dir / "manifest.json");
    return kOk;
  }

  if (kind.empty() || m == 0 || n == 0) throw InvalidInput("generate needs --kind, --m and --n (or --preset)");
  FrontSpec spec{parse_front_kind(kind), m, n, Seed(c.seed)};
  write_points(generate_front(spec), c.out, format);
  nlohmann::json side = {{"id", dataset_id(spec)},
                         {"front", {{"kind", kind}, {"m", m}, {"n", n}, {"seed", c.seed}}},
                         {"generator", "mt19937_64"}};
  write_text(c.out + ".json", side.dump(2) + "\n");
  return kOk;
}

int cmd_ingest(const Common& c, const std::string& in, bool filter, bool negate) {
  if (c.out.empty()) throw InvalidInput("--out is required");
  PointSet a = read_points(in);
  if (negate) {
    std::vector<double> flipped = a.data();
    for (double& v : flipped) v = -v;
    a = PointSet(a.dim(), std::move(flipped), a.label());
  }
  std::size_t before = a.size();
  if (filter) a = nondominated_filter(a);
  write_points(a, c.out, parse_point_format(c.format));
  std::cerr << "kept " << a.size() << " of " << before << " rows\n";
  return kOk;
}

int cmd_select(const Common& c, const std::string& input, const std::string& method, std::size_t k,
               double time_limit, const SelectParams& params, const std::string& reference,
               const std::string& hv_ref, const std::string& record_out) {
  LoadedDataset data;
  data.candidates = read_points(input);
  data.reference = reference.empty() ? data.candidates : read_points(reference);
  data.hv_ref = hv_ref.empty() ? reference_point(ideal_nadir(data.reference).nadir, 1.2) : parse_vector(hv_ref);
  if (k == 0) {
    auto def = default_subset_size(data.candidates.dim());
    if (!def) throw InvalidInput("--k is required for this number of objectives");
    k = *def;
  }
  data.k = k;

  SelectorConfig config;
  config.method = parse_method(method);
  config.params = params;
  config.seeds = {c.seed};
  config.repetitions = 1;
  RunRecord r = run_cell(data, data.candidates.label(), config, 0, time_limit);
  if (!r.timed_out && !c.out.empty())
    write_points(data.candidates.subset(r.indices), c.out, parse_point_format(c.format));
  emit_record(r, record_out);
  return r.timed_out ? kTimeout : kOk;
}

int cmd_evaluate(const Common& c, const std::string& subset, const std::string& reference, const std::string& hv_ref) {
  PointSet s = read_points(subset);
  PointSet ref = read_points(reference);
  RunRecord r;
  r.dataset = ref.label();
  r.method = s.label();
  r.k = s.size();
  Vector hr = hv_ref.empty() ? reference_point(ideal_nadir(ref).nadir, 1.2) : parse_vector(hv_ref);
  r.metrics = evaluate(s, hr, ref);
  emit_record(r, c.out);
  return kOk;
}

int cmd_bench(const Common& c, const std::string& manifest_path, const std::string& preset, std::size_t workers,
              bool deterministic, double time_limit) {
  if (c.out.empty()) throw InvalidInput("--out (results file) is required");
  SuiteManifest suite;
  if (!manifest_path.empty())
    suite = read_manifest(manifest_path);
  else if (!preset.empty())
    suite = preset_suite(preset, c.seed);
  else
    throw InvalidInput("bench needs --manifest or --preset");
  if (time_limit >= 0) suite.time_limit_seconds = time_limit;

  RunOptions opts;
  opts.workers = deterministic ? 1 : worker_count(workers);
  opts.on_record = [](const RunRecord& r) {
    std::cerr << r.dataset << ' ' << r.method << " rep " << r.repetition << ": "
              << (r.timed_out ? "timed out" : "ok") << " (" << r.runtime_seconds << " s)\n";
  };
  RunSummary s = run_suite(suite, c.out, opts);
  std::cerr << "executed " << s.executed << ", skipped " << s.skipped << ", timed out " << s.timed_out << '\n';
  return s.executed > 0 && s.timed_out == s.executed ? kTimeout : kOk;
}

int cmd_rank(const Common& c, const std::string& results, std::vector<std::string> metrics) {
  auto records = read_records(results);
  if (metrics.empty()) metrics = {"hv", "igd", "igd_plus", "eps_plus", "uniformity", "runtime"};
  std::vector<std::string> methods;
  for (Method m : kAllMethods)
    for (const auto& r : records)
      if (r.method == method_name(m)) {
        methods.emplace_back(method_name(m));
        break;
      }
  for (const auto& r : records)
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);

  std::ostringstream os;
  for (const auto& metric : metrics) {
    RankTable t = rank_records(records, metric, methods);
    os << "# " << metric << '\n' << to_csv(t) << '\n';
  }
  if (c.out.empty())
    std::cout << os.str();
  else
    write_text(c.out, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset selection from large non-dominated sets"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--format", c.format, "Point file format")->check(CLI::IsMember({"csv", "bin"}));
    sub->add_option("--out", c.out, "Output path");
  };

  std::string kind, preset, in, method, reference, hv_ref, record_out, manifest;
  std::size_t m = 0, n = 0, k = 0, workers = 1;
  bool no_filter = false, negate = false, deterministic = false;
  double time_limit = 3600, bench_time_limit = -1;
  SelectParams params;
  std::vector<std::string> metrics;

  auto* gen = app.add_subcommand("generate", "Sample a candidate set on a known front");
  add_common(gen);
  gen->add_option("--kind", kind, "Front kind, e.g. LinearTriangular");
  gen->add_option("--m", m, "Number of objectives");
  gen->add_option("--n", n, "Number of points");
  gen->add_option("--preset", preset, "Whole suite: full, small or desk")->excludes("--kind");

  auto* ing = app.add_subcommand("ingest", "Convert an external archive, dropping dominated rows");
  add_common(ing);
  ing->add_option("input", in, "Archive file")->required();
  ing->add_flag("--no-filter", no_filter, "Keep dominated rows");
  ing->add_flag("--negate", negate, "Negate objectives (maximization archives)");

  auto* sel = app.add_subcommand("select", "Run one selector on a candidate set");
  add_common(sel);
  sel->add_option("input", in, "Candidate file")->required();
  sel->add_option("--method", method, "Selector name, e.g. GHSS or CSS-MEA")->required();
  sel->add_option("--k", k, "Subset size (default by m)");
  sel->add_option("--time-limit-secs", time_limit, "Wall-clock limit")->check(CLI::NonNegativeNumber);
  sel->add_option("--reference", reference, "Reference set for IGD (default: candidates)");
  sel->add_option("--hv-ref", hv_ref, "Hypervolume reference point for evaluation, comma separated");
  sel->add_option("--record", record_out, "Append the run record here instead of stdout");
  sel->add_option("--max-iter", params.max_iter, "Iteration cap for IDSS and clustering");
  sel->add_option("--directions", params.directions, "Direction vectors for GAHSS");
  sel->add_option("--ref-factor", params.ref_factor, "Selector reference point factor times nadir");

  auto* ev = app.add_subcommand("evaluate", "Compute indicators of a subset");
  add_common(ev);
  ev->add_option("subset", in, "Subset file")->required();
  ev->add_option("--reference", reference, "Reference set")->required();
  ev->add_option("--hv-ref", hv_ref, "Hypervolume reference point (default 1.2 x reference nadir)");

  auto* bench = app.add_subcommand("bench", "Run a whole suite; resumes from an existing results file");
  add_common(bench);
  bench->add_option("--manifest", manifest, "Suite manifest (JSON)");
  bench->add_option("--preset", preset, "Built-in suite instead of a manifest");
  bench->add_option("--workers", workers, "Concurrent cells (SUBSEL_WORKERS overrides)");
  bench->add_flag("--deterministic", deterministic, "Single worker, fixed order");
  bench->add_option("--time-limit-secs", bench_time_limit, "Override the manifest time limit");

  auto* rk = app.add_subcommand("rank", "Tie-averaged rank tables from run records");
  add_common(rk);
  rk->add_option("results", in, "Results file (JSON lines)")->required();
  rk->add_option("--metric", metrics, "Metric(s) to rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen) return cmd_generate(c, kind, m, n, preset);
    if (*ing) return cmd_ingest(c, in, !no_filter, negate);
    if (*sel) return cmd_select(c, in, method, k, time_limit, params, reference, hv_ref, record_out);
    if (*ev) return cmd_evaluate(c, in, reference, hv_ref);
    if (*bench) return cmd_bench(c, manifest, preset, workers, deterministic, bench_time_limit);
    if (*rk) return cmd_rank(c, in, metrics);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kInvalid;
}
