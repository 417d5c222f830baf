#include "subsel/runner.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "subsel/point_io.hpp"

namespace subsel {

LoadedDataset load_dataset(const DatasetDescriptor& d) {
  LoadedDataset out;
  if (d.front) {
    out.candidates = generate_front(*d.front);
    out.reference = out.candidates;
    out.hv_ref.assign(d.front->m, 1.2);
  } else {
    out.candidates = read_points(d.file);
    if (d.reference_file.empty()) throw InvalidInput("dataset '" + d.id + "' has no reference file");
    out.reference = read_points(d.reference_file);
    if (out.reference.dim() != out.candidates.dim())
      throw InvalidInput("dataset '" + d.id + "': reference set dimension differs from the candidates");
    out.hv_ref = reference_point(ideal_nadir(out.reference).nadir, 1.2);
  }
  if (d.hv_ref) {
    if (d.hv_ref->size() != out.candidates.dim()) throw InvalidInput("hv_ref dimension mismatch");
    out.hv_ref = *d.hv_ref;
  }
  if (d.k) {
    out.k = *d.k;
  } else if (auto k = default_subset_size(out.candidates.dim())) {
    out.k = *k;
  } else {
    throw InvalidInput("dataset '" + d.id + "' needs an explicit k for m = " +
                       std::to_string(out.candidates.dim()));
  }
  return out;
}

RunRecord run_cell(const LoadedDataset& data, const std::string& dataset, const SelectorConfig& config,
                   std::size_t repetition, double time_limit_seconds) {
  RunRecord r;
  r.dataset = dataset;
  r.method = std::string(method_name(config.method));
  r.repetition = repetition;
  r.k = data.k;
  std::uint64_t seed = repetition < config.seeds.size() ? config.seeds[repetition] : repetition;
  if (is_randomized(config.method) || config.method == Method::GAHSS) r.seed = seed;

  auto result = select(config.method, data.candidates, data.k, config.params, Seed(seed),
                       Deadline::after(time_limit_seconds));
  r.runtime_seconds = result.runtime_seconds;
  r.timed_out = result.timed_out;
  if (!r.timed_out) {
    r.indices = result.indices;
    r.metrics = evaluate(data.candidates.subset(result.indices), data.hv_ref, data.reference);
  }
  return r;
}

std::size_t worker_count(std::size_t fallback) {
  if (const char* env = std::getenv("SUBSEL_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback == 0 ? 1 : fallback;
}

namespace {

struct Cell {
  std::size_t selector;
  std::size_t repetition;
};

}  // namespace

RunSummary run_suite(const SuiteManifest& manifest, const std::filesystem::path& results,
                     const RunOptions& options) {
  manifest.validate();
  std::set<std::string> done;
  if (std::filesystem::exists(results))
    for (const auto& r : read_records(results)) done.insert(r.key());
  if (results.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(results.parent_path(), ec);
  }

  RunSummary summary;
  for (const auto& d : manifest.datasets) {
    std::vector<Cell> cells;
    for (std::size_t s = 0; s < manifest.selectors.size(); ++s) {
      const auto& c = manifest.selectors[s];
      for (std::size_t rep = 0; rep < c.repetitions; ++rep) {
        RunRecord probe;
        probe.dataset = d.id;
        probe.method = std::string(method_name(c.method));
        probe.repetition = rep;
        if (is_randomized(c.method) || c.method == Method::GAHSS)
          probe.seed = rep < c.seeds.size() ? c.seeds[rep] : rep;
        if (done.count(probe.key())) {
          ++summary.skipped;
          continue;
        }
        cells.push_back({s, rep});
      }
    }
    if (cells.empty()) continue;

    const LoadedDataset data = load_dataset(d);
    std::vector<std::optional<RunRecord>> finished(cells.size());
    std::size_t next_write = 0;
    std::mutex writer;
    std::atomic<std::size_t> next_cell{0};
    std::exception_ptr failure;

    auto work = [&] {
      for (;;) {
        std::size_t i = next_cell.fetch_add(1);
        if (i >= cells.size()) return;
        try {
          RunRecord r = run_cell(data, d.id, manifest.selectors[cells[i].selector], cells[i].repetition,
                                 manifest.time_limit_seconds);
          std::lock_guard lock(writer);
          finished[i] = std::move(r);
          while (next_write < cells.size() && finished[next_write]) {
            append_record(results, *finished[next_write]);
            if (options.on_record) options.on_record(*finished[next_write]);
            if (finished[next_write]->timed_out) ++summary.timed_out;
            finished[next_write].reset();
            ++next_write;
            ++summary.executed;
          }
        } catch (...) {
          std::lock_guard lock(writer);
          if (!failure) failure = std::current_exception();
          next_cell = cells.size();
          return;
        }
      }
    };

    std::size_t workers = std::min(std::max<std::size_t>(options.workers, 1), cells.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return summary;
}

}  // namespace subsel
