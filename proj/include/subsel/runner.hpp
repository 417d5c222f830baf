#ifndef SUBSEL_RUNNER_HPP
#define SUBSEL_RUNNER_HPP

#include <filesystem>
#include <functional>
#include <string>

#include "subsel/manifest.hpp"
#include "subsel/records.hpp"

namespace subsel {

/// Candidate set, evaluation reference set and hv reference point of one dataset.
struct LoadedDataset {
  PointSet candidates;
  PointSet reference;
  Vector hv_ref;
  std::size_t k = 0;
};

LoadedDataset load_dataset(const DatasetDescriptor& d);

/// Runs one selector and evaluates its subset against the dataset.
RunRecord run_cell(const LoadedDataset& data, const std::string& dataset, const SelectorConfig& config,
                   std::size_t repetition, double time_limit_seconds);

struct RunOptions {
  std::size_t workers = 1;
  std::function<void(const RunRecord&)> on_record;  // progress hook, called under the writer lock
};

struct RunSummary {
  std::size_t executed = 0;
  std::size_t skipped = 0;
  std::size_t timed_out = 0;
};

/**
 * Runs every (dataset, method, seed) cell of the manifest and appends one
 * record per cell to `results`. Cells already present in `results` are
 * skipped. Records are appended in manifest order whatever the worker count.
 */
RunSummary run_suite(const SuiteManifest& manifest, const std::filesystem::path& results,
                     const RunOptions& options = {});

/// SUBSEL_WORKERS if set and positive, otherwise `fallback`.
std::size_t worker_count(std::size_t fallback);

}  // namespace subsel

#endif
