#ifndef SUBSEL_MANIFEST_HPP
#define SUBSEL_MANIFEST_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subsel/sampler.hpp"
#include "subsel/selectors.hpp"

namespace subsel {

/// A candidate set: either sampled from a front or read from a file.
struct DatasetDescriptor {
  std::string id;
  std::optional<FrontSpec> front;
  std::filesystem::path file;            // used when `front` is empty
  std::filesystem::path reference_file;  // IGD reference set for ingested archives
  std::optional<Vector> hv_ref;          // defaults: all ones for sampled fronts, 1.2 * reference nadir otherwise
  std::optional<std::size_t> k;          // defaults to the standard size for m
};

struct SelectorConfig {
  Method method = Method::DSS;
  SelectParams params;
  std::vector<std::uint64_t> seeds;
  std::size_t repetitions = 1;
};

struct SuiteManifest {
  std::string id;
  std::vector<DatasetDescriptor> datasets;
  std::vector<SelectorConfig> selectors;
  double time_limit_seconds = 3600;
  std::string generator = "mt19937_64";
  std::string direction_distribution = "uniform positive-orthant sphere";

  /// Throws InvalidInput on duplicate dataset ids or missing files.
  void validate(bool check_files = true) const;
};

/// Canonical dataset id, e.g. "LinearTriangular_m3_n10000_s1".
std::string dataset_id(const FrontSpec& spec);

/// All ten methods with 10 repetitions for the randomized ones and 1 otherwise.
std::vector<SelectorConfig> default_selectors(std::uint64_t base_seed);

/// "full" (72 sets), "small" (24 sets: m 5 and 10, n 100K and 1M), "desk" (6 sets: m 3, n 10K).
SuiteManifest preset_suite(std::string_view name, std::uint64_t seed);

std::string to_json(const SuiteManifest& manifest);
SuiteManifest manifest_from_json(std::string_view text, const std::filesystem::path& base_dir = {});
SuiteManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const SuiteManifest& manifest, const std::filesystem::path& path);

}  // namespace subsel

#endif
