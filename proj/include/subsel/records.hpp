#ifndef SUBSEL_RECORDS_HPP
#define SUBSEL_RECORDS_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "subsel/core.hpp"

namespace subsel {

struct Metrics {
  std::optional<double> hv;
  std::optional<double> igd;
  std::optional<double> igd_plus;
  std::optional<double> eps_plus;
  std::optional<double> uniformity;
};

/// One evaluated (dataset, method, seed) cell. Timed-out cells carry no metrics.
struct RunRecord {
  std::string dataset;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::size_t repetition = 0;
  std::size_t k = 0;
  Metrics metrics;
  double runtime_seconds = 0;
  bool timed_out = false;
  std::vector<std::size_t> indices;

  /// Identity used to skip finished cells on resume.
  std::string key() const;
};

/// hv against `hv_ref`; igd, igd+ and eps+ against `reference`; uniformity over the multiset.
Metrics evaluate(const PointSet& subset, const Vector& hv_ref, const PointSet& reference);

/// Single-line JSON (metrics that are missing are written as null).
std::string to_json_line(const RunRecord& r);
RunRecord record_from_json_line(std::string_view line);

/// Reads every record from a JSON-lines file; a torn final line is ignored.
std::vector<RunRecord> read_records(const std::filesystem::path& path);

void append_record(const std::filesystem::path& path, const RunRecord& r);

}  // namespace subsel

#endif
