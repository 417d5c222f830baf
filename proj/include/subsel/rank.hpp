#ifndef SUBSEL_RANK_HPP
#define SUBSEL_RANK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subsel/records.hpp"

namespace subsel {

enum class Orientation { Maximize, Minimize };

/**
 * Ranks one row of method values (1 = best). Exact ties share the mean of
 * their positions; missing values share the mean of the remaining worst
 * positions. Rejects a row with no present value.
 */
std::vector<double> rank_row(const std::vector<std::optional<double>>& values, Orientation orientation);

struct RankTable {
  std::string metric;
  Orientation orientation = Orientation::Maximize;
  std::vector<std::string> datasets;  // rows
  std::vector<std::string> methods;   // columns
  std::vector<std::vector<std::optional<double>>> values;
  std::vector<std::vector<double>> ranks;
  std::vector<double> average_rank;  // per method
};

RankTable rank_aggregate(const std::vector<std::vector<std::optional<double>>>& values, Orientation orientation);

/// Metrics that can be ranked: hv, igd, igd_plus, eps_plus, uniformity, runtime.
Orientation orientation_of(std::string_view metric);

/**
 * Builds a table for `metric` from run records: each (dataset, method) cell
 * is the mean over its records, and missing when any of them timed out or
 * none exists. Rows and columns follow first appearance unless `methods` is given.
 */
RankTable rank_records(const std::vector<RunRecord>& records, std::string_view metric,
                       const std::vector<std::string>& methods = {});

/// CSV with one row per dataset: value(rank) cells plus a final average-rank row.
std::string to_csv(const RankTable& table);

}  // namespace subsel

#endif
