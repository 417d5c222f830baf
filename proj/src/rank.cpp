#include "subsel/rank.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace subsel {

std::vector<double> rank_row(const std::vector<std::optional<double>>& values, Orientation orientation) {
  const std::size_t n = values.size();
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < n; ++i)
    if (values[i]) present.push_back(i);
  if (present.empty()) throw InvalidInput("cannot rank a row where every value is missing");

  std::stable_sort(present.begin(), present.end(), [&](std::size_t a, std::size_t b) {
    return orientation == Orientation::Maximize ? *values[a] > *values[b] : *values[a] < *values[b];
  });

  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < present.size();) {
    std::size_t j = i;
    while (j < present.size() && *values[present[j]] == *values[present[i]]) ++j;
    double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2;
    for (std::size_t t = i; t < j; ++t) ranks[present[t]] = r;
    i = j;
  }
  double missing = (static_cast<double>(present.size() + 1) + static_cast<double>(n)) / 2;
  for (std::size_t i = 0; i < n; ++i)
    if (!values[i]) ranks[i] = missing;
  return ranks;
}

RankTable rank_aggregate(const std::vector<std::vector<std::optional<double>>>& values, Orientation orientation) {
  if (values.empty()) throw InvalidInput("rank aggregation needs at least one row");
  const std::size_t cols = values.front().size();
  RankTable t;
  t.orientation = orientation;
  t.values = values;
  t.average_rank.assign(cols, 0.0);
  for (const auto& row : values) {
    if (row.size() != cols) throw InvalidInput("rank rows differ in length");
    t.ranks.push_back(rank_row(row, orientation));
    for (std::size_t c = 0; c < cols; ++c) t.average_rank[c] += t.ranks.back()[c];
  }
  for (double& r : t.average_rank) r /= static_cast<double>(values.size());
  return t;
}

Orientation orientation_of(std::string_view metric) {
  if (metric == "hv" || metric == "uniformity") return Orientation::Maximize;
  if (metric == "igd" || metric == "igd_plus" || metric == "eps_plus" || metric == "runtime")
    return Orientation::Minimize;
  throw InvalidInput("unknown metric '" + std::string(metric) + "'");
}

namespace {

std::optional<double> metric_of(const RunRecord& r, std::string_view metric) {
  if (r.timed_out) return std::nullopt;
  if (metric == "hv") return r.metrics.hv;
  if (metric == "igd") return r.metrics.igd;
  if (metric == "igd_plus") return r.metrics.igd_plus;
  if (metric == "eps_plus") return r.metrics.eps_plus;
  if (metric == "uniformity") return r.metrics.uniformity;
  return r.runtime_seconds;
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

RankTable rank_records(const std::vector<RunRecord>& records, std::string_view metric,
                       const std::vector<std::string>& methods) {
  Orientation orientation = orientation_of(metric);
  std::vector<std::string> rows, cols = methods;
  for (const auto& r : records) {
    if (std::find(rows.begin(), rows.end(), r.dataset) == rows.end()) rows.push_back(r.dataset);
    if (methods.empty() && std::find(cols.begin(), cols.end(), r.method) == cols.end()) cols.push_back(r.method);
  }
  if (rows.empty()) throw InvalidInput("no run records to rank");

  struct Cell {
    double sum = 0;
    std::size_t count = 0;
    bool missing = false;
  };
  std::map<std::pair<std::string, std::string>, Cell> cells;
  for (const auto& r : records) {
    Cell& c = cells[{r.dataset, r.method}];
    auto v = metric_of(r, metric);
    if (!v) {
      c.missing = true;
      continue;
    }
    c.sum += *v;
    ++c.count;
  }

  std::vector<std::vector<std::optional<double>>> values;
  for (const auto& d : rows) {
    auto& row = values.emplace_back();
    for (const auto& m : cols) {
      auto it = cells.find({d, m});
      if (it == cells.end() || it->second.missing || it->second.count == 0)
        row.emplace_back();
      else
        row.emplace_back(it->second.sum / static_cast<double>(it->second.count));
    }
  }
  RankTable t = rank_aggregate(values, orientation);
  t.metric = std::string(metric);
  t.datasets = std::move(rows);
  t.methods = std::move(cols);
  return t;
}

std::string to_csv(const RankTable& t) {
  std::string out = "dataset";
  for (const auto& m : t.methods) out += "," + m;
  out += '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out += r < t.datasets.size() ? t.datasets[r] : std::to_string(r);
    for (std::size_t c = 0; c < t.values[r].size(); ++c) {
      out += ',';
      out += t.values[r][c] ? shortest(*t.values[r][c]) : "-";
      out += "(" + shortest(t.ranks[r][c]) + ")";
    }
    out += '\n';
  }
  out += "avg_rank";
  for (double a : t.average_rank) out += "," + shortest(a);
  out += '\n';
  return out;
}

}  // namespace subsel
