#include "subsel/records.hpp"

#include <fstream>
#include <json.hpp>

#include "subsel/hypervolume.hpp"
#include "subsel/indicators.hpp"

namespace subsel {

namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string RunRecord::key() const {
  return dataset + "|" + method + "|" + (seed ? std::to_string(*seed) : "-") + "|" + std::to_string(repetition);
}

Metrics evaluate(const PointSet& subset, const Vector& hv_ref, const PointSet& reference) {
  if (subset.empty()) throw InvalidInput("cannot evaluate an empty subset");
  if (subset.dim() != reference.dim() || hv_ref.size() != subset.dim())
    throw InvalidInput("subset, reference set and reference point differ in dimension");
  Metrics out;
  out.hv = hv_exact(subset, hv_ref);
  out.igd = igd(subset, reference);
  out.igd_plus = igd_plus(subset, reference);
  out.eps_plus = eps_plus(subset, reference);
  if (subset.size() >= 2) out.uniformity = uniformity(subset);
  return out;
}

std::string to_json_line(const RunRecord& r) {
  json j;
  j["dataset"] = r.dataset;
  j["method"] = r.method;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["repetition"] = r.repetition;
  j["k"] = r.k;
  j["hv"] = opt(r.metrics.hv);
  j["igd"] = opt(r.metrics.igd);
  j["igd_plus"] = opt(r.metrics.igd_plus);
  j["eps_plus"] = opt(r.metrics.eps_plus);
  j["uniformity"] = opt(r.metrics.uniformity);
  j["runtime_seconds"] = r.runtime_seconds;
  j["timed_out"] = r.timed_out;
  j["indices"] = r.indices;
  return j.dump();
}

RunRecord record_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed run record: ") + e.what());
  }
  try {
    RunRecord r;
    r.dataset = j.at("dataset").get<std::string>();
    r.method = j.at("method").get<std::string>();
    if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
    r.repetition = j.value("repetition", std::size_t{0});
    r.k = j.value("k", std::size_t{0});
    r.metrics.hv = opt_from(j, "hv");
    r.metrics.igd = opt_from(j, "igd");
    r.metrics.igd_plus = opt_from(j, "igd_plus");
    r.metrics.eps_plus = opt_from(j, "eps_plus");
    r.metrics.uniformity = opt_from(j, "uniformity");
    r.runtime_seconds = j.value("runtime_seconds", 0.0);
    r.timed_out = j.value("timed_out", false);
    if (j.contains("indices")) r.indices = j["indices"].get<std::vector<std::size_t>>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("run record has a bad field: ") + e.what());
  }
}

std::vector<RunRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(std::move(line));
  std::vector<RunRecord> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(record_from_json_line(lines[i]));
    } catch (const InvalidInput&) {
      if (i + 1 != lines.size()) throw;  // only the last line may be a partial write
    }
  }
  return out;
}

void append_record(const std::filesystem::path& path, const RunRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open '" + path.string() + "' for appending");
  out << to_json_line(r) << '\n';
  out.flush();
  if (!out) throw IoError("failed appending to '" + path.string() + "'");
}

}  // namespace subsel
