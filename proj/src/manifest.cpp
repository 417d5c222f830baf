#include "subsel/manifest.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace subsel {

namespace {

using nlohmann::json;

json params_json(const SelectParams& p) {
  json j;
  j["max_iter"] = p.max_iter;
  j["directions"] = p.directions;
  j["ref_factor"] = p.ref_factor;
  j["ref_point"] = p.ref_point ? json(*p.ref_point) : json(nullptr);
  j["translate"] = p.translate;
  return j;
}

SelectParams params_from(const json& j) {
  SelectParams p;
  p.max_iter = j.value("max_iter", p.max_iter);
  p.directions = j.value("directions", p.directions);
  p.ref_factor = j.value("ref_factor", p.ref_factor);
  if (j.contains("ref_point") && !j["ref_point"].is_null()) p.ref_point = j["ref_point"].get<Vector>();
  p.translate = j.value("translate", p.translate);
  return p;
}

}  // namespace

void SuiteManifest::validate(bool check_files) const {
  std::set<std::string> ids;
  for (const auto& d : datasets) {
    if (!ids.insert(d.id).second) throw InvalidInput("duplicate dataset id '" + d.id + "'");
    if (d.front) continue;
    if (d.file.empty()) throw InvalidInput("dataset '" + d.id + "' has neither a front nor a file");
    if (d.reference_file.empty())
      throw InvalidInput("dataset '" + d.id + "' needs a reference_file for IGD evaluation");
    if (check_files) {
      if (!std::filesystem::exists(d.file)) throw InvalidInput("missing file " + d.file.string());
      if (!std::filesystem::exists(d.reference_file))
        throw InvalidInput("missing file " + d.reference_file.string());
    }
  }
  if (!(time_limit_seconds >= 0)) throw InvalidInput("time limit must be non-negative");
}

std::string dataset_id(const FrontSpec& spec) {
  return std::string(to_string(spec.kind)) + "_m" + std::to_string(spec.m) + "_n" + std::to_string(spec.n) +
         "_s" + std::to_string(spec.seed.value());
}

std::vector<SelectorConfig> default_selectors(std::uint64_t base_seed) {
  std::vector<SelectorConfig> out;
  for (Method m : kAllMethods) {
    SelectorConfig c;
    c.method = m;
    c.repetitions = is_randomized(m) ? 10 : 1;
    for (std::size_t r = 0; r < c.repetitions; ++r) c.seeds.push_back(base_seed + r);
    out.push_back(std::move(c));
  }
  return out;
}

SuiteManifest preset_suite(std::string_view name, std::uint64_t seed) {
  std::vector<std::size_t> ms, ns;
  if (name == "full") {
    ms = {3, 5, 8, 10};
    ns = {10'000, 100'000, 1'000'000};
  } else if (name == "small") {
    ms = {5, 10};
    ns = {100'000, 1'000'000};
  } else if (name == "desk") {
    ms = {3};
    ns = {10'000};
  } else {
    throw InvalidInput("unknown preset '" + std::string(name) + "' (full, small, desk)");
  }
  SuiteManifest s;
  s.id = std::string(name);
  for (std::size_t m : ms)
    for (std::size_t n : ns)
      for (FrontKind kind : kAllFrontKinds) {
        DatasetDescriptor d;
        d.front = FrontSpec{kind, m, n, Seed(seed)};
        d.id = dataset_id(*d.front);
        s.datasets.push_back(std::move(d));
      }
  s.selectors = default_selectors(seed);
  return s;
}

std::string to_json(const SuiteManifest& s) {
  json j;
  j["id"] = s.id;
  j["time_limit_seconds"] = s.time_limit_seconds;
  j["generator"] = s.generator;
  j["direction_distribution"] = s.direction_distribution;
  j["datasets"] = json::array();
  for (const auto& d : s.datasets) {
    json dj;
    dj["id"] = d.id;
    if (d.front) {
      dj["front"] = {{"kind", std::string(to_string(d.front->kind))},
                     {"m", d.front->m},
                     {"n", d.front->n},
                     {"seed", d.front->seed.value()}};
    } else {
      dj["file"] = d.file.string();
      dj["reference_file"] = d.reference_file.string();
    }
    if (d.hv_ref) dj["hv_ref"] = *d.hv_ref;
    if (d.k) dj["k"] = *d.k;
    j["datasets"].push_back(std::move(dj));
  }
  j["selectors"] = json::array();
  for (const auto& c : s.selectors) {
    j["selectors"].push_back({{"method", std::string(method_name(c.method))},
                              {"params", params_json(c.params)},
                              {"seeds", c.seeds},
                              {"repetitions", c.repetitions}});
  }
  return j.dump(2);
}

SuiteManifest manifest_from_json(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed manifest: ") + e.what());
  }
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };
  try {
    SuiteManifest s;
    s.id = j.value("id", std::string("suite"));
    s.time_limit_seconds = j.value("time_limit_seconds", 3600.0);
    s.generator = j.value("generator", s.generator);
    s.direction_distribution = j.value("direction_distribution", s.direction_distribution);
    for (const auto& dj : j.at("datasets")) {
      DatasetDescriptor d;
      if (dj.contains("front")) {
        const auto& f = dj["front"];
        d.front = FrontSpec{parse_front_kind(f.at("kind").get<std::string>()), f.at("m").get<std::size_t>(),
                            f.at("n").get<std::size_t>(), Seed(f.value("seed", std::uint64_t{0}))};
      } else {
        d.file = resolve(dj.at("file").get<std::string>());
        if (dj.contains("reference_file")) d.reference_file = resolve(dj["reference_file"].get<std::string>());
      }
      d.id = dj.contains("id") ? dj["id"].get<std::string>()
                               : (d.front ? dataset_id(*d.front) : d.file.stem().string());
      if (dj.contains("hv_ref")) d.hv_ref = dj["hv_ref"].get<Vector>();
      if (dj.contains("k")) d.k = dj["k"].get<std::size_t>();
      s.datasets.push_back(std::move(d));
    }
    if (!j.contains("selectors")) {
      s.selectors = default_selectors(j.value("seed", std::uint64_t{0}));
    } else {
      for (const auto& cj : j["selectors"]) {
        SelectorConfig c;
        c.method = parse_method(cj.at("method").get<std::string>());
        if (cj.contains("params")) c.params = params_from(cj["params"]);
        c.repetitions = cj.value("repetitions", is_randomized(c.method) ? std::size_t{10} : std::size_t{1});
        if (cj.contains("seeds")) c.seeds = cj["seeds"].get<std::vector<std::uint64_t>>();
        for (std::size_t r = c.seeds.size(); r < c.repetitions; ++r) c.seeds.push_back(r);
        c.seeds.resize(c.repetitions);
        s.selectors.push_back(std::move(c));
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("manifest has a bad field: ") + e.what());
  }
}

SuiteManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return manifest_from_json(ss.str(), path.parent_path());
}

void write_manifest(const SuiteManifest& manifest, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << to_json(manifest) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace subsel
