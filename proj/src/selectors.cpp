#include "subsel/selectors.hpp"

#include <chrono>
#include <sstream>

namespace subsel {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::GHSS: return "GHSS";
    case Method::GAHSS: return "GAHSS";
    case Method::GIGDSS: return "GIGDSS";
    case Method::GIGDPSS: return "GIGD+SS";
    case Method::DSS: return "DSS";
    case Method::IDSS: return "IDSS";
    case Method::CSS_MEA: return "CSS-MEA";
    case Method::CSS_MED: return "CSS-MED";
    case Method::RVSS_PD: return "RVSS-PD";
    case Method::RVSS_AD: return "RVSS-AD";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

bool is_randomized(Method m) noexcept {
  return m == Method::IDSS || m == Method::CSS_MEA || m == Method::CSS_MED;
}

namespace {

std::string join(const Vector& v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Vector hv_reference(const PointSet& a, const SelectParams& params) {
  if (params.ref_point) {
    if (params.ref_point->size() != a.dim()) throw InvalidInput("reference point dimension mismatch");
    return *params.ref_point;
  }
  return reference_point(ideal_nadir(a).nadir, params.ref_factor);
}

}  // namespace

SelectionResult select(Method method, const PointSet& a, std::size_t k, const SelectParams& params, Seed seed,
                       const Deadline& deadline) {
  if (a.empty()) throw InvalidInput("empty candidate set");
  if (k > a.size()) throw InvalidInput("subset size k exceeds the number of candidates");

  SelectionResult out;
  out.method = std::string(method_name(method));
  if (is_randomized(method)) out.seed = seed;

  std::optional<ReferenceVectorSet> vectors;
  if (method == Method::RVSS_PD || method == Method::RVSS_AD) {
    vectors = reference_vectors_for(a.dim(), k);
    if (!vectors) throw InvalidInput("no reference vector layout has exactly k vectors for this m");
  }

  auto start = std::chrono::steady_clock::now();
  try {
    switch (method) {
      case Method::GHSS: {
        Vector ref = hv_reference(a, params);
        out.params["ref_point"] = join(ref);
        out.indices = select_ghss(a, k, ref, deadline);
        break;
      }
      case Method::GAHSS: {
        Vector ref = hv_reference(a, params);
        out.params["ref_point"] = join(ref);
        out.params["directions"] = std::to_string(params.directions);
        out.seed = seed;
        auto dirs = generate_directions(a.dim(), params.directions, seed.derive("gahss-directions"));
        out.indices = select_gahss(a, k, ref, dirs, deadline);
        break;
      }
      case Method::GIGDSS:
        out.params["reference_set"] = "candidates";
        out.indices = select_gigdss(a, k, deadline);
        break;
      case Method::GIGDPSS:
        out.params["reference_set"] = "candidates";
        out.indices = select_gigdpss(a, k, deadline);
        break;
      case Method::DSS:
        out.params["initial_point"] = "max-objective-sum";
        out.indices = select_dss(a, k, deadline);
        break;
      case Method::IDSS:
        out.params["max_iter"] = std::to_string(params.max_iter);
        out.params["initial_subset"] = "random";
        out.indices = select_idss(a, k, params.max_iter, seed, deadline);
        break;
      case Method::CSS_MEA:
        out.params["max_iter"] = std::to_string(params.max_iter);
        out.indices = select_css_means(a, k, params.max_iter, seed, deadline);
        break;
      case Method::CSS_MED:
        out.params["max_iter"] = std::to_string(params.max_iter);
        out.params["medoid_update"] = "voronoi";
        out.indices = select_css_medoids(a, k, params.max_iter, seed, deadline);
        break;
      case Method::RVSS_PD:
      case Method::RVSS_AD: {
        auto kind = method == Method::RVSS_PD ? RvssDistance::Perpendicular : RvssDistance::Angle;
        out.params["translate"] = params.translate ? "ideal" : "none";
        out.params["vectors"] = std::to_string(vectors->outer_divisions) +
                                (vectors->inner_divisions ? "+" + std::to_string(vectors->inner_divisions) : "");
        out.indices = select_rvss(a, *vectors, kind, params.translate, deadline);
        break;
      }
    }
  } catch (const TimedOut&) {
    out.indices.clear();
    out.timed_out = true;
  }
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace subsel
