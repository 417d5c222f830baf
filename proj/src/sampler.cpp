#include "subsel/sampler.hpp"

#include <cmath>
#include <string>

namespace subsel {

std::string_view to_string(FrontKind kind) noexcept {
  switch (kind) {
    case FrontKind::LinearTriangular: return "LinearTriangular";
    case FrontKind::ConvexTriangular: return "ConvexTriangular";
    case FrontKind::ConcaveTriangular: return "ConcaveTriangular";
    case FrontKind::LinearInverted: return "LinearInverted";
    case FrontKind::ConvexInverted: return "ConvexInverted";
    case FrontKind::ConcaveInverted: return "ConcaveInverted";
  }
  return "?";
}

FrontKind parse_front_kind(std::string_view name) {
  for (FrontKind k : kAllFrontKinds)
    if (to_string(k) == name) return k;
  throw InvalidInput("unknown front kind '" + std::string(name) + "'");
}

FrontShape shape_of(FrontKind kind) noexcept {
  switch (kind) {
    case FrontKind::LinearTriangular: return {1.0, false};
    case FrontKind::ConvexTriangular: return {0.5, false};
    case FrontKind::ConcaveTriangular: return {2.0, false};
    case FrontKind::LinearInverted: return {1.0, true};
    case FrontKind::ConvexInverted: return {2.0, true};
    case FrontKind::ConcaveInverted: return {0.5, true};
  }
  return {1.0, false};
}

PointSet sample_lp_sphere(std::size_t m, double p, std::size_t n, Seed seed) {
  if (m < 2) throw InvalidInput("sphere sampling needs m >= 2");
  if (n < 1) throw InvalidInput("sphere sampling needs n >= 1");
  if (!(p > 0) || !std::isfinite(p)) throw InvalidInput("sphere exponent p must be positive");

  auto engine = seed.derive("lp-sphere").engine();
  std::gamma_distribution<double> gamma(1.0 / p, 1.0);

  std::vector<double> data(n * m);
  std::vector<double> x(m);
  for (std::size_t i = 0; i < n; ++i) {
    double norm_p = 0;
    // A draw of all zeros has no direction; redraw (probability ~0).
    do {
      norm_p = 0;
      for (std::size_t j = 0; j < m; ++j) {
        double g = gamma(engine);
        x[j] = std::pow(g, 1.0 / p);
        norm_p += g;  // |x_j|^p == g
      }
    } while (!(norm_p > 0));

    double scale = std::pow(norm_p, 1.0 / p);
    for (std::size_t j = 0; j < m; ++j) data[i * m + j] = x[j] / scale;
  }
  return PointSet(m, std::move(data));
}

PointSet generate_front(const FrontSpec& spec) {
  FrontShape shape = shape_of(spec.kind);
  PointSet g = sample_lp_sphere(spec.m, shape.p, spec.n, spec.seed);
  std::string label = std::string(to_string(spec.kind)) + "_m" + std::to_string(spec.m) + "_n" +
                      std::to_string(spec.n);
  if (!shape.inverted) {
    g.set_label(std::move(label));
    return g;
  }
  std::vector<double> f = g.data();
  for (double& v : f) v = 1.0 - v;
  return PointSet(spec.m, std::move(f), std::move(label));
}

double front_residual(FrontKind kind, Point f) {
  FrontShape shape = shape_of(kind);
  double s = 0;
  for (double v : f) s += std::pow(shape.inverted ? 1.0 - v : v, shape.p);
  return s - 1.0;
}

}  // namespace subsel
