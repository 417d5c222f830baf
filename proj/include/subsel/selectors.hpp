#ifndef SUBSEL_SELECTORS_HPP
#define SUBSEL_SELECTORS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "subsel/core.hpp"
#include "subsel/das_dennis.hpp"
#include "subsel/hypervolume.hpp"

namespace subsel {

enum class Method { GHSS, GAHSS, GIGDSS, GIGDPSS, DSS, IDSS, CSS_MEA, CSS_MED, RVSS_PD, RVSS_AD };

inline constexpr std::array<Method, 10> kAllMethods = {
    Method::GHSS, Method::GAHSS,   Method::GIGDSS,  Method::GIGDPSS, Method::DSS,
    Method::IDSS, Method::CSS_MEA, Method::CSS_MED, Method::RVSS_PD, Method::RVSS_AD,
};

/// Display names: GHSS, GAHSS, GIGDSS, GIGD+SS, DSS, IDSS, CSS-MEA, CSS-MED, RVSS-PD, RVSS-AD.
std::string_view method_name(Method m) noexcept;
Method parse_method(std::string_view name);
bool is_randomized(Method m) noexcept;

struct SelectParams {
  std::size_t max_iter = 1000;      // IDSS, CSS-MEA, CSS-MED
  std::size_t directions = 100;     // GAHSS
  double ref_factor = 1.2;          // GHSS, GAHSS: factor * candidate nadir
  std::optional<Vector> ref_point;  // overrides ref_factor
  bool translate = true;            // RVSS: shift candidates by their ideal point
};

struct SelectionResult {
  std::vector<std::size_t> indices;
  std::string method;
  std::map<std::string, std::string> params;
  std::optional<Seed> seed;
  double runtime_seconds = 0;
  bool timed_out = false;
};

/// Runs one selector; a hit deadline yields timed_out = true and no indices.
SelectionResult select(Method method, const PointSet& candidates, std::size_t k,
                       const SelectParams& params, Seed seed,
                       const Deadline& deadline = Deadline::never());

// Individual selectors. All throw InvalidInput when k is infeasible and
// TimedOut when the deadline passes.

std::vector<std::size_t> select_ghss(const PointSet& a, std::size_t k, const Vector& ref,
                                     const Deadline& deadline = Deadline::never());

std::vector<std::size_t> select_gahss(const PointSet& a, std::size_t k, const Vector& ref,
                                      const DirectionVectorSet& dirs,
                                      const Deadline& deadline = Deadline::never());

/// Greedy IGD / IGD+ minimization using the candidates themselves as reference set.
std::vector<std::size_t> select_gigdss(const PointSet& a, std::size_t k,
                                       const Deadline& deadline = Deadline::never());
std::vector<std::size_t> select_gigdpss(const PointSet& a, std::size_t k,
                                        const Deadline& deadline = Deadline::never());

/// Candidate with the largest objective sum (smallest index on ties).
std::size_t dss_initial_point(const PointSet& a);

/// Farthest-point traversal from `first`; ties go to the smallest index.
std::vector<std::size_t> farthest_point_traversal(const PointSet& a, std::size_t k, std::size_t first,
                                                  const Deadline& deadline = Deadline::never());

std::vector<std::size_t> select_dss(const PointSet& a, std::size_t k,
                                    const Deadline& deadline = Deadline::never());

/**
 * Iterative distance-based selection.
 *
 * Starts from k distinct random candidates. Each iteration takes the closest
 * pair of the subset, drops one of its two points at random and adds the
 * candidate farthest from the remaining points; the swap is undone if the
 * subset's uniformity level would drop.
 */
std::vector<std::size_t> select_idss(const PointSet& a, std::size_t k, std::size_t max_iter, Seed seed,
                                     const Deadline& deadline = Deadline::never());

/// k distinct initial indices for IDSS (partial Fisher-Yates on the seed's engine).
std::vector<std::size_t> idss_initial_subset(std::size_t n, std::size_t k, Seed seed);

/// Lloyd k-means, then per cluster the member with the least total distance to its cluster.
std::vector<std::size_t> select_css_means(const PointSet& a, std::size_t k, std::size_t max_iter, Seed seed,
                                          const Deadline& deadline = Deadline::never());

/// Voronoi-iteration k-medoids; the final medoids are the selection.
std::vector<std::size_t> select_css_medoids(const PointSet& a, std::size_t k, std::size_t max_iter,
                                            Seed seed, const Deadline& deadline = Deadline::never());

enum class RvssDistance { Perpendicular, Angle };

double perpendicular_distance(Point s, Point v) noexcept;
double angle_distance(Point s, Point v) noexcept;

/// For every reference vector, the candidate closest to it (duplicates kept).
std::vector<std::size_t> select_rvss(const PointSet& a, const ReferenceVectorSet& vectors,
                                     RvssDistance kind, bool translate = true,
                                     const Deadline& deadline = Deadline::never());

}  // namespace subsel

#endif
