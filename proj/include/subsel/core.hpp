#ifndef SUBSEL_CORE_HPP
#define SUBSEL_CORE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subsel {

/// Raised for malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for file system failures (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by Deadline::check() once the budget is exhausted.
class TimedOut : public std::runtime_error {
 public:
  TimedOut() : std::runtime_error("time limit exceeded") {}
};

using Vector = std::vector<double>;
using Point = std::span<const double>;

/**
 * Ordered collection of m-dimensional objective vectors (minimization).
 *
 * Storage is a flat row-major buffer; row i is exposed as a span. Duplicate
 * rows are allowed. Every entry is finite and m >= 2.
 */
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t m, std::string label = {});
  PointSet(std::size_t m, std::vector<double> data, std::string label = {});

  static PointSet from_rows(const std::vector<Vector>& rows, std::string label = {});

  std::size_t dim() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_ == 0 ? 0 : data_.size() / m_; }
  bool empty() const noexcept { return data_.empty(); }

  Point operator[](std::size_t i) const noexcept { return {data_.data() + i * m_, m_}; }
  const std::vector<double>& data() const noexcept { return data_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void push_back(Point p);
  void reserve(std::size_t n) { data_.reserve(n * m_); }

  /// Rows at `indices`, in that order (repeats allowed).
  PointSet subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.m_ == b.m_ && a.data_ == b.data_;
  }

 private:
  std::size_t m_ = 0;
  std::vector<double> data_;
  std::string label_;
};

/// True iff a Pareto-dominates b: no worse everywhere, strictly better somewhere.
bool dominates(Point a, Point b);

/// True iff a is no worse than b in every objective.
bool weakly_dominates(Point a, Point b) noexcept;

/// Indices (ascending) of the points not dominated by any other point.
std::vector<std::size_t> nondominated_indices(const PointSet& a);

/// Non-dominated points of `a` in their original order; duplicates are kept.
PointSet nondominated_filter(const PointSet& a);

struct IdealNadir {
  Vector ideal;
  Vector nadir;
};

IdealNadir ideal_nadir(const PointSet& a);

/// Componentwise factor * nadir.
Vector reference_point(Point nadir, double factor = 1.2);

double squared_distance(Point a, Point b) noexcept;
double distance(Point a, Point b) noexcept;

/**
 * 64-bit seed with deterministic named child streams.
 *
 * derive(name) = splitmix64(value ^ fnv1a64(name)); engines are
 * std::mt19937_64 seeded with the (derived) value.
 */
class Seed {
 public:
  constexpr Seed() = default;
  constexpr explicit Seed(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const noexcept { return value_; }
  Seed derive(std::string_view stream) const noexcept;
  std::mt19937_64 engine() const { return std::mt19937_64(value_); }

  friend constexpr bool operator==(Seed a, Seed b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_ = 0;
};

/// Cooperative cancellation point shared by selectors.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline never() { return Deadline(Clock::time_point::max()); }
  static Deadline after(double seconds);

  bool expired() const { return at_ != Clock::time_point::max() && Clock::now() >= at_; }
  void check() const {
    if (expired()) throw TimedOut();
  }

 private:
  explicit Deadline(Clock::time_point at) : at_(at) {}
  Clock::time_point at_;
};

}  // namespace subsel

#endif
