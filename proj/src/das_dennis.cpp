#include "subsel/das_dennis.hpp"

#include <functional>

namespace subsel {

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

ReferenceVectorSet das_dennis(std::size_t m, std::size_t h) {
  if (m < 2) throw InvalidInput("reference vectors need m >= 2");
  if (h < 1) throw InvalidInput("lattice divisions must be >= 1");
  PointSet out(m);
  out.reserve(binomial(h + m - 1, m - 1));
  std::vector<std::size_t> counts(m, 0);
  Vector v(m);
  const double hd = static_cast<double>(h);

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == m) {
      counts[pos] = left;
      for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<double>(counts[j]) / hd;
      out.push_back(v);
      return;
    }
    for (std::size_t c = left + 1; c-- > 0;) {
      counts[pos] = c;
      fill(pos + 1, left - c);
    }
  };
  fill(0, h);
  return {std::move(out), h, 0};
}

ReferenceVectorSet das_dennis_two_layer(std::size_t m, std::size_t h1, std::size_t h2) {
  ReferenceVectorSet outer = das_dennis(m, h1);
  ReferenceVectorSet inner = das_dennis(m, h2);
  const double shift = 1.0 / (2.0 * static_cast<double>(m));
  Vector v(m);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    auto w = inner.vectors[i];
    for (std::size_t j = 0; j < m; ++j) v[j] = w[j] / 2 + shift;
    outer.vectors.push_back(v);
  }
  outer.inner_divisions = h2;
  return outer;
}

std::optional<std::size_t> default_subset_size(std::size_t m) noexcept {
  switch (m) {
    case 3: return 91;
    case 5: return 210;
    case 8: return 156;
    case 10: return 275;
    default: return std::nullopt;
  }
}

std::optional<ReferenceVectorSet> reference_vectors_for(std::size_t m, std::size_t k) {
  if (m == 3 && k == 91) return das_dennis(3, 12);
  if (m == 5 && k == 210) return das_dennis(5, 6);
  if (m == 8 && k == 156) return das_dennis_two_layer(8, 3, 2);
  if (m == 10 && k == 275) return das_dennis_two_layer(10, 3, 2);
  for (std::size_t h = 1;; ++h) {
    std::size_t c = binomial(h + m - 1, m - 1);
    if (c == k) return das_dennis(m, h);
    if (c > k) return std::nullopt;
  }
}

}  // namespace subsel
