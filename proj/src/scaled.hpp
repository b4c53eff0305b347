#pragma once

#include "kalmanson/metric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kalmanson::internal {

/// A metric multiplied by the lcm of its denominators, when every entry
/// then fits below `limit`.
struct ScaledMetric {
  int n;
  std::vector<std::int64_t> entries;
  BigInt scale;
};

std::optional<ScaledMetric> scale_to_int64(const Metric& m, std::int64_t limit);

/// out(p, q) = d(order[p], order[q]) for 1-based `order`.
inline void pull_back(const ScaledMetric& d, std::span<const int> order, std::vector<std::int64_t>& out) {
  const int n = d.n;
  out.resize(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p) {
    const std::int64_t* row = d.entries.data() + static_cast<std::ptrdiff_t>(order[static_cast<std::size_t>(p)] - 1) * n;
    std::int64_t* dst = out.data() + static_cast<std::ptrdiff_t>(p) * n;
    for (int q = 0; q < n; ++q) dst[q] = row[order[static_cast<std::size_t>(q)] - 1];
  }
}

}  // namespace kalmanson::internal
