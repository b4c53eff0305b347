#pragma once

#include "kalmanson/geometry.hpp"

#include <cstdint>

namespace kalmanson {

struct GeneratedMetric {
  Metric metric;
  Decomposition decomposition;
};

/// A non-negative integer combination of the arcs and trivial splits of a
/// circular ordering. The ordering is uniform over all orderings when
/// `scramble` is set and the identity otherwise. Weights lie in
/// [0, max_weight]; the same seed always gives the same metric.
GeneratedMetric random_circular_metric(int n, std::uint64_t seed, bool scramble = true, int max_weight = 3);

}  // namespace kalmanson
