#include "kalmanson/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kalmanson {

GeneratedMetric random_circular_metric(int n, std::uint64_t seed, bool scramble, int max_weight) {
  GroundSet ground(n);
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  std::mt19937_64 rng(seed);
  const auto draw = [&] { return Rational(static_cast<long long>(rng() % static_cast<std::uint64_t>(max_weight + 1))); };

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  if (scramble) std::shuffle(order.begin(), order.end(), rng);
  const CircularOrdering ord = CircularOrdering::canonical(order);

  Decomposition d{ord, {}, {}};
  for (int x = 0; x < n; ++x) d.alpha.push_back(draw());
  for (const Split& s : ord.arcs()) {
    Rational w = draw();
    if (w > 0) d.weights.emplace(s, std::move(w));
  }
  return GeneratedMetric{Metric(n, reconstruct(d)), std::move(d)};
}

}  // namespace kalmanson
