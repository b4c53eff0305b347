#include "kalmanson/geometry.hpp"
#include "scaled.hpp"

#include <limits>
#include <stdexcept>

namespace kalmanson {

Rational tour_length(const Metric& m, std::span<const int> perm) {
  const int n = m.n();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("tour length differs from metric size");
  Rational total = 0;
  for (int p = 0; p < n; ++p) {
    total += m.at(perm[static_cast<std::size_t>(p)] - 1, perm[static_cast<std::size_t>((p + 1) % n)] - 1);
  }
  return total;
}

Tour tsp_bruteforce(const Metric& m) {
  const int n = m.n();
  if (n < 3 || n > kMaxBruteForceTour) {
    throw std::invalid_argument("brute-force TSP supports 3 <= n <= " + std::to_string(kMaxBruteForceTour));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> best = order;

  // n entries each below 2^58 keep every tour sum below 2^62.
  if (auto scaled = internal::scale_to_int64(m, std::int64_t{1} << 58)) {
    const auto& d = scaled->entries;
    std::int64_t best_len = std::numeric_limits<std::int64_t>::max();
    do {
      std::int64_t len = 0;
      for (int p = 0; p < n; ++p) {
        len += d[static_cast<std::size_t>((order[static_cast<std::size_t>(p)] - 1) * n +
                                          order[static_cast<std::size_t>((p + 1) % n)] - 1)];
      }
      if (len < best_len) {
        best_len = len;
        best = order;
      }
    } while (next_canonical_ordering(order));
  } else {
    std::optional<Rational> best_len;
    do {
      Rational len = tour_length(m, order);
      if (!best_len || len < *best_len) {
        best_len = std::move(len);
        best = order;
      }
    } while (next_canonical_ordering(order));
  }
  Rational length = tour_length(m, best);
  return Tour{std::move(best), std::move(length)};
}

std::optional<Tour> tsp_kalmanson(const Metric& m) {
  auto rec = recognize(m);
  if (!rec) return std::nullopt;
  std::vector<int> perm(rec->ordering.order().begin(), rec->ordering.order().end());
  Rational length = tour_length(m, perm);
  return Tour{std::move(perm), std::move(length)};
}

}  // namespace kalmanson
