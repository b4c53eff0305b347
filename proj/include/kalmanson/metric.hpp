#pragma once

#include "kalmanson/numeric.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kalmanson {

/// Symmetric non-negative n x n matrix of exact rationals with a zero
/// diagonal. Row-major, 0-based indices (row p is element p + 1). The
/// triangle inequality is not assumed.
class Metric {
 public:
  Metric(int n, std::vector<Rational> entries);

  static Metric from_integers(int n, std::span<const long long> entries);

  int n() const { return n_; }
  const Rational& at(int p, int q) const { return entries_[static_cast<std::size_t>(p * n_ + q)]; }
  std::span<const Rational> entries() const { return entries_; }

  /// The matrix read along `order` (1-based labels): result(p, q) = d(order[p], order[q]).
  Metric pulled_back(std::span<const int> order) const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// Whitespace-separated rows, one row per non-blank line. Entries may be
/// integers, decimals, or p/q. Throws std::invalid_argument on malformed,
/// asymmetric, negative, or non-zero-diagonal input.
Metric parse_metric_text(std::string_view text);
std::string to_text(const Metric& m);

/// First (x, y, z), 1-based, with d(x, z) > d(x, y) + d(y, z).
std::optional<std::array<int, 3>> triangle_violation(const Metric& m);

}  // namespace kalmanson
