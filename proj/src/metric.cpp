#include "kalmanson/metric.hpp"

#include <sstream>
#include <stdexcept>

namespace kalmanson {

Metric::Metric(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("metric must be a non-empty n x n matrix");
  }
  for (int p = 0; p < n; ++p) {
    if (at(p, p) != 0) throw std::invalid_argument("metric diagonal must be zero");
    for (int q = p + 1; q < n; ++q) {
      if (at(p, q) != at(q, p)) {
        throw std::invalid_argument("metric is not symmetric at (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
      }
      if (at(p, q) < 0) {
        throw std::invalid_argument("metric has a negative entry at (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
      }
    }
  }
}

Metric Metric::from_integers(int n, std::span<const long long> entries) {
  std::vector<Rational> values;
  values.reserve(entries.size());
  for (long long v : entries) values.emplace_back(v);
  return Metric(n, std::move(values));
}

Metric Metric::pulled_back(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != n_) throw std::invalid_argument("ordering length differs from metric size");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int x : order) {
    if (x < 1 || x > n_ || seen[static_cast<std::size_t>(x - 1)]) throw std::invalid_argument("ordering is not a permutation");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  std::vector<Rational> out(entries_.size());
  for (int p = 0; p < n_; ++p) {
    for (int q = 0; q < n_; ++q) {
      out[static_cast<std::size_t>(p * n_ + q)] = at(order[static_cast<std::size_t>(p)] - 1, order[static_cast<std::size_t>(q)] - 1);
    }
  }
  return Metric(n_, std::move(out));
}

Metric parse_metric_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<Rational>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    std::vector<Rational> row;
    while (tokens >> token) {
      try {
        row.push_back(parse_rational(token));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("metric file is empty");
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("metric rows must have n entries each");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Metric(n, std::move(entries));
}

std::string to_text(const Metric& m) {
  std::string out;
  for (int p = 0; p < m.n(); ++p) {
    for (int q = 0; q < m.n(); ++q) {
      if (q > 0) out += ' ';
      out += to_string(m.at(p, q));
    }
    out += '\n';
  }
  return out;
}

std::optional<std::array<int, 3>> triangle_violation(const Metric& m) {
  const int n = m.n();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (m.at(x, z) > m.at(x, y) + m.at(y, z)) return std::array<int, 3>{x + 1, y + 1, z + 1};
      }
    }
  }
  return std::nullopt;
}

}  // namespace kalmanson
