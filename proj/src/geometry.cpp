#include "kalmanson/geometry.hpp"
#include "kalmanson/kernels.hpp"
#include "scaled.hpp"

#include <stdexcept>

namespace kalmanson {

namespace internal {

std::optional<ScaledMetric> scale_to_int64(const Metric& m, std::int64_t limit) {
  BigInt scale = 1;
  for (const Rational& v : m.entries()) {
    const BigInt den = denominator(v);
    if (den != 1) scale = boost::multiprecision::lcm(scale, den);
  }
  ScaledMetric out{m.n(), {}, scale};
  out.entries.reserve(m.entries().size());
  for (const Rational& v : m.entries()) {
    const BigInt scaled = numerator(v) * (scale / denominator(v));
    if (scaled >= limit) return std::nullopt;
    out.entries.push_back(scaled.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace internal

namespace {

std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return order;
}

KalmansonResult exact_scan(const Metric& d) {
  const int n = d.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const Rational rhs = d.at(i, k) + d.at(j, l);
          if (d.at(i, j) + d.at(k, l) > rhs || d.at(i, l) + d.at(j, k) > rhs) {
            return {false, KalmansonViolation{i + 1, j + 1, k + 1, l + 1}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

KalmansonResult scan_along(const Metric& m, std::span<const int> order) {
  if (auto scaled = internal::scale_to_int64(m, kernels::kScanLimit)) {
    std::vector<std::int64_t> pulled;
    internal::pull_back(*scaled, order, pulled);
    if (auto q = kernels::kalmanson_scan(pulled, m.n())) {
      return {false, KalmansonViolation{q->i + 1, q->j + 1, q->k + 1, q->l + 1}};
    }
    return {true, std::nullopt};
  }
  return exact_scan(m.pulled_back(order));
}

void check_permutation(std::span<const int> sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation length differs from n");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : sigma) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

}  // namespace

KalmansonResult is_kalmanson(const Metric& m) { return scan_along(m, identity_order(m.n())); }

KalmansonResult is_kalmanson_under(const Metric& m, const CircularOrdering& ord) {
  if (ord.n() != m.n()) throw std::invalid_argument("ordering size differs from metric size");
  return scan_along(m, ord.order());
}

KalmansonResult is_kalmanson_exact(const Metric& m) { return exact_scan(m); }

std::string to_string(const RayIndex& r) {
  switch (r.kind) {
    case RayKind::E: return "E(" + std::to_string(r.i) + ")";
    case RayKind::V: return "V(" + std::to_string(r.i) + ")";
    case RayKind::VV: return "V(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
  }
  return "?";
}

RayMatrix ray_matrix(RayIndex index, int n) {
  GroundSet ground(n);
  const int i = index.i;
  const int j = index.j;
  switch (index.kind) {
    case RayKind::E:
      if (i < 1 || i > n) throw std::invalid_argument("E^(i) needs 1 <= i <= n");
      break;
    case RayKind::V:
      if (i < 2 || i > n - 2) throw std::invalid_argument("V^(i) needs 2 <= i <= n-2");
      break;
    case RayKind::VV:
      if (i < 1 || i > n - 3 || j < i + 2 || j > n - 1) {
        throw std::invalid_argument("V^(i,j) needs 1 <= i <= n-3 and i+2 <= j <= n-1");
      }
      break;
  }
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n * n), 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      bool one = false;
      switch (index.kind) {
        case RayKind::E: one = (p == i) != (q == i); break;
        case RayKind::V: one = (p <= i && i < q) || (q <= i && i < p); break;
        case RayKind::VV: {
          auto upper = [i, j](int a, int b) { return (a <= i && i < b && b <= j) || (i < a && a <= j && j < b); };
          one = upper(p, q) || upper(q, p);
          break;
        }
      }
      entries[static_cast<std::size_t>((p - 1) * n + (q - 1))] = one ? 1 : 0;
    }
  }
  return RayMatrix(index, SplitMetricMatrix(n, std::move(entries)));
}

std::vector<RayIndex> ray_basis(int n) {
  GroundSet ground(n);
  std::vector<RayIndex> out;
  for (int i = 1; i <= n; ++i) out.push_back({RayKind::E, i});
  for (int i = 2; i <= n - 2; ++i) out.push_back({RayKind::V, i});
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) out.push_back({RayKind::VV, i, j});
  }
  return out;
}

Split ray_to_split(const RayMatrix& r, std::span<const int> sigma) {
  const int n = r.n();
  check_permutation(sigma, n);
  int first = 0;
  int last = 0;
  switch (r.index().kind) {
    case RayKind::E: throw std::invalid_argument("E rays span the lineality space and carry trivial splits");
    case RayKind::V:
      first = 1;
      last = r.index().i;
      break;
    case RayKind::VV:
      first = r.index().i + 1;
      last = r.index().j;
      break;
  }
  ElementMask block = 0;
  for (int p = first; p <= last; ++p) block |= element_bit(sigma[static_cast<std::size_t>(p - 1)]);
  return Split::from_mask(n, block);
}

Split relabel(const Split& s, std::span<const int> sigma) {
  check_permutation(sigma, s.n());
  ElementMask block = 0;
  for (int x : s.members()) block |= element_bit(sigma[static_cast<std::size_t>(x - 1)]);
  return Split::from_mask(s.n(), block);
}

}  // namespace kalmanson
