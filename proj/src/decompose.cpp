#include "kalmanson/geometry.hpp"
#include "kalmanson/kernels.hpp"
#include "scaled.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kalmanson {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Upper-triangle index of the pair (p, q), p < q, 0-based.
std::size_t pair_index(int p, int q, int n) {
  return static_cast<std::size_t>(p * n - p * (p + 1) / 2 + (q - p - 1));
}

/// Exact inverse of the matrix whose columns are the basis rays restricted
/// to the upper triangle.
RationalMatrix invert_basis(int n) {
  const auto basis = ray_basis(n);
  const std::size_t dim = basis.size();
  RationalMatrix a(dim, std::vector<Rational>(2 * dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const RayMatrix r = ray_matrix(basis[col], n);
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) a[pair_index(p, q, n)][col] = r.at(p, q);
    }
  }
  for (std::size_t i = 0; i < dim; ++i) a[i][dim + i] = 1;

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw std::logic_error("ray basis is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (Rational& v : a[col]) v *= inv;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < 2 * dim; ++k) {
        if (a[col][k] != 0) a[row][k] -= factor * a[col][k];
      }
    }
  }
  RationalMatrix inverse(dim);
  for (std::size_t i = 0; i < dim; ++i) inverse[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(dim), a[i].end());
  return inverse;
}

const RationalMatrix& basis_inverse(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RationalMatrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const RationalMatrix>(invert_basis(n));
  return *slot;
}

}  // namespace

std::vector<Rational> cone_coordinates(const Metric& m, const CircularOrdering& ord) {
  const int n = m.n();
  if (ord.n() != n) throw std::invalid_argument("ordering size differs from metric size");
  GroundSet ground(n);
  const Metric pulled = m.pulled_back(ord.order());
  std::vector<Rational> rhs;
  rhs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) rhs.push_back(pulled.at(p, q));
  }
  const RationalMatrix& inverse = basis_inverse(n);
  std::vector<Rational> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    Rational sum = 0;
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      if (inverse[i][k] != 0 && rhs[k] != 0) sum += inverse[i][k] * rhs[k];
    }
    out[i] = sum;
  }
  return out;
}

std::optional<Decomposition> decompose(const Metric& m, const CircularOrdering& ord) {
  const int n = m.n();
  const std::vector<Rational> coords = cone_coordinates(m, ord);
  const auto basis = ray_basis(n);
  const auto order = ord.order();

  Decomposition out{ord, std::vector<Rational>(static_cast<std::size_t>(n)), {}};
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const RayIndex& r = basis[b];
    const Rational& c = coords[b];
    if (r.kind == RayKind::E) {
      out.alpha[static_cast<std::size_t>(order[static_cast<std::size_t>(r.i - 1)] - 1)] = c;
      continue;
    }
    if (c < 0) return std::nullopt;
    if (c == 0) continue;
    out.weights.emplace(ray_to_split(ray_matrix(r, n), order), c);
  }
  return out;
}

std::vector<Rational> reconstruct(const Decomposition& d) {
  const int n = d.ordering.n();
  std::vector<Rational> out(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    const Rational& a = d.alpha[static_cast<std::size_t>(x)];
    if (a == 0) continue;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      out[static_cast<std::size_t>(x * n + y)] += a;
      out[static_cast<std::size_t>(y * n + x)] += a;
    }
  }
  for (const auto& [split, w] : d.weights) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (split.separates(x + 1, y + 1)) out[static_cast<std::size_t>(x * n + y)] += w;
      }
    }
  }
  return out;
}

std::optional<Recognition> recognize(const Metric& m) {
  const int n = m.n();
  if (n < kMinTaxa || n > kMaxRecognitionTaxa) {
    throw std::invalid_argument("recognition supports 4 <= n <= " + std::to_string(kMaxRecognitionTaxa));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;

  const auto scaled = internal::scale_to_int64(m, kernels::kScanLimit);
  const kernels::Isa isa = kernels::active_isa();
  std::vector<std::int64_t> pulled;
  do {
    bool passes = false;
    if (scaled) {
      internal::pull_back(*scaled, order, pulled);
      passes = !kernels::kalmanson_scan(pulled, n, isa).has_value();
    } else {
      passes = is_kalmanson_exact(m.pulled_back(order)).holds;
    }
    if (passes) {
      const CircularOrdering ord = CircularOrdering::canonical(order);
      auto dec = decompose(m, ord);
      if (!dec) throw std::logic_error("Kalmanson ordering without a cone decomposition");
      return Recognition{ord, std::move(*dec)};
    }
  } while (next_canonical_ordering(order));
  return std::nullopt;
}

}  // namespace kalmanson
