#include "kalmanson/kernels.hpp"

namespace kalmanson::kernels::detail {

std::optional<Quadruple> kalmanson_scan_scalar(const std::int64_t* d, int n) {
  for (int i = 0; i < n; ++i) {
    const std::int64_t* di = d + static_cast<std::ptrdiff_t>(i) * n;
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t* dj = d + static_cast<std::ptrdiff_t>(j) * n;
      for (int k = j + 1; k < n; ++k) {
        const std::int64_t* dk = d + static_cast<std::ptrdiff_t>(k) * n;
        for (int l = k + 1; l < n; ++l) {
          const std::int64_t rhs = di[k] + dj[l];
          if (di[j] + dk[l] > rhs || di[l] + dj[k] > rhs) return Quadruple{i, j, k, l};
        }
      }
    }
  }
  return std::nullopt;
}

void down_close_scalar(std::uint8_t* covered, int bits) {
  const std::size_t size = std::size_t{1} << bits;
  for (int b = 0; b < bits; ++b) {
    const std::size_t stride = std::size_t{1} << b;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
      for (std::size_t s = base; s < base + stride; ++s) covered[s] |= covered[s + stride];
    }
  }
}

}  // namespace kalmanson::kernels::detail
