#include "kalmanson/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace kalmanson::kernels::detail {

std::optional<Quadruple> kalmanson_scan_avx2(const std::int64_t* d, int n) {
  for (int i = 0; i < n; ++i) {
    const std::int64_t* di = d + static_cast<std::ptrdiff_t>(i) * n;
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t* dj = d + static_cast<std::ptrdiff_t>(j) * n;
      const __m256i dij = _mm256_set1_epi64x(di[j]);
      for (int k = j + 1; k < n; ++k) {
        const std::int64_t* dk = d + static_cast<std::ptrdiff_t>(k) * n;
        const __m256i dik = _mm256_set1_epi64x(di[k]);
        const __m256i djk = _mm256_set1_epi64x(dj[k]);
        int l = k + 1;
        for (; l + 4 <= n; l += 4) {
          const __m256i djl = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dj + l));
          const __m256i dkl = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dk + l));
          const __m256i dil = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(di + l));
          const __m256i rhs = _mm256_add_epi64(dik, djl);
          const __m256i lhs1 = _mm256_add_epi64(dij, dkl);
          const __m256i lhs2 = _mm256_add_epi64(dil, djk);
          const __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi64(lhs1, rhs), _mm256_cmpgt_epi64(lhs2, rhs));
          const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(bad));
          if (mask != 0) return Quadruple{i, j, k, l + std::countr_zero(static_cast<unsigned>(mask))};
        }
        for (; l < n; ++l) {
          const std::int64_t rhs = di[k] + dj[l];
          if (di[j] + dk[l] > rhs || di[l] + dj[k] > rhs) return Quadruple{i, j, k, l};
        }
      }
    }
  }
  return std::nullopt;
}

void down_close_avx2(std::uint8_t* covered, int bits) {
  const std::size_t size = std::size_t{1} << bits;
  for (int b = 0; b < bits; ++b) {
    const std::size_t stride = std::size_t{1} << b;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
      std::size_t s = base;
      for (; s + 32 <= base + stride; s += 32) {
        auto* lo = reinterpret_cast<__m256i*>(covered + s);
        const auto* hi = reinterpret_cast<const __m256i*>(covered + s + stride);
        _mm256_storeu_si256(lo, _mm256_or_si256(_mm256_loadu_si256(lo), _mm256_loadu_si256(hi)));
      }
      for (; s < base + stride; ++s) covered[s] |= covered[s + stride];
    }
  }
}

}  // namespace kalmanson::kernels::detail
