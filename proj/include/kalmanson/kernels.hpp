#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

/// Data-parallel inner loops with a scalar reference and vectorized
/// variants. Every variant must return exactly what the scalar one does.
namespace kalmanson::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True iff this build contains the variant and the CPU can run it.
bool isa_available(Isa isa);

/// Best available variant.
Isa detected_isa();

/// detected_isa(), unless the KALMANSON_ISA environment variable names an
/// available variant ("scalar" or "avx2").
Isa active_isa();

/// Entries handed to kalmanson_scan must lie in [0, kScanLimit) so that
/// pairwise sums cannot overflow.
inline constexpr std::int64_t kScanLimit = std::int64_t{1} << 61;

/// 0-based positions i < j < k < l.
struct Quadruple {
  int i, j, k, l;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// First quadruple in lexicographic order with
/// max(d[i][j] + d[k][l], d[i][l] + d[j][k]) > d[i][k] + d[j][l],
/// over a row-major n x n matrix.
std::optional<Quadruple> kalmanson_scan(std::span<const std::int64_t> d, int n, Isa isa);
std::optional<Quadruple> kalmanson_scan(std::span<const std::int64_t> d, int n);

/// Closes a 0/1 table over the subsets of a `bits`-element set downward:
/// afterwards covered[s] is nonzero iff some superset of s was nonzero.
/// covered.size() must equal 2^bits.
void down_close(std::span<std::uint8_t> covered, int bits, Isa isa);
void down_close(std::span<std::uint8_t> covered, int bits);

namespace detail {

std::optional<Quadruple> kalmanson_scan_scalar(const std::int64_t* d, int n);
void down_close_scalar(std::uint8_t* covered, int bits);

#if defined(KALMANSON_HAVE_AVX2)
std::optional<Quadruple> kalmanson_scan_avx2(const std::int64_t* d, int n);
void down_close_avx2(std::uint8_t* covered, int bits);
#endif

}  // namespace detail

}  // namespace kalmanson::kernels
