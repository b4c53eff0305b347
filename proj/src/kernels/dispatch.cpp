#include "kalmanson/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kalmanson::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(KALMANSON_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("KALMANSON_ISA")) {
      const std::string want(env);
      if (want == "scalar") return Isa::Scalar;
      if (want == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
    }
    return detected_isa();
  }();
  return chosen;
}

std::optional<Quadruple> kalmanson_scan(std::span<const std::int64_t> d, int n, Isa isa) {
  if (n < 0 || d.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("kalmanson_scan expects an n x n matrix");
  }
  if (!isa_available(isa)) throw std::invalid_argument("requested kernel variant is not available");
  switch (isa) {
    case Isa::Scalar: return detail::kalmanson_scan_scalar(d.data(), n);
    case Isa::Avx2:
#if defined(KALMANSON_HAVE_AVX2)
      return detail::kalmanson_scan_avx2(d.data(), n);
#else
      break;
#endif
  }
  return detail::kalmanson_scan_scalar(d.data(), n);
}

std::optional<Quadruple> kalmanson_scan(std::span<const std::int64_t> d, int n) {
  return kalmanson_scan(d, n, active_isa());
}

void down_close(std::span<std::uint8_t> covered, int bits, Isa isa) {
  if (bits < 0 || bits > 30 || covered.size() != (std::size_t{1} << bits)) {
    throw std::invalid_argument("down_close expects a table of 2^bits entries");
  }
  if (!isa_available(isa)) throw std::invalid_argument("requested kernel variant is not available");
  switch (isa) {
    case Isa::Scalar: detail::down_close_scalar(covered.data(), bits); return;
    case Isa::Avx2:
#if defined(KALMANSON_HAVE_AVX2)
      detail::down_close_avx2(covered.data(), bits);
      return;
#else
      break;
#endif
  }
  detail::down_close_scalar(covered.data(), bits);
}

void down_close(std::span<std::uint8_t> covered, int bits) { down_close(covered, bits, active_isa()); }

}  // namespace kalmanson::kernels
