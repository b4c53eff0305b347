#include "kalmanson/consecutive_ones.hpp"
#include "kalmanson/enumeration.hpp"

#include <bit>
#include <stdexcept>

namespace kalmanson {

namespace {

Rational M(int n, int k) {
  if (n < 0 || k < 0) return 0;
  return Rational(surjections(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

Rational triangle_form(int n, int first_sign) {
  GroundSet ground(n);
  const int t = n - 1;
  Rational sum = Rational(first_sign * (t - 2) * (t - 1) * t, 6);
  sum += 2 * (t - 1) * t * (1 + M(t - 2, 2));
  sum -= 5 * t * M(t - 1, 2) + 8 * t * M(t - 1, 3) + 2 * t * M(t - 1, 4);
  sum += Rational(19, 6) * M(t, 3) + Rational(55, 6) * M(t, 4) + 7 * M(t, 5) + 2 * M(t, 6);
  return sum;
}

// Column codes with bit r for row r of a 3-row matrix.
constexpr unsigned kTypeI = 0b01101000;    // 011, 101, 110
constexpr unsigned kTypeIII = 0b10010110;  // 001, 010, 100, 111

}  // namespace

BigInt triangles(int n) {
  const Rational v = triangle_form(n, -1);
  if (denominator(v) != 1) throw std::logic_error("triangle count is not an integer");
  return numerator(v);
}

Rational triangles_positive_first_term(int n) { return triangle_form(n, 1); }

std::uint64_t FijTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) sum += c;
  }
  return sum;
}

TriangleCount triangles_bruteforce(int n) {
  if (n < kMinTaxa || n > kMaxTriangleBruteForceTaxa) {
    throw std::invalid_argument("triangle enumeration supports 4 <= n <= " + std::to_string(kMaxTriangleBruteForceTaxa));
  }
  const auto splits = nontrivial_splits(n);
  TriangleCount out{0, FijTable{n, {}}};
  std::vector<RowBits> rows(3);
  for (std::size_t a = 0; a < splits.size(); ++a) {
    for (std::size_t b = a + 1; b < splits.size(); ++b) {
      for (std::size_t c = b + 1; c < splits.size(); ++c) {
        rows[0] = splits[a].block();
        rows[1] = splits[b].block();
        rows[2] = splits[c].block();
        const BinaryMatrix m(n, rows);
        if (!is_circ1r(m).holds) continue;
        ++out.count;
        unsigned types = 0;
        for (int col = 0; col < n; ++col) types |= 1u << m.column(col);
        const int i = std::popcount(types & kTypeI);
        const int j = std::popcount(types & kTypeIII);
        ++out.table.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
  }
  return out;
}

std::array<Rational, 4> count_F03_terms(int n) {
  GroundSet ground(n);
  const Rational a = n - 1;
  const Rational b = n - 2;
  const Rational c = n - 3;
  return {Rational(1, 6) * (M(n - 1, 3) - 3 * a * M(n - 2, 2) + 3 * a * b),
          Rational(1, 6) * (M(n - 1, 4) - 3 * a * M(n - 2, 3) + 3 * a * b * M(n - 3, 2) - a * b * c),
          Rational(1, 2) * (M(n - 1, 3) - a * M(n - 2, 2)),
          Rational(1, 2) * (M(n - 1, 4) - a * M(n - 2, 3))};
}

BigInt count_F03(int n) {
  Rational sum = 0;
  for (const Rational& term : count_F03_terms(n)) sum += term;
  if (denominator(sum) != 1) throw std::logic_error("F_{0,3} count is not an integer");
  return numerator(sum);
}

}  // namespace kalmanson
