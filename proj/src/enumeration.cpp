#include "kalmanson/enumeration.hpp"
#include "kalmanson/kernels.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace kalmanson {

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // row[j] = S(i, j), built up one i at a time.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt surjections(unsigned n, unsigned k) { return factorial(k) * stirling2(n, k); }

int facet_size(int n) { return n * (n - 3) / 2; }

namespace {

void check_range(int n, int hi, const char* what) {
  if (n < kMinTaxa || n > hi) {
    throw std::invalid_argument(std::string(what) + " supports 4 <= n <= " + std::to_string(hi));
  }
}

}  // namespace

std::vector<Facet> facets(int n) {
  check_range(n, kMaxFacetTaxa, "facet listing");
  const auto splits = nontrivial_splits(n);
  std::unordered_map<ElementMask, int> id;
  for (std::size_t i = 0; i < splits.size(); ++i) id.emplace(splits[i].block(), static_cast<int>(i));

  std::vector<Facet> out;
  for (const CircularOrdering& ord : canonical_orderings(n)) {
    Facet f{ord, {}};
    for (const Split& s : ord.arcs()) f.vertex_ids.push_back(id.at(s.block()));
    out.push_back(std::move(f));
  }
  return out;
}

FVector fvector_bruteforce(int n) {
  check_range(n, kMaxFaceEnumerationTaxa, "face enumeration");
  const auto all = facets(n);
  const int d = facet_size(n);
  const int f0 = static_cast<int>(nontrivial_splits(n).size());
  const std::size_t subsets = std::size_t{1} << d;

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
  std::vector<std::uint8_t> covered(subsets);
  std::vector<int> local(static_cast<std::size_t>(f0), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& ids = all[i].vertex_ids;
    for (int b = 0; b < d; ++b) local[static_cast<std::size_t>(ids[static_cast<std::size_t>(b)])] = b;

    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t j = 0; j < i; ++j) {
      std::uint32_t shared = 0;
      for (int v : all[j].vertex_ids) {
        const int b = local[static_cast<std::size_t>(v)];
        if (b >= 0) shared |= std::uint32_t{1} << b;
      }
      covered[shared] = 1;
    }
    kernels::down_close(covered, d);
    for (std::size_t s = 1; s < subsets; ++s) {
      if (!covered[s]) ++counts[static_cast<std::size_t>(std::popcount(s) - 1)];
    }

    for (int v : ids) local[static_cast<std::size_t>(v)] = -1;
  }

  FVector out{n, {}};
  for (std::uint64_t c : counts) out.counts.emplace_back(BigInt(c));
  return out;
}

FVector fvector_hashset(int n) {
  check_range(n, kMaxFaceEnumerationTaxa, "face enumeration");
  const int d = facet_size(n);
  // f_0 <= 56 for n <= 7, so a face is a 64-bit set of vertex ids.
  std::unordered_set<std::uint64_t> faces;
  for (const Facet& f : facets(n)) {
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << d); ++s) {
      std::uint64_t key = 0;
      for (int b = 0; b < d; ++b) {
        if ((s >> b) & 1) key |= std::uint64_t{1} << f.vertex_ids[static_cast<std::size_t>(b)];
      }
      faces.insert(key);
    }
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
  for (std::uint64_t key : faces) ++counts[static_cast<std::size_t>(std::popcount(key) - 1)];
  FVector out{n, {}};
  for (std::uint64_t c : counts) out.counts.emplace_back(BigInt(c));
  return out;
}

FVector fvector_formulas(int n) {
  GroundSet ground(n);
  const int d = facet_size(n);
  FVector out{n, std::vector<std::optional<BigInt>>(static_cast<std::size_t>(d))};
  const BigInt f0 = (BigInt(1) << (n - 1)) - n - 1;
  const BigInt top = factorial(static_cast<unsigned>(n - 1)) / 2;
  out.counts[0] = f0;
  if (d > 1) out.counts[1] = f0 * (f0 - 1) / 2;
  if (d > 2) out.counts[2] = triangles(n);
  if (d - 2 > 2) out.counts[static_cast<std::size_t>(d - 2)] = (n * (n - 1) / 2 - n) * top;
  out.counts[static_cast<std::size_t>(d - 1)] = top;
  return out;
}

}  // namespace kalmanson
