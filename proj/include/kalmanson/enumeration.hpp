#pragma once

#include "kalmanson/numeric.hpp"
#include "kalmanson/split.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace kalmanson {

BigInt stirling2(unsigned n, unsigned k);

/// M(n, k) = k! S(n, k), the number of surjections from an n-set onto a k-set.
BigInt surjections(unsigned n, unsigned k);

/// d = n(n-3)/2, the number of vertices of a facet.
int facet_size(int n);

inline constexpr int kMaxFacetTaxa = 9;
inline constexpr int kMaxFaceEnumerationTaxa = 7;
inline constexpr int kMaxTriangleBruteForceTaxa = 9;

/// Vertex ids index into nontrivial_splits(n) and are ascending.
struct Facet {
  CircularOrdering ordering;
  std::vector<int> vertex_ids;
};

/// One facet per canonical circular ordering, in enumeration order.
/// Throws for n outside [4, 9].
std::vector<Facet> facets(int n);

/// counts[k] is f_k, the number of faces with k + 1 vertices, for
/// k = 0..d-1. Unknown entries are empty.
struct FVector {
  int n;
  std::vector<std::optional<BigInt>> counts;
};

/// Every face counted once, at the first facet (enumeration order) that
/// contains it. Throws for n outside [4, 7].
FVector fvector_bruteforce(int n);

/// Same counts through a global set of faces; slower, used as a cross-check.
FVector fvector_hashset(int n);

/// f_0, f_1, f_2, f_{d-2} and f_{d-1} from closed forms. The ridge formula
/// is only used when d - 2 > 2, since at n = 4 it would overwrite f_0.
FVector fvector_formulas(int n);

/// Number of triangles of the complex. Uses the closed form with its first
/// term negated, which is the form that agrees with direct enumeration.
BigInt triangles(int n);

/// The same closed form with a positive first term. Kept so the sign
/// difference stays visible and testable.
Rational triangles_positive_first_term(int n);

/// counts[i][j]: circular 3-split systems whose F-image has exactly i column
/// types among {011, 101, 110} and j among {001, 010, 100, 111}.
struct FijTable {
  int n;
  std::array<std::array<std::uint64_t, 4>, 3> counts{};

  std::uint64_t total() const;
};

struct TriangleCount {
  std::uint64_t count;
  FijTable table;
};

/// Tests every 3-subset of non-trivial splits. Throws for n outside [4, 9].
TriangleCount triangles_bruteforce(int n);

/// The four summands of the closed form for |F_{0,3}|.
std::array<Rational, 4> count_F03_terms(int n);
BigInt count_F03(int n);

}  // namespace kalmanson
