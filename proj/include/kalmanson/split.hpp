#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kalmanson {

/// Bit (x - 1) is set iff element x belongs to the set. Elements are 1-based.
using ElementMask = std::uint64_t;

inline constexpr int kMinTaxa = 4;
inline constexpr int kMaxTaxa = 63;

inline constexpr ElementMask element_bit(int x) { return ElementMask{1} << (x - 1); }
inline constexpr ElementMask full_mask(int n) { return (ElementMask{1} << n) - 1; }

/// Size of the ground set {1..n}; 4 <= n <= 63.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  ElementMask mask() const { return full_mask(n_); }

 private:
  int n_;
};

/// A bipartition of {1..n}, stored as the block that does not contain 1.
///
/// Trivial splits (one block a singleton) are representable; the complex
/// itself only uses non-trivial ones.
class Split {
 public:
  /// Canonicalizes `members` (complementing if it contains element 1).
  /// Throws std::invalid_argument for empty/full sets or out-of-range bits.
  static Split from_mask(int n, ElementMask members);

  int n() const { return n_; }
  ElementMask block() const { return block_; }
  ElementMask other_block() const { return full_mask(n_) & ~block_; }

  int size() const;
  bool trivial() const { return size() < 2; }
  bool minimal() const { return size() == 2; }

  bool contains(int x) const { return (block_ & element_bit(x)) != 0; }
  bool separates(int x, int y) const { return contains(x) != contains(y); }

  std::vector<int> members() const;
  std::vector<int> other_members() const;

  friend bool operator==(const Split&, const Split&) = default;
  /// Lexicographic order on the ascending member lists of the canonical block.
  friend std::strong_ordering operator<=>(const Split& a, const Split& b);

 private:
  Split(int n, ElementMask block) : n_(n), block_(block) {}

  int n_;
  ElementMask block_;
};

/// Builds the canonical split whose one side is `members` (1-based labels).
Split make_split(int n, std::span<const int> members);

/// "12|345" for n <= 9, "1,2|3,4,5" above; the side holding 1 comes first.
std::string to_string(const Split& s);
Split parse_split(int n, std::string_view text);

/// All non-trivial splits of {1..n} in ascending Split order.
std::vector<Split> nontrivial_splits(int n);

/// Symmetric 0/1 matrix with zero diagonal, row-major, 0-based indices
/// (row p is element p + 1).
class SplitMetricMatrix {
 public:
  /// Validates entries are 0/1, symmetric, and zero on the diagonal.
  SplitMetricMatrix(int n, std::vector<std::uint8_t> entries);

  int n() const { return n_; }
  std::uint8_t at(int p, int q) const { return entries_[static_cast<std::size_t>(p * n_ + q)]; }
  std::span<const std::uint8_t> entries() const { return entries_; }

  friend bool operator==(const SplitMetricMatrix&, const SplitMetricMatrix&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> entries_;
};

SplitMetricMatrix split_metric(const Split& s);

/// Inverse of split_metric. Throws std::invalid_argument when the matrix
/// is not the metric of a bipartition (e.g. the zero matrix).
Split split_from_metric(const SplitMetricMatrix& m);

/// A set of distinct splits over a common ground set, kept sorted.
class SplitSystem {
 public:
  SplitSystem(int n, std::vector<Split> splits);

  int n() const { return n_; }
  std::span<const Split> splits() const { return splits_; }
  std::size_t size() const { return splits_.size(); }
  bool empty() const { return splits_.empty(); }
  auto begin() const { return splits_.begin(); }
  auto end() const { return splits_.end(); }

  bool contains(const Split& s) const;
  bool has_trivial() const;

  friend bool operator==(const SplitSystem&, const SplitSystem&) = default;

 private:
  int n_;
  std::vector<Split> splits_;
};

/// A circular ordering of {1..n} in dihedral canonical form:
/// order[0] == 1 and order[1] < order[n-1].
class CircularOrdering {
 public:
  /// Accepts any permutation of 1..n and returns its canonical representative.
  static CircularOrdering canonical(std::span<const int> perm);
  static CircularOrdering identity(int n);

  int n() const { return static_cast<int>(order_.size()); }
  std::span<const int> order() const { return order_; }
  int operator[](std::size_t i) const { return order_[i]; }

  /// positions()[x - 1] is the index of element x in order().
  std::vector<int> positions() const;

  /// True iff the block of `s` occupies a contiguous run of the cycle.
  bool is_arc(const Split& s) const;

  /// Non-trivial arcs, ascending. These are the C(n,2) - n vertices of the facet.
  std::vector<Split> arcs() const;

  friend bool operator==(const CircularOrdering&, const CircularOrdering&) = default;
  friend auto operator<=>(const CircularOrdering&, const CircularOrdering&) = default;

 private:
  explicit CircularOrdering(std::vector<int> order) : order_(std::move(order)) {}

  std::vector<int> order_;
};

std::string to_string(const CircularOrdering& ord);

/// Advances `order` to the next canonical ordering in lexicographic order.
/// Start from the identity; returns false once the enumeration is exhausted.
bool next_canonical_ordering(std::vector<int>& order);

/// All (n-1)!/2 canonical orderings in enumeration order.
std::vector<CircularOrdering> canonical_orderings(int n);

/// True iff the set bits of `positions` (within n bits) form one circular run.
bool is_circular_interval(ElementMask positions, int n);

// --- weak compatibility and the join operation ---

struct WeakIncompatibility {
  std::array<Split, 3> splits;
  /// The block chosen as A_i for each split.
  std::array<ElementMask, 3> sides;
  int common;                   ///< a in A1 ∩ A2 ∩ A3
  std::array<int, 3> private_points;  ///< a_i in A_i only
};

struct WeakCompatibilityResult {
  bool compatible;
  std::optional<WeakIncompatibility> witness;
};

WeakCompatibilityResult is_weakly_compatible(const SplitSystem& ss);

/// Chooses which block of each split plays A_i in a join: false selects the
/// canonical block (the one without element 1), true the other block.
struct Orientation {
  bool flip_first = false;
  bool flip_second = false;
};

/// {A1 ∩ A2, B1 ∪ B2}, or nullopt when A1 ∩ A2 is empty. The result may be trivial.
std::optional<Split> join(const Split& s1, const Split& s2, Orientation orientation);

/// True iff all four block intersections of the two splits are nonempty.
bool incompatible(const Split& s1, const Split& s2);

/// The system plus every non-trivial join of an incompatible pair, over all
/// four orientations.
SplitSystem circular_closure(const SplitSystem& ss);

// --- circularity ---

struct CircularityResult {
  bool circular;
  std::optional<CircularOrdering> witness;
};

/// Circularity via the consecutive-ones test on the row class F(ss).
/// Throws std::invalid_argument if ss contains a trivial split.
CircularityResult is_circular(const SplitSystem& ss);

/// Reference route: first canonical ordering (enumeration order) under which
/// every split is an arc.
CircularityResult is_circular_exhaustive(const SplitSystem& ss);

/// Third route: weak compatibility of the circular closure.
bool is_circular_by_closure(const SplitSystem& ss);

}  // namespace kalmanson
