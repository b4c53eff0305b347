#pragma once

#include "kalmanson/metric.hpp"
#include "kalmanson/numeric.hpp"
#include "kalmanson/split.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kalmanson {

// --- Kalmanson conditions ---

/// Positions i < j < k < l, 1-based.
struct KalmansonViolation {
  int i, j, k, l;

  friend bool operator==(const KalmansonViolation&, const KalmansonViolation&) = default;
};

struct KalmansonResult {
  bool holds;
  std::optional<KalmansonViolation> violation;  ///< first in lexicographic order
};

/// max(d_ij + d_kl, d_il + d_jk) <= d_ik + d_jl for all i < j < k < l.
KalmansonResult is_kalmanson(const Metric& m);

/// The same conditions read along a circular ordering; the violation holds
/// positions in `ord`.
KalmansonResult is_kalmanson_under(const Metric& m, const CircularOrdering& ord);

/// Exact-rational scan with no integer scaling or vector kernels. Reference
/// for the fast path.
KalmansonResult is_kalmanson_exact(const Metric& m);

// --- lineality and ray matrices ---

enum class RayKind { E, V, VV };

/// E^(i): 1 <= i <= n. V^(i): 2 <= i <= n-2. V^(i,j): 1 <= i <= n-3, i+2 <= j <= n-1.
struct RayIndex {
  RayKind kind;
  int i;
  int j = 0;

  friend bool operator==(const RayIndex&, const RayIndex&) = default;
};

std::string to_string(const RayIndex& r);

class RayMatrix {
 public:
  RayMatrix(RayIndex index, SplitMetricMatrix matrix) : index_(index), matrix_(std::move(matrix)) {}

  const RayIndex& index() const { return index_; }
  int n() const { return matrix_.n(); }
  std::uint8_t at(int p, int q) const { return matrix_.at(p, q); }
  const SplitMetricMatrix& matrix() const { return matrix_; }

 private:
  RayIndex index_;
  SplitMetricMatrix matrix_;
};

/// Throws std::invalid_argument for indices outside the ranges above.
RayMatrix ray_matrix(RayIndex index, int n);

/// E^(1..n), V^(2..n-2), then V^(i,j) in lexicographic (i, j) order:
/// C(n,2) matrices in all.
std::vector<RayIndex> ray_basis(int n);

/// The split of sigma·V, where sigma lists sigma(1..n): V^(i) maps to
/// {sigma(1..i)} | rest and V^(i,j) to {sigma(i+1..j)} | rest.
/// Throws std::invalid_argument for E rays or a bad permutation.
Split ray_to_split(const RayMatrix& r, std::span<const int> sigma);

/// Relabels each element x of the split as sigma(x).
Split relabel(const Split& s, std::span<const int> sigma);

// --- circular decomposition ---

struct Decomposition {
  CircularOrdering ordering;
  /// alpha[x - 1] is the weight of E^(x) (the trivial split isolating x).
  std::vector<Rational> alpha;
  /// Non-trivial arcs of `ordering` with strictly positive weight.
  std::map<Split, Rational> weights;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Coordinates of the metric read along `ord` in the ray_basis order.
std::vector<Rational> cone_coordinates(const Metric& m, const CircularOrdering& ord);

/// The decomposition along `ord` if every ray coefficient is >= 0.
std::optional<Decomposition> decompose(const Metric& m, const CircularOrdering& ord);

/// sum_x alpha_x E^(x) + sum_S w_S Delta_S, row-major n x n.
std::vector<Rational> reconstruct(const Decomposition& d);

struct Recognition {
  CircularOrdering ordering;
  Decomposition decomposition;
};

inline constexpr int kMaxRecognitionTaxa = 10;

/// First canonical ordering (enumeration order) under which the Kalmanson
/// conditions hold, with its decomposition. Throws for n outside [4, 10].
std::optional<Recognition> recognize(const Metric& m);

// --- travelling salesman ---

struct Tour {
  std::vector<int> perm;  ///< 1-based labels, cyclic
  Rational length;
};

Rational tour_length(const Metric& m, std::span<const int> perm);

inline constexpr int kMaxBruteForceTour = 12;

/// Exact optimum over the (n-1)!/2 canonical tours; the first optimal one in
/// enumeration order. Throws for n outside [3, 12].
Tour tsp_bruteforce(const Metric& m);

/// Tour along the recognized circular ordering, or nullopt when the metric is
/// not permuted Kalmanson.
std::optional<Tour> tsp_kalmanson(const Metric& m);

}  // namespace kalmanson
