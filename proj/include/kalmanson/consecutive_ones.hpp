#pragma once

#include "kalmanson/binary_matrix.hpp"
#include "kalmanson/split.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kalmanson {

/// perm[p] is the original column placed at position p (0-based).
struct ColumnWitness {
  std::vector<int> perm;
};

struct OnesResult {
  bool holds;
  std::optional<ColumnWitness> witness;
};

/// Consecutive ones for rows. Exact search over distinct column types;
/// the witness is the lexicographically least order in which identical
/// columns stay adjacent.
OnesResult is_c1r(const BinaryMatrix& m);

/// Circular ones for rows, decided as is_c1r of the row-complemented matrix.
/// The returned permutation certifies circular ones for `m` itself.
OnesResult is_circ1r(const BinaryMatrix& m);

/// Complements every row whose first entry is 1.
BinaryMatrix complement_rows_by_first_column(const BinaryMatrix& m);

bool has_consecutive_ones(const BinaryMatrix& m, std::span<const int> perm);
bool has_circular_ones(const BinaryMatrix& m, std::span<const int> perm);

// --- Tucker configurations ---

enum class TuckerFamily { I, II, III, IV, V };

struct TuckerConfig {
  TuckerFamily family;
  int k = 1;  ///< ignored for IV and V

  friend bool operator==(const TuckerConfig&, const TuckerConfig&) = default;
};

std::string to_string(const TuckerConfig& c);

/// I_k: (k+2)x(k+2), II_k: (k+3)x(k+3), III_k: (k+2)x(k+3), IV: 4x6, V: 4x5.
/// Throws std::invalid_argument when k < 1 for the parametrized families.
BinaryMatrix tucker_config_matrix(TuckerConfig c);

/// rows[i] / cols[j] are the rows / columns of `m` matched to row i / column j
/// of the configuration matrix (0-based).
struct ConfigurationMatch {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Searches for a submatrix of `m` equal to a row and column permutation of
/// `config`. Exhaustive over ordered row selections.
std::optional<ConfigurationMatch> contains_configuration(const BinaryMatrix& m, const BinaryMatrix& config);
std::optional<ConfigurationMatch> contains_configuration(const BinaryMatrix& m, TuckerConfig c);

/// Every Tucker configuration that fits inside a rows x cols matrix, ordered
/// by (rows, cols, family).
std::vector<TuckerConfig> tucker_configs_fitting(int rows, int cols);

struct TuckerMatch {
  TuckerConfig config;
  ConfigurationMatch where;
};

/// First fitting Tucker configuration contained in `m`, if any.
std::optional<TuckerMatch> find_tucker_configuration(const BinaryMatrix& m);

// --- the split-system / row-class bijection ---

/// Row i is the indicator vector of the canonical block of split i, so the
/// first column is zero.
RowClass splits_to_rowclass(const SplitSystem& ss);

/// Inverse of splits_to_rowclass. Rejects a nonzero first column, rows with
/// fewer than two ones or two zeros, and repeated rows.
SplitSystem rowclass_to_splits(const RowClass& rc);

}  // namespace kalmanson
