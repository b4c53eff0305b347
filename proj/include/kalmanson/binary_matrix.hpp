#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kalmanson {

/// Bit c is column c (0-based).
using RowBits = std::uint64_t;

inline constexpr int kMaxMatrixDim = 64;

/// Dense m x n 0/1 matrix, one bitmask per row. Both dimensions are capped
/// at 64 so rows and columns fit in a machine word.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);
  BinaryMatrix(int cols, std::vector<RowBits> rows);

  static BinaryMatrix from_nested(const std::vector<std::vector<int>>& entries);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool at(int r, int c) const { return (rows_[static_cast<std::size_t>(r)] >> c) & 1; }
  void set(int r, int c, bool value);

  RowBits row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  std::span<const RowBits> row_bits() const { return rows_; }

  /// Bit r of the result is entry (r, c).
  std::uint64_t column(int c) const;

  /// Column p of the result is column perm[p] of this matrix.
  BinaryMatrix permute_columns(std::span<const int> perm) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int cols_;
  std::vector<RowBits> rows_;
};

/// Lexicographic order of rows read as strings, column 0 first.
bool row_less(RowBits a, RowBits b);

/// One row per line of '0'/'1' characters; blank lines are skipped.
BinaryMatrix parse_matrix_text(std::string_view text);
std::string to_text(const BinaryMatrix& m);

/// The orbit of a matrix under row permutation, represented by its
/// row-sorted member.
class RowClass {
 public:
  static RowClass of(BinaryMatrix m);

  const BinaryMatrix& canonical() const { return canonical_; }

  friend bool operator==(const RowClass&, const RowClass&) = default;

 private:
  explicit RowClass(BinaryMatrix m) : canonical_(std::move(m)) {}

  BinaryMatrix canonical_;
};

}  // namespace kalmanson
