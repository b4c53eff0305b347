#include "kalmanson/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace kalmanson {

namespace {

RowBits col_mask(int cols) { return cols >= 64 ? ~RowBits{0} : (RowBits{1} << cols) - 1; }

void check_dims(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw std::invalid_argument("binary matrix dimensions must lie in [0, 64]");
  }
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(std::max(rows, 0)), 0) {
  check_dims(rows, cols);
}

BinaryMatrix::BinaryMatrix(int cols, std::vector<RowBits> rows) : cols_(cols), rows_(std::move(rows)) {
  check_dims(static_cast<int>(rows_.size()), cols);
  for (RowBits r : rows_) {
    if ((r & ~col_mask(cols)) != 0) throw std::invalid_argument("row has bits beyond the column count");
  }
}

BinaryMatrix BinaryMatrix::from_nested(const std::vector<std::vector<int>>& entries) {
  const int cols = entries.empty() ? 0 : static_cast<int>(entries.front().size());
  std::vector<RowBits> rows;
  for (const auto& line : entries) {
    if (static_cast<int>(line.size()) != cols) throw std::invalid_argument("ragged binary matrix");
    RowBits bits = 0;
    for (int c = 0; c < cols; ++c) {
      const int v = line[static_cast<std::size_t>(c)];
      if (v != 0 && v != 1) throw std::invalid_argument("binary matrix entries must be 0 or 1");
      if (v) bits |= RowBits{1} << c;
    }
    rows.push_back(bits);
  }
  return BinaryMatrix(cols, std::move(rows));
}

void BinaryMatrix::set(int r, int c, bool value) {
  RowBits& row = rows_.at(static_cast<std::size_t>(r));
  if (c < 0 || c >= cols_) throw std::out_of_range("column index");
  if (value) {
    row |= RowBits{1} << c;
  } else {
    row &= ~(RowBits{1} << c);
  }
}

std::uint64_t BinaryMatrix::column(int c) const {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if ((rows_[r] >> c) & 1) out |= std::uint64_t{1} << r;
  }
  return out;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != cols_) throw std::invalid_argument("column permutation has wrong length");
  std::vector<RowBits> out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (int p = 0; p < cols_; ++p) {
      if ((rows_[r] >> perm[static_cast<std::size_t>(p)]) & 1) out[r] |= RowBits{1} << p;
    }
  }
  return BinaryMatrix(cols_, std::move(out));
}

bool row_less(RowBits a, RowBits b) {
  const RowBits diff = a ^ b;
  if (diff == 0) return false;
  return ((a >> std::countr_zero(diff)) & 1) == 0;
}

BinaryMatrix parse_matrix_text(std::string_view text) {
  std::vector<RowBits> rows;
  int cols = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    if (cols < 0) cols = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != cols) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": row length differs from the first row");
    }
    if (cols > kMaxMatrixDim) throw std::invalid_argument("matrix wider than 64 columns");
    RowBits bits = 0;
    for (int c = 0; c < cols; ++c) {
      const char ch = line[static_cast<std::size_t>(c)];
      if (ch == '1') {
        bits |= RowBits{1} << c;
      } else if (ch != '0') {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected only '0' and '1'");
      }
    }
    rows.push_back(bits);
  }
  return BinaryMatrix(std::max(cols, 0), std::move(rows));
}

std::string to_text(const BinaryMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out += m.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

RowClass RowClass::of(BinaryMatrix m) {
  std::vector<RowBits> rows(m.row_bits().begin(), m.row_bits().end());
  std::sort(rows.begin(), rows.end(), row_less);
  return RowClass(BinaryMatrix(m.cols(), std::move(rows)));
}

}  // namespace kalmanson
