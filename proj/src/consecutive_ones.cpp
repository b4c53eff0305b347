#include "kalmanson/consecutive_ones.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace kalmanson {

namespace {

/// Depth-first placement of column types left to right. A row is "open" when
/// the last placed type has a one in it and "closed" once a one was placed
/// earlier but the last type has a zero. Placing a type with a one in a
/// closed row is illegal; closing a row that still has unplaced ones is
/// pruned immediately.
class ConsecutiveOnesSearch {
 public:
  explicit ConsecutiveOnesSearch(const BinaryMatrix& m) {
    const int n = m.cols();
    for (int c = 0; c < n; ++c) {
      const std::uint64_t bits = m.column(c);
      auto it = std::find(type_bits_.begin(), type_bits_.end(), bits);
      if (it == type_bits_.end()) {
        type_bits_.push_back(bits);
        type_columns_.push_back({c});
      } else {
        type_columns_[static_cast<std::size_t>(it - type_bits_.begin())].push_back(c);
      }
    }
  }

  std::optional<std::vector<int>> run() {
    order_.clear();
    if (!place(0, 0, 0)) return std::nullopt;
    std::vector<int> perm;
    perm.reserve(64);
    for (int t : order_) {
      const auto& cols = type_columns_[static_cast<std::size_t>(t)];
      perm.insert(perm.end(), cols.begin(), cols.end());
    }
    return perm;
  }

 private:
  struct StateHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& s) const {
      return std::hash<std::uint64_t>{}(s.first * 0x9E3779B97F4A7C15ULL ^ s.second);
    }
  };

  // placed: set of placed types; open: row bits of the last placed type;
  // started: rows with at least one placed one.
  bool place(std::uint64_t placed, std::uint64_t open, std::uint64_t started) {
    const std::size_t types = type_bits_.size();
    if (static_cast<std::size_t>(std::popcount(placed)) == types) return true;
    if (failed_.contains({placed, open})) return false;

    for (std::size_t t = 0; t < types; ++t) {
      if ((placed >> t) & 1) continue;
      const std::uint64_t bits = type_bits_[t];
      const std::uint64_t closed = started & ~open;
      if (bits & closed) continue;
      // Rows that close now must not need any further ones.
      std::uint64_t rest = 0;
      for (std::size_t u = 0; u < types; ++u) {
        if (u != t && !((placed >> u) & 1)) rest |= type_bits_[u];
      }
      if (open & ~bits & rest) continue;
      order_.push_back(static_cast<int>(t));
      if (place(placed | (std::uint64_t{1} << t), bits, started | bits)) return true;
      order_.pop_back();
    }
    failed_.insert({placed, open});
    return false;
  }

  std::vector<std::uint64_t> type_bits_;
  std::vector<std::vector<int>> type_columns_;
  std::vector<int> order_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, StateHash> failed_;
};

}  // namespace

OnesResult is_c1r(const BinaryMatrix& m) {
  if (m.cols() > 63) throw std::invalid_argument("consecutive ones search supports at most 63 columns");
  ConsecutiveOnesSearch search(m);
  auto perm = search.run();
  if (!perm) return {false, std::nullopt};
  return {true, ColumnWitness{std::move(*perm)}};
}

BinaryMatrix complement_rows_by_first_column(const BinaryMatrix& m) {
  if (m.cols() < 1) throw std::invalid_argument("matrix needs at least one column");
  const RowBits full = m.cols() >= 64 ? ~RowBits{0} : (RowBits{1} << m.cols()) - 1;
  std::vector<RowBits> rows(m.row_bits().begin(), m.row_bits().end());
  for (RowBits& r : rows) {
    if (r & 1) r = full & ~r;
  }
  return BinaryMatrix(m.cols(), std::move(rows));
}

OnesResult is_circ1r(const BinaryMatrix& m) {
  if (m.cols() == 0) return {true, ColumnWitness{}};
  return is_c1r(complement_rows_by_first_column(m));
}

bool has_consecutive_ones(const BinaryMatrix& m, std::span<const int> perm) {
  const BinaryMatrix p = m.permute_columns(perm);
  for (RowBits r : p.row_bits()) {
    if (r == 0) continue;
    r >>= std::countr_zero(r);
    if (r & (r + 1)) return false;
  }
  return true;
}

bool has_circular_ones(const BinaryMatrix& m, std::span<const int> perm) {
  const BinaryMatrix p = m.permute_columns(perm);
  for (RowBits r : p.row_bits()) {
    if (!is_circular_interval(r, m.cols())) return false;
  }
  return true;
}

RowClass splits_to_rowclass(const SplitSystem& ss) {
  std::vector<RowBits> rows;
  rows.reserve(ss.size());
  // Element x is column x - 1, and the canonical block never holds 1.
  for (const Split& s : ss) rows.push_back(s.block());
  return RowClass::of(BinaryMatrix(ss.n(), std::move(rows)));
}

SplitSystem rowclass_to_splits(const RowClass& rc) {
  const BinaryMatrix& m = rc.canonical();
  const int n = GroundSet(m.cols()).size();
  std::vector<Split> splits;
  for (int r = 0; r < m.rows(); ++r) {
    const RowBits bits = m.row(r);
    if (bits & 1) throw std::invalid_argument("row class must have a zero first column");
    const int ones = std::popcount(bits);
    if (ones < 2 || n - ones < 2) throw std::invalid_argument("row " + std::to_string(r + 1) + " encodes a trivial split");
    if (r > 0 && bits == m.row(r - 1)) throw std::invalid_argument("row class has repeated rows");
    splits.push_back(Split::from_mask(n, bits));
  }
  return SplitSystem(n, std::move(splits));
}

}  // namespace kalmanson
