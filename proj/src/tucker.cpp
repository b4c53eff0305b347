#include "kalmanson/consecutive_ones.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kalmanson {

namespace {

RowBits ones_at(std::initializer_list<int> cols) {
  RowBits bits = 0;
  for (int c : cols) bits |= RowBits{1} << c;
  return bits;
}

RowBits ones_range(int first, int last) {
  RowBits bits = 0;
  for (int c = first; c <= last; ++c) bits |= RowBits{1} << c;
  return bits;
}

// Rows r_1..r_{k+1} of I_k, II_k and III_k: ones at columns i and i+1.
std::vector<RowBits> staircase(int k) {
  std::vector<RowBits> rows;
  for (int i = 0; i <= k; ++i) rows.push_back(ones_at({i, i + 1}));
  return rows;
}

int family_rank(TuckerFamily f) { return static_cast<int>(f); }

}  // namespace

std::string to_string(const TuckerConfig& c) {
  switch (c.family) {
    case TuckerFamily::I: return "I_" + std::to_string(c.k);
    case TuckerFamily::II: return "II_" + std::to_string(c.k);
    case TuckerFamily::III: return "III_" + std::to_string(c.k);
    case TuckerFamily::IV: return "IV";
    case TuckerFamily::V: return "V";
  }
  return "?";
}

BinaryMatrix tucker_config_matrix(TuckerConfig c) {
  const bool parametrized = c.family == TuckerFamily::I || c.family == TuckerFamily::II || c.family == TuckerFamily::III;
  if (parametrized && c.k < 1) throw std::invalid_argument("Tucker family parameter k must be >= 1");
  const int k = c.k;
  switch (c.family) {
    case TuckerFamily::I: {
      if (k + 2 > kMaxMatrixDim) throw std::invalid_argument("Tucker parameter too large");
      auto rows = staircase(k);
      rows.push_back(ones_at({0, k + 1}));
      return BinaryMatrix(k + 2, std::move(rows));
    }
    case TuckerFamily::II: {
      if (k + 3 > kMaxMatrixDim) throw std::invalid_argument("Tucker parameter too large");
      auto rows = staircase(k);
      rows.push_back(ones_range(0, k) | ones_at({k + 2}));
      rows.push_back(ones_range(1, k + 2));
      return BinaryMatrix(k + 3, std::move(rows));
    }
    case TuckerFamily::III: {
      if (k + 3 > kMaxMatrixDim) throw std::invalid_argument("Tucker parameter too large");
      auto rows = staircase(k);
      rows.push_back(ones_range(1, k) | ones_at({k + 2}));
      return BinaryMatrix(k + 3, std::move(rows));
    }
    case TuckerFamily::IV:
      return BinaryMatrix::from_nested({{1, 1, 0, 0, 0, 0},
                                        {0, 0, 1, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 1},
                                        {0, 1, 0, 1, 0, 1}});
    case TuckerFamily::V:
      return BinaryMatrix::from_nested({{1, 1, 0, 0, 0},
                                        {1, 1, 1, 1, 0},
                                        {0, 0, 1, 1, 0},
                                        {1, 0, 0, 1, 1}});
  }
  throw std::invalid_argument("unknown Tucker family");
}

std::optional<ConfigurationMatch> contains_configuration(const BinaryMatrix& m, const BinaryMatrix& config) {
  const int p = config.rows();
  const int q = config.cols();
  if (p > m.rows() || q > m.cols()) return std::nullopt;

  // Column vectors of the configuration, as p-bit numbers.
  std::vector<std::uint64_t> wanted(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) wanted[static_cast<std::size_t>(c)] = config.column(c);

  std::vector<int> chosen_rows(static_cast<std::size_t>(p));
  std::vector<bool> used_row(static_cast<std::size_t>(m.rows()), false);
  std::optional<ConfigurationMatch> found;

  // Ordered row selections; for each, match configuration columns greedily
  // to the smallest unused column with the same restricted vector.
  auto try_columns = [&]() -> bool {
    std::vector<bool> used_col(static_cast<std::size_t>(m.cols()), false);
    std::vector<int> cols(static_cast<std::size_t>(q));
    for (int c = 0; c < q; ++c) {
      int hit = -1;
      for (int mc = 0; mc < m.cols() && hit < 0; ++mc) {
        if (used_col[static_cast<std::size_t>(mc)]) continue;
        std::uint64_t v = 0;
        for (int r = 0; r < p; ++r) {
          if (m.at(chosen_rows[static_cast<std::size_t>(r)], mc)) v |= std::uint64_t{1} << r;
        }
        if (v == wanted[static_cast<std::size_t>(c)]) hit = mc;
      }
      if (hit < 0) return false;
      used_col[static_cast<std::size_t>(hit)] = true;
      cols[static_cast<std::size_t>(c)] = hit;
    }
    found = ConfigurationMatch{chosen_rows, cols};
    return true;
  };

  auto select = [&](auto&& self, int depth) -> bool {
    if (depth == p) return try_columns();
    for (int r = 0; r < m.rows(); ++r) {
      if (used_row[static_cast<std::size_t>(r)]) continue;
      used_row[static_cast<std::size_t>(r)] = true;
      chosen_rows[static_cast<std::size_t>(depth)] = r;
      if (self(self, depth + 1)) return true;
      used_row[static_cast<std::size_t>(r)] = false;
    }
    return false;
  };

  select(select, 0);
  return found;
}

std::optional<ConfigurationMatch> contains_configuration(const BinaryMatrix& m, TuckerConfig c) {
  return contains_configuration(m, tucker_config_matrix(c));
}

std::vector<TuckerConfig> tucker_configs_fitting(int rows, int cols) {
  struct Entry {
    int rows, cols;
    TuckerConfig config;
  };
  std::vector<Entry> entries;
  for (int k = 1; k + 2 <= std::min(rows, cols); ++k) entries.push_back({k + 2, k + 2, {TuckerFamily::I, k}});
  for (int k = 1; k + 3 <= std::min(rows, cols); ++k) entries.push_back({k + 3, k + 3, {TuckerFamily::II, k}});
  for (int k = 1; k + 2 <= rows && k + 3 <= cols; ++k) entries.push_back({k + 2, k + 3, {TuckerFamily::III, k}});
  if (rows >= 4 && cols >= 6) entries.push_back({4, 6, {TuckerFamily::IV, 1}});
  if (rows >= 4 && cols >= 5) entries.push_back({4, 5, {TuckerFamily::V, 1}});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return family_rank(a.config.family) < family_rank(b.config.family);
  });
  std::vector<TuckerConfig> out;
  for (const Entry& e : entries) out.push_back(e.config);
  return out;
}

std::optional<TuckerMatch> find_tucker_configuration(const BinaryMatrix& m) {
  for (const TuckerConfig& c : tucker_configs_fitting(m.rows(), m.cols())) {
    if (auto where = contains_configuration(m, c)) return TuckerMatch{c, std::move(*where)};
  }
  return std::nullopt;
}

}  // namespace kalmanson
