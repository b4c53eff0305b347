#include "kalmanson/split.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kalmanson {

namespace {

std::vector<int> mask_members(ElementMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < kMinTaxa || n > kMaxTaxa) {
    throw std::invalid_argument("ground set size must lie in [4, 63], got " + std::to_string(n));
  }
}

Split Split::from_mask(int n, ElementMask members) {
  const ElementMask full = GroundSet(n).mask();
  if ((members & ~full) != 0) throw std::invalid_argument("split member outside {1..n}");
  if (members == 0 || members == full) throw std::invalid_argument("split side must be a proper nonempty subset");
  if (members & 1) members = full & ~members;
  return Split(n, members);
}

int Split::size() const {
  const int k = std::popcount(block_);
  return std::min(k, n_ - k);
}

std::vector<int> Split::members() const { return mask_members(block_); }
std::vector<int> Split::other_members() const { return mask_members(other_block()); }

std::strong_ordering operator<=>(const Split& a, const Split& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  ElementMask x = a.block_;
  ElementMask y = b.block_;
  while (x != y) {
    if (x == 0) return std::strong_ordering::less;
    if (y == 0) return std::strong_ordering::greater;
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
    x &= x - 1;
    y &= y - 1;
  }
  return std::strong_ordering::equal;
}

Split make_split(int n, std::span<const int> members) {
  GroundSet ground(n);
  ElementMask mask = 0;
  for (int x : members) {
    if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside {1..n}");
    mask |= element_bit(x);
  }
  return Split::from_mask(ground.size(), mask);
}

std::string to_string(const Split& s) {
  const bool compact = s.n() <= 9;
  auto side = [compact](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0 && !compact) out += ',';
      out += std::to_string(xs[i]);
    }
    return out;
  };
  return side(s.other_members()) + "|" + side(s.members());
}

Split parse_split(int n, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("split text needs '|'");
  const std::string_view left = text.substr(0, bar);
  const std::string_view right = text.substr(bar + 1);
  auto parse_side = [n](std::string_view side) {
    ElementMask mask = 0;
    const bool separated = side.find(',') != std::string_view::npos || n > 9;
    std::size_t i = 0;
    while (i < side.size()) {
      std::size_t j = i;
      if (separated) {
        j = side.find(',', i);
        if (j == std::string_view::npos) j = side.size();
      } else {
        j = i + 1;
      }
      const std::string_view token = side.substr(i, j - i);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad element in split text");
      }
      const int x = std::stoi(std::string(token));
      if (x < 1 || x > n) throw std::invalid_argument("split element outside {1..n}");
      if (mask & element_bit(x)) throw std::invalid_argument("repeated element in split text");
      mask |= element_bit(x);
      i = separated ? j + 1 : j;
    }
    return mask;
  };
  const ElementMask a = parse_side(left);
  const ElementMask b = parse_side(right);
  if ((a & b) != 0 || (a | b) != full_mask(n)) throw std::invalid_argument("split sides must partition {1..n}");
  return Split::from_mask(n, b);
}

std::vector<Split> nontrivial_splits(int n) {
  GroundSet ground(n);
  std::vector<Split> out;
  // Canonical blocks avoid element 1, so enumerate subsets of {2..n}.
  const ElementMask rest = ground.mask() & ~ElementMask{1};
  for (ElementMask sub = rest;; sub = (sub - 1) & rest) {
    if (sub != 0) {
      const int k = std::popcount(sub);
      if (k >= 2 && k <= n - 2) out.push_back(Split::from_mask(n, sub));
    }
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SplitMetricMatrix::SplitMetricMatrix(int n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("split metric matrix must be n x n");
  }
  for (int p = 0; p < n; ++p) {
    if (at(p, p) != 0) throw std::invalid_argument("split metric matrix needs a zero diagonal");
    for (int q = 0; q < n; ++q) {
      if (at(p, q) > 1) throw std::invalid_argument("split metric matrix entries must be 0/1");
      if (at(p, q) != at(q, p)) throw std::invalid_argument("split metric matrix must be symmetric");
    }
  }
}

SplitMetricMatrix split_metric(const Split& s) {
  const int n = s.n();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n * n), 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      entries[static_cast<std::size_t>(p * n + q)] = s.separates(p + 1, q + 1) ? 1 : 0;
    }
  }
  return SplitMetricMatrix(n, std::move(entries));
}

Split split_from_metric(const SplitMetricMatrix& m) {
  const int n = m.n();
  // The block of the split not containing 1 is {x : delta(1, x) = 1}.
  ElementMask block = 0;
  for (int q = 0; q < n; ++q) {
    if (m.at(0, q)) block |= element_bit(q + 1);
  }
  if (block == 0) throw std::invalid_argument("matrix does not separate any pair");
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const bool separated = ((block >> p) & 1) != ((block >> q) & 1);
      if (m.at(p, q) != (separated ? 1 : 0)) throw std::invalid_argument("matrix is not a split metric");
    }
  }
  return Split::from_mask(n, block);
}

SplitSystem::SplitSystem(int n, std::vector<Split> splits) : n_(GroundSet(n).size()), splits_(std::move(splits)) {
  for (const Split& s : splits_) {
    if (s.n() != n_) throw std::invalid_argument("split system mixes ground-set sizes");
  }
  std::sort(splits_.begin(), splits_.end());
  if (std::adjacent_find(splits_.begin(), splits_.end()) != splits_.end()) {
    throw std::invalid_argument("split system contains a duplicate split");
  }
}

bool SplitSystem::contains(const Split& s) const { return std::binary_search(splits_.begin(), splits_.end(), s); }

bool SplitSystem::has_trivial() const {
  return std::any_of(splits_.begin(), splits_.end(), [](const Split& s) { return s.trivial(); });
}

CircularOrdering CircularOrdering::canonical(std::span<const int> perm) {
  const int n = GroundSet(static_cast<int>(perm.size())).size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : perm) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("ordering is not a permutation of 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
  const auto one = std::find(perm.begin(), perm.end(), 1) - perm.begin();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>((one + i) % n)];
  if (order[1] > order[static_cast<std::size_t>(n - 1)]) std::reverse(order.begin() + 1, order.end());
  return CircularOrdering(std::move(order));
}

CircularOrdering CircularOrdering::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(GroundSet(n).size()));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return CircularOrdering(std::move(order));
}

std::vector<int> CircularOrdering::positions() const {
  std::vector<int> pos(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i] - 1)] = static_cast<int>(i);
  return pos;
}

bool is_circular_interval(ElementMask positions, int n) {
  const ElementMask full = full_mask(n);
  positions &= full;
  if (positions == 0 || positions == full) return true;
  auto run = [](ElementMask x) {
    x >>= std::countr_zero(x);
    return (x & (x + 1)) == 0;
  };
  return run(positions) || run(full & ~positions);
}

bool CircularOrdering::is_arc(const Split& s) const {
  if (s.n() != n()) return false;
  ElementMask at = 0;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (s.contains(order_[i])) at |= ElementMask{1} << i;
  }
  return is_circular_interval(at, n());
}

std::vector<Split> CircularOrdering::arcs() const {
  const int n = this->n();
  std::vector<Split> out;
  // Arcs starting at position i of length 2..n-2; each split appears twice
  // (as an arc and as its complementary arc), so keep the canonical copy once.
  for (int i = 0; i < n; ++i) {
    ElementMask block = 0;
    for (int len = 1; len <= n - 2; ++len) {
      block |= element_bit(order_[static_cast<std::size_t>((i + len - 1) % n)]);
      if (len >= 2) out.push_back(Split::from_mask(n, block));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const CircularOrdering& ord) {
  std::string out = "(";
  for (int i = 0; i < ord.n(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ord[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

bool next_canonical_ordering(std::vector<int>& order) {
  const std::size_t n = order.size();
  while (true) {
    if (!std::next_permutation(order.begin() + 1, order.end())) return false;
    if (order[1] < order[n - 1]) return true;
  }
}

std::vector<CircularOrdering> canonical_orderings(int n) {
  std::vector<CircularOrdering> out;
  std::vector<int> order(static_cast<std::size_t>(GroundSet(n).size()));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.push_back(CircularOrdering::canonical(order));
  } while (next_canonical_ordering(order));
  return out;
}

WeakCompatibilityResult is_weakly_compatible(const SplitSystem& ss) {
  const auto splits = ss.splits();
  const ElementMask full = full_mask(ss.n());
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      for (std::size_t k = j + 1; k < splits.size(); ++k) {
        for (int orient = 0; orient < 8; ++orient) {
          const ElementMask a1 = (orient & 1) ? splits[i].other_block() : splits[i].block();
          const ElementMask a2 = (orient & 2) ? splits[j].other_block() : splits[j].block();
          const ElementMask a3 = (orient & 4) ? splits[k].other_block() : splits[k].block();
          const ElementMask common = a1 & a2 & a3;
          const ElementMask only1 = a1 & ~a2 & ~a3 & full;
          const ElementMask only2 = a2 & ~a1 & ~a3 & full;
          const ElementMask only3 = a3 & ~a1 & ~a2 & full;
          if (common && only1 && only2 && only3) {
            return {false, WeakIncompatibility{{splits[i], splits[j], splits[k]},
                                               {a1, a2, a3},
                                               std::countr_zero(common) + 1,
                                               {std::countr_zero(only1) + 1, std::countr_zero(only2) + 1,
                                                std::countr_zero(only3) + 1}}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<Split> join(const Split& s1, const Split& s2, Orientation orientation) {
  if (s1.n() != s2.n()) throw std::invalid_argument("join needs splits over the same ground set");
  const ElementMask a1 = orientation.flip_first ? s1.other_block() : s1.block();
  const ElementMask a2 = orientation.flip_second ? s2.other_block() : s2.block();
  const ElementMask meet = a1 & a2;
  if (meet == 0) return std::nullopt;
  return Split::from_mask(s1.n(), meet);
}

bool incompatible(const Split& s1, const Split& s2) {
  const ElementMask a1 = s1.block(), b1 = s1.other_block();
  const ElementMask a2 = s2.block(), b2 = s2.other_block();
  return (a1 & a2) && (a1 & b2) && (b1 & a2) && (b1 & b2);
}

SplitSystem circular_closure(const SplitSystem& ss) {
  std::vector<Split> out(ss.begin(), ss.end());
  const auto splits = ss.splits();
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (!incompatible(splits[i], splits[j])) continue;
      for (int orient = 0; orient < 4; ++orient) {
        auto joined = join(splits[i], splits[j], Orientation{(orient & 1) != 0, (orient & 2) != 0});
        if (joined && !joined->trivial()) out.push_back(*joined);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SplitSystem(ss.n(), std::move(out));
}

}  // namespace kalmanson
