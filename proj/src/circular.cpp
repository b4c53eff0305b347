#include "kalmanson/consecutive_ones.hpp"
#include "kalmanson/split.hpp"

#include <bit>
#include <stdexcept>

namespace kalmanson {

namespace {

void require_nontrivial(const SplitSystem& ss) {
  if (ss.has_trivial()) throw std::invalid_argument("circularity is defined for non-trivial splits only");
}

}  // namespace

CircularityResult is_circular(const SplitSystem& ss) {
  require_nontrivial(ss);
  const RowClass rc = splits_to_rowclass(ss);
  const OnesResult ones = is_circ1r(rc.canonical());
  if (!ones.holds) return {false, std::nullopt};
  // Column c is element c + 1.
  std::vector<int> order;
  order.reserve(ones.witness->perm.size());
  for (int c : ones.witness->perm) order.push_back(c + 1);
  return {true, CircularOrdering::canonical(order)};
}

CircularityResult is_circular_exhaustive(const SplitSystem& ss) {
  require_nontrivial(ss);
  const int n = ss.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> pos(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1)] = i;
    bool all_arcs = true;
    for (const Split& s : ss) {
      ElementMask at = 0;
      for (ElementMask b = s.block(); b != 0; b &= b - 1) {
        at |= ElementMask{1} << pos[static_cast<std::size_t>(std::countr_zero(b))];
      }
      if (!is_circular_interval(at, n)) {
        all_arcs = false;
        break;
      }
    }
    if (all_arcs) return {true, CircularOrdering::canonical(order)};
  } while (next_canonical_ordering(order));
  return {false, std::nullopt};
}

bool is_circular_by_closure(const SplitSystem& ss) {
  require_nontrivial(ss);
  return is_weakly_compatible(circular_closure(ss)).compatible;
}

}  // namespace kalmanson
