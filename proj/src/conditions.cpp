#include "dcl/conditions.hpp"

#include <bit>

namespace dcl {

std::vector<PairWitness> special_pairs(const Digraph& d) {
  const int n = d.order();
  std::vector<PairWitness> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (d.adjacent(x, y)) continue;
      for (std::uint64_t m = d.in_row(x) & d.in_row(y); m; m &= m - 1)
        out.push_back({x, y, std::countr_zero(m), PairKind::Dominated});
      for (std::uint64_t m = d.out_row(x) & d.out_row(y); m; m &= m - 1)
        out.push_back({x, y, std::countr_zero(m), PairKind::Dominating});
    }
  return out;
}

ConditionVerdict conjecture1_condition_holds(const Digraph& d) {
  const int n = d.order();
  ConditionVerdict verdict{true, {}};
  const auto witnesses = special_pairs(d);
  std::uint64_t reported = 0;
  for (int v = 0; v < n; ++v) {
    if (d.degree(v) >= n) continue;
    for (const auto& w : witnesses) {
      if (w.x != v && w.y != v) continue;
      if (!(reported & bit(v))) {
        reported |= bit(v);
        verdict.violations.push_back({v, d.degree(v), w});
      }
      break;
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

ConditionVerdict theorem1_condition_holds(const Digraph& d) {
  const int n = d.order();
  ConditionVerdict verdict{true, {}};
  std::uint64_t reported = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (d.adjacent(x, y)) continue;
      std::uint64_t common = d.in_row(x) & d.in_row(y);
      if (!common) continue;
      int dx = d.degree(x), dy = d.degree(y);
      if (std::max(dx, dy) >= n && std::min(dx, dy) >= n - 1) continue;
      int v = (dx < dy || (dx == dy && x < y)) ? x : y;
      if (reported & bit(v)) continue;
      reported |= bit(v);
      PairWitness w{x, y, std::countr_zero(common), PairKind::Dominated};
      verdict.violations.push_back({v, d.degree(v), w});
    }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

bool bgl_condition_fast(const Digraph& d) {
  const int n = d.order();
  // Only vertices of degree < n can violate; check whether any of them lies
  // in a special pair.
  std::uint64_t low = 0;
  for (int v = 0; v < n; ++v)
    if (d.degree(v) < n) low |= bit(v);
  if (!low) return true;
  for (std::uint64_t m = low; m; m &= m - 1) {
    int x = std::countr_zero(m);
    std::uint64_t nonadj = d.vertex_mask() & ~(d.out_row(x) | d.in_row(x)) &
                           ~bit(x);
    for (std::uint64_t m2 = nonadj; m2; m2 &= m2 - 1) {
      int y = std::countr_zero(m2);
      if ((d.in_row(x) & d.in_row(y)) || (d.out_row(x) & d.out_row(y)))
        return false;
    }
  }
  return true;
}

}  // namespace dcl
