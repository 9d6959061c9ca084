#pragma once

#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

enum class PairKind { Dominated, Dominating };

// A nonadjacent pair {x,y} (x < y) with a common in-neighbor (Dominated:
// common->x and common->y) or a common out-neighbor (Dominating: x->common
// and y->common).
struct PairWitness {
  int x;
  int y;
  int common;
  PairKind kind;
  bool operator==(const PairWitness&) const = default;
};

// All witnesses, one entry per (pair, common, kind) triple, ordered by
// (x, y, kind, common) with Dominated before Dominating.
std::vector<PairWitness> special_pairs(const Digraph& d);

struct ConditionViolation {
  int vertex;
  int degree;
  PairWitness witness;
};

struct ConditionVerdict {
  bool holds;
  std::vector<ConditionViolation> violations;  // at most one per vertex
};

// Holds iff every vertex occurring in any special pair has degree >= n.
ConditionVerdict conjecture1_condition_holds(const Digraph& d);

// Holds iff for every nonadjacent dominated pair {x,y},
// max(d(x),d(y)) >= n and min(d(x),d(y)) >= n-1.
ConditionVerdict theorem1_condition_holds(const Digraph& d);

// Verdict-only fast path for the enumeration harness.
bool bgl_condition_fast(const Digraph& d);

}  // namespace dcl
