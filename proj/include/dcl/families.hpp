#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

bool is_semicomplete(const Digraph& d);
bool is_locally_in_semicomplete(const Digraph& d);
bool is_locally_out_semicomplete(const Digraph& d);
bool is_lsd(const Digraph& d);
bool is_local_tournament(const Digraph& d);
bool has_two_cycle(const Digraph& d);

// An ordering v_0..v_{n-1} such that every out-neighborhood is the cyclic
// run v_{i+1}..v_{i+d+} and every in-neighborhood the run v_{i-d-}..v_{i-1},
// or nullopt if no such ordering exists. Strong digraphs are handled at any
// order; non-strong ones fall back to a full permutation search for n <= 8.
std::optional<std::vector<int>> find_round_labeling(const Digraph& d);

// Definitional re-check, independent of how the ordering was found.
bool check_round_labeling(const Digraph& d, const std::vector<int>& order);

struct RoundDecomposition {
  Digraph quotient;                      // round local tournament R
  std::vector<std::vector<int>> blocks;  // S_1..S_r, sorted by least member
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Substitution digraph R[parts...]: vertex blocks laid out consecutively in
// part order; arc v_i->v_j in R becomes all arcs from block i to block j.
// Throws std::invalid_argument on size mismatch or empty part.
Digraph compose(const Digraph& r, const std::vector<Digraph>& parts);

// Every partition of V(D) into blocks inducing strong semicomplete
// subdigraphs whose quotient is a round local tournament (complete
// block-to-block arcs). Exhaustive over set partitions; n <= 10.
std::vector<RoundDecomposition> all_round_decompositions(const Digraph& d);

// A round decomposition of an LSD, or nullopt. Prefers the partition found
// first in restricted-growth order (the single-block decomposition for
// strong semicomplete digraphs).
std::optional<RoundDecomposition> round_decomposition(const Digraph& d);

enum class FamilyKind { DB, DL, PureCycle, None };

struct FamilyLabel {
  FamilyKind kind = FamilyKind::None;
  std::optional<RoundDecomposition> decomposition;  // for DL
  std::uint64_t part_a = 0, part_b = 0;             // bipartition for DB
};

// D is a strong LSD with a round decomposition R[S_1..S_r], R a round local
// tournament, and g(R) > max{2, max |S_i|} + 1.
FamilyLabel is_exceptional_DL(const Digraph& d);

// D is a balanced complete bipartite digraph (arcs both ways across the
// parts, none inside) on >= 4 vertices.
FamilyLabel is_exceptional_DB(const Digraph& d);

// True iff D is a single directed cycle through all its vertices.
bool is_pure_cycle(const Digraph& d);

Digraph gen_cycle(int n);
Digraph gen_bicomplete(int m);
Digraph gen_tournament_random(int n, std::uint64_t seed);
Digraph gen_round_local_tournament_random(int n, std::uint64_t seed);

}  // namespace dcl
