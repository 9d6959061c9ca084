#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "dcl/digraph.hpp"
#include "dcl/families.hpp"

namespace dcl {

// Raised when a structural fact the classification relies on fails to hold
// on the given input. The enumeration harness records the offending digraph
// as a counterexample; unit tests treat any escape as a failure.
struct ProofViolation : std::runtime_error {
  std::string tag;
  ProofViolation(std::string tag_, const std::string& msg)
      : std::runtime_error(tag_ + ": " + msg), tag(std::move(tag_)) {}
};

// Brute-force oracle: some directed cycle of exactly k distinct vertices,
// or nullopt. Deterministic: the lexicographically least cycle sequence,
// rotated to start at its least vertex.
std::optional<VertexCycle> has_cycle_of_length(const Digraph& d, int k);

std::set<int> cycle_spectrum(const Digraph& d);
bool is_pancyclic(const Digraph& d);

// Longest path that is directed in both orientations; a single vertex
// (length 0) when D has no 2-cycle. Ties broken lexicographically.
VertexPath longest_two_way_path(const Digraph& d);

struct DegreeSumBound {
  int degree_sum;
  bool bound_holds;     // d(u)+d(v) <= 2n
  bool equality;        // d(u)+d(v) == 2n
  bool all_pairs_two;   // every x outside {u,v} has d({u,v},x) = 2
};

// Requires D strong and 3-cycle-free with arcs uv and vu both present;
// throws std::invalid_argument otherwise.
DegreeSumBound degree_sum_bound_check(const Digraph& d, int u, int v);

struct Bypass {
  VertexPath path;     // x_0..x_l, endpoints on the cycle, interior off it
  VertexCycle cycle;   // the host cycle
  int gap_length;      // cycle-distance from x_0 to x_l
};

// First bypass in lexicographic path order, or nullopt.
std::optional<Bypass> find_bypass(const Digraph& d, const VertexCycle& c);
// Minimum gap over all bypasses, ties broken lexicographically on the path.
std::optional<Bypass> minimum_gap_bypass(const Digraph& d,
                                         const VertexCycle& c);

// Insertion of path P at a single seam of Q (scanned in ascending seam
// order). P and Q must be vertex-disjoint and valid in D; throws
// std::invalid_argument otherwise.
std::optional<VertexPath> insert_path(const Digraph& d, const VertexPath& p,
                                      const VertexPath& q);
std::optional<VertexCycle> insert_path(const Digraph& d, const VertexPath& p,
                                       const VertexCycle& q);

// Splits P into consecutive blocks, inserting each into the evolving host;
// greedy longest-block-first with backtracking over block lengths and seams.
std::optional<VertexPath> multi_insert(const Digraph& d, const VertexPath& p,
                                       const VertexPath& q);
std::optional<VertexCycle> multi_insert(const Digraph& d, const VertexPath& p,
                                        const VertexCycle& q);

enum class ExternalVertexClass { FullOut, FullIn, HighDegree };

// For w off a longest nonhamiltonian cycle C (|C| <= n-2) adjacent to C in
// a digraph satisfying the degree condition: HighDegree when d(w) >= n,
// otherwise w->C (FullOut) or C->w (FullIn). Preconditions are checked and
// rejected via std::invalid_argument.
ExternalVertexClass classify_external_vertex(const Digraph& d,
                                             const VertexCycle& c, int w);

struct CycleCertificate {
  int target_length;
  std::optional<VertexCycle> cycle;      // Found
  std::optional<FamilyLabel> exception;  // DB / DL / PureCycle
  bool found() const { return cycle.has_value(); }
};

// Certificate for a 3-cycle, or an exception label (DB, or DL with all
// blocks of size <= 2). Requires D strong, n >= 3, and the degree
// condition; violations are rejected with a distinguishing message.
CycleCertificate find_3_cycle(const Digraph& d, bool verify_proof = false);

// Certificate for an (n-1)-cycle, or an exception label (DB or the pure
// cycle C_n). Requires D strong, n >= 4, and the degree condition.
CycleCertificate find_n_minus_1_cycle(const Digraph& d,
                                      bool verify_proof = false);

enum class Lemma8Outcome { StructureA, Bicomplete, NotApplicable };

// For C of length n-2 and {v0,v1} the off-cycle vertices: certifies the
// alternating two-way adjacency structure when d(v0),d(v1) >= n and no
// (n-1)-cycle exists; Bicomplete additionally requires min degree >= n.
Lemma8Outcome lemma8_structure_check(const Digraph& d, const VertexCycle& c,
                                     int v0, int v1);

}  // namespace dcl
