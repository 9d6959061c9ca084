#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

// Labeled digraphs on n vertices are indexed by an n(n-1)-bit mask over the
// off-diagonal adjacency slots, (row, column) in lexicographic order.
std::uint64_t encode_index(const Digraph& d);
Digraph decode_index(int n, std::uint64_t index);
std::uint64_t index_count(int n);  // 2^(n(n-1)); n <= 5 fits comfortably

// Lexicographically least adjacency matrix over all vertex relabelings
// (n <= 8).
Digraph canonical_form(const Digraph& d);
bool is_canonical(const Digraph& d);

enum class Filter { Strong, DegreeCondition, Lsd, No3Cycle };

struct EnumerationSpec {
  int n = 0;
  std::vector<Filter> filters;
  int shard_index = 0;   // contiguous index ranges
  int shard_count = 1;
  bool dedup_canonical = false;
};

bool passes_filters(const Digraph& d, const std::vector<Filter>& filters);

// Streams every digraph of the shard passing all filters (and, with dedup,
// only canonical representatives) to the visitor; stops early when the
// visitor returns false. Returns the number of digraphs visited.
std::uint64_t enumerate_digraphs(const EnumerationSpec& spec,
                                 const std::function<bool(const Digraph&)>& f);

// Pseudorandom digraph for (seed, index): each arc present independently
// with arc_probability, drawn from a counter-based generator keyed on
// (seed, index, slot), so shard layout never changes the sampled multiset.
// Requires 0 < arc_probability < 1.
Digraph sample_digraph(int n, std::uint64_t seed, std::uint64_t index,
                       double arc_probability = 0.5);

}  // namespace dcl
