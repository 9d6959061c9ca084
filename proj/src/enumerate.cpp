#include "dcl/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "dcl/conditions.hpp"
#include "dcl/families.hpp"

namespace dcl {

namespace {

std::uint64_t low_bits(int k) {
  return k >= 64 ? ~0ull : (1ull << k) - 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t index_count(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("index enumeration supports 1 <= n <= 8");
  return 1ull << (n * (n - 1));
}

std::uint64_t encode_index(const Digraph& d) {
  const int n = d.order();
  if (n > 8) throw std::invalid_argument("index encoding supports n <= 8");
  std::uint64_t idx = 0;
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = d.out_row(u);
    std::uint64_t chunk = (row & (bit(u) - 1)) | ((row >> (u + 1)) << u);
    idx |= chunk << (u * (n - 1));
  }
  return idx;
}

Digraph decode_index(int n, std::uint64_t index) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("index decoding supports 1 <= n <= 8");
  std::array<std::uint64_t, Digraph::kMaxVertices> rows{};
  const std::uint64_t chunk_mask = low_bits(n - 1);
  for (int u = 0; u < n; ++u) {
    std::uint64_t chunk = (index >> (u * (n - 1))) & chunk_mask;
    rows[u] = (chunk & (bit(u) - 1)) | ((chunk >> u) << (u + 1));
  }
  return Digraph::from_out_rows(n, std::span(rows).first(n));
}

namespace {

// adjacency matrix packed row-major, first entry most significant
std::uint64_t matrix_key(int n, const std::uint64_t* rows) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] & bit(j)) key |= 1ull << (n * n - 1 - (i * n + j));
  return key;
}

}  // namespace

Digraph canonical_form(const Digraph& d) {
  const int n = d.order();
  if (n > 8)
    throw std::invalid_argument("canonical form supports n <= 8");
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best_key = ~0ull;
  std::array<std::uint64_t, Digraph::kMaxVertices> best_rows{};
  do {
    std::uint64_t rows[8] = {};
    for (int u = 0; u < n; ++u)
      for (std::uint64_t m = d.out_row(u); m; m &= m - 1)
        rows[perm[u]] |= bit(perm[std::countr_zero(m)]);
    std::uint64_t key = matrix_key(n, rows);
    if (key < best_key) {
      best_key = key;
      for (int i = 0; i < n; ++i) best_rows[i] = rows[i];
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return Digraph::from_out_rows(n, std::span(best_rows).first(n));
}

bool is_canonical(const Digraph& d) { return d == canonical_form(d); }

namespace {

bool has_3cycle_fast(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    for (std::uint64_t m = d.out_row(u) & ~bit(u); m; m &= m - 1)
      if (d.out_row(std::countr_zero(m)) & d.in_row(u) & ~bit(u))
        return true;
  return false;
}

}  // namespace

bool passes_filters(const Digraph& d, const std::vector<Filter>& filters) {
  for (Filter f : filters) {
    switch (f) {
      case Filter::Strong:
        if (!is_strong(d)) return false;
        break;
      case Filter::DegreeCondition:
        if (!bgl_condition_fast(d)) return false;
        break;
      case Filter::Lsd:
        if (!is_lsd(d)) return false;
        break;
      case Filter::No3Cycle:
        if (has_3cycle_fast(d)) return false;
        break;
    }
  }
  return true;
}

std::uint64_t enumerate_digraphs(
    const EnumerationSpec& spec,
    const std::function<bool(const Digraph&)>& f) {
  if (spec.shard_count < 1 || spec.shard_index < 0 ||
      spec.shard_index >= spec.shard_count)
    throw std::invalid_argument("bad shard specification");
  const std::uint64_t total = index_count(spec.n);
  const auto bound = [&](int i) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(total) * i) / spec.shard_count);
  };
  std::uint64_t visited = 0;
  for (std::uint64_t idx = bound(spec.shard_index),
                     hi = bound(spec.shard_index + 1);
       idx < hi; ++idx) {
    Digraph d = decode_index(spec.n, idx);
    if (!passes_filters(d, spec.filters)) continue;
    if (spec.dedup_canonical && !is_canonical(d)) continue;
    ++visited;
    if (!f(d)) break;
  }
  return visited;
}

Digraph sample_digraph(int n, std::uint64_t seed, std::uint64_t index,
                       double arc_probability) {
  if (n < 1 || n > Digraph::kMaxVertices)
    throw std::invalid_argument("sample_digraph: bad order");
  if (!(arc_probability > 0.0 && arc_probability < 1.0))
    throw std::invalid_argument(
        "sample_digraph: arc probability must lie in (0,1)");
  const auto threshold = static_cast<std::uint64_t>(
      arc_probability * 18446744073709551616.0);  // p * 2^64
  const std::uint64_t base =
      splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ull);
  std::array<std::uint64_t, Digraph::kMaxVertices> rows{};
  std::uint64_t slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (splitmix64(base + slot++) < threshold) rows[u] |= bit(v);
    }
  return Digraph::from_out_rows(n, std::span(rows).first(n));
}

}  // namespace dcl
