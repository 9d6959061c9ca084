#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dcl {

// Loop-free digraph on dense vertex ids 0..n-1, n <= 64. Adjacency is one
// 64-bit row per vertex for each direction; the in-rows are derived from the
// out-rows and kept consistent. Two-cycles (arcs both ways) are allowed.
// Treat values as immutable once built; the enumeration harness shares them
// freely between workers.
class Digraph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Digraph(int n);

  // Throws std::invalid_argument on loops or out-of-range vertex ids.
  // Duplicate arcs collapse.
  static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);
  static Digraph from_arcs(int n,
                           std::initializer_list<std::pair<int, int>> arcs);

  // Rows must have no diagonal bit and no bit >= n.
  static Digraph from_out_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  std::uint64_t out_row(int u) const { return out_[u]; }
  std::uint64_t in_row(int u) const { return in_[u]; }
  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1u; }
  bool adjacent(int u, int v) const {
    return ((out_[u] | in_[u]) >> v) & 1u;
  }
  bool has_two_way_arc(int u, int v) const {
    return ((out_[u] & in_[u]) >> v) & 1u;
  }
  int out_degree(int u) const;
  int in_degree(int u) const;
  int degree(int u) const { return out_degree(u) + in_degree(u); }
  int min_degree() const;
  int arc_count() const;
  std::uint64_t vertex_mask() const;

  // Validates like from_arcs; used by builders and generators.
  void add_arc(int u, int v);

  bool operator==(const Digraph& other) const;

 private:
  int n_;
  std::array<std::uint64_t, kMaxVertices> out_{};
  std::array<std::uint64_t, kMaxVertices> in_{};
};

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t mask_of(std::span<const int> vertices);
std::uint64_t mask_of(std::initializer_list<int> vertices);
std::vector<int> mask_vertices(std::uint64_t mask);

// Number of arcs between disjoint vertex sets F and H, both directions.
// Throws std::invalid_argument if the masks overlap.
int degree_between(const Digraph& d, std::uint64_t f, std::uint64_t h);

// Arcs between u and the vertices in `mask`, both directions; u itself is
// excluded from the mask.
int degree_to(const Digraph& d, int u, std::uint64_t mask);

bool is_strong(const Digraph& d);

// Length of the shortest directed cycle; nullopt for acyclic digraphs.
std::optional<int> girth(const Digraph& d);

struct VertexPath {
  std::vector<int> vertices;
  bool operator==(const VertexPath&) const = default;
};

struct VertexCycle {
  std::vector<int> vertices;  // length = number of vertices = number of arcs
  bool operator==(const VertexCycle&) const = default;
};

bool validate_path(const Digraph& d, const VertexPath& p);
bool validate_cycle(const Digraph& d, const VertexCycle& c);

}  // namespace dcl
