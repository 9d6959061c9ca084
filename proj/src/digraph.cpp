#include "dcl/digraph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dcl {

Digraph::Digraph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 1..64, got " +
                                std::to_string(n));
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("vertex id out of range: (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ")");
  if (u == v)
    throw std::invalid_argument("loop arc rejected at vertex " +
                                std::to_string(u));
  out_[u] |= bit(v);
  in_[v] |= bit(u);
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

Digraph Digraph::from_arcs(int n,
                           std::initializer_list<std::pair<int, int>> arcs) {
  return from_arcs(n, std::span<const std::pair<int, int>>(arcs.begin(),
                                                           arcs.size()));
}

Digraph Digraph::from_out_rows(int n, std::span<const std::uint64_t> rows) {
  Digraph d(n);
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("row count does not match vertex count");
  const std::uint64_t vm = d.vertex_mask();
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~vm)
      throw std::invalid_argument("adjacency row has bits beyond n");
    if (rows[u] & bit(u)) throw std::invalid_argument("diagonal bit set");
    d.out_[u] = rows[u];
  }
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = d.out_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      d.in_[v] |= bit(u);
    }
  }
  return d;
}

int Digraph::out_degree(int u) const { return std::popcount(out_[u]); }
int Digraph::in_degree(int u) const { return std::popcount(in_[u]); }

int Digraph::min_degree() const {
  int m = 2 * (n_ - 1) + 1;
  for (int u = 0; u < n_; ++u) m = std::min(m, degree(u));
  return m;
}

int Digraph::arc_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += out_degree(u);
  return c;
}

std::uint64_t Digraph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool Digraph::operator==(const Digraph& other) const {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u)
    if (out_[u] != other.out_[u]) return false;
  return true;
}

std::uint64_t mask_of(std::span<const int> vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

std::uint64_t mask_of(std::initializer_list<int> vertices) {
  return mask_of(std::span<const int>(vertices.begin(), vertices.size()));
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

int degree_between(const Digraph& d, std::uint64_t f, std::uint64_t h) {
  if (f & h) throw std::invalid_argument("degree_between: sets overlap");
  int c = 0;
  for (std::uint64_t m = f; m;) {
    int u = std::countr_zero(m);
    m &= m - 1;
    c += std::popcount(d.out_row(u) & h) + std::popcount(d.in_row(u) & h);
  }
  return c;
}

int degree_to(const Digraph& d, int u, std::uint64_t mask) {
  mask &= ~bit(u);
  return std::popcount(d.out_row(u) & mask) +
         std::popcount(d.in_row(u) & mask);
}

namespace {

std::uint64_t reach_forward(const Digraph& d, std::uint64_t seed) {
  std::uint64_t reached = seed;
  std::uint64_t frontier = seed;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= d.out_row(u);
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached;
}

std::uint64_t reach_backward(const Digraph& d, std::uint64_t seed) {
  std::uint64_t reached = seed;
  std::uint64_t frontier = seed;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= d.in_row(u);
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached;
}

}  // namespace

bool is_strong(const Digraph& d) {
  const std::uint64_t all = d.vertex_mask();
  if (d.order() == 1) return true;
  return reach_forward(d, 1) == all && reach_backward(d, 1) == all;
}

std::optional<int> girth(const Digraph& d) {
  const int n = d.order();
  int best = n + 1;
  for (int u = 0; u < n && best > 2; ++u) {
    // BFS from u; an arc back to u from a vertex at distance L closes a
    // cycle of length L+1.
    std::uint64_t reached = bit(u);
    std::uint64_t frontier = d.out_row(u);
    reached |= frontier;
    for (int dist = 1; frontier && dist + 1 < best; ++dist) {
      bool closes = false;
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (d.has_arc(v, u)) closes = true;
        next |= d.out_row(v);
      }
      if (closes) {
        best = dist + 1;
        break;
      }
      frontier = next & ~reached;
      reached |= frontier;
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

namespace {

bool sequence_ok(const Digraph& d, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  std::uint64_t seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= d.order()) return false;
    if (seen & bit(v)) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!d.has_arc(vs[i], vs[i + 1])) return false;
  return true;
}

}  // namespace

bool validate_path(const Digraph& d, const VertexPath& p) {
  return sequence_ok(d, p.vertices);
}

bool validate_cycle(const Digraph& d, const VertexCycle& c) {
  if (c.vertices.size() < 2) return false;
  if (!sequence_ok(d, c.vertices)) return false;
  return d.has_arc(c.vertices.back(), c.vertices.front());
}

}  // namespace dcl
