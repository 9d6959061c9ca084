#include "dcl/cycles.hpp"

#include <algorithm>
#include <bit>

#include "dcl/conditions.hpp"

namespace dcl {

namespace {

// BFS distances to `target` restricted to `allowed`; -1 when unreachable.
void distances_to(const Digraph& d, int target, std::uint64_t allowed,
                  int* dist) {
  for (int v = 0; v < d.order(); ++v) dist[v] = -1;
  dist[target] = 0;
  std::uint64_t reached = bit(target);
  std::uint64_t frontier = bit(target);
  for (int step = 1; frontier; ++step) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= d.in_row(std::countr_zero(m));
    next &= allowed & ~reached;
    for (std::uint64_t m = next; m; m &= m - 1)
      dist[std::countr_zero(m)] = step;
    reached |= next;
    frontier = next;
  }
}

bool cycle_dfs(const Digraph& d, int start, int k, std::uint64_t allowed,
               const int* dist, std::vector<int>& path, std::uint64_t& used) {
  const int depth = static_cast<int>(path.size());
  const int u = path.back();
  if (depth == k) return d.has_arc(u, start);
  std::uint64_t cands = d.out_row(u) & allowed & ~used;
  for (std::uint64_t m = cands; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if (dist[v] < 0 || dist[v] > k - depth) continue;
    path.push_back(v);
    used |= bit(v);
    if (cycle_dfs(d, start, k, allowed, dist, path, used)) return true;
    path.pop_back();
    used &= ~bit(v);
  }
  return false;
}

}  // namespace

std::optional<VertexCycle> has_cycle_of_length(const Digraph& d, int k) {
  const int n = d.order();
  if (k < 2 || k > n)
    throw std::invalid_argument("cycle length must be in 2..n");
  int dist[Digraph::kMaxVertices];
  for (int s = 0; s + k <= n; ++s) {
    // cycles whose least vertex is s
    std::uint64_t allowed = d.vertex_mask() & ~(bit(s) - 1);
    distances_to(d, s, allowed, dist);
    std::vector<int> path{s};
    std::uint64_t used = bit(s);
    if (cycle_dfs(d, s, k, allowed, dist, path, used))
      return VertexCycle{path};
  }
  return std::nullopt;
}

std::set<int> cycle_spectrum(const Digraph& d) {
  std::set<int> spectrum;
  for (int k = 2; k <= d.order(); ++k)
    if (has_cycle_of_length(d, k)) spectrum.insert(k);
  return spectrum;
}

bool is_pancyclic(const Digraph& d) {
  for (int k = 3; k <= d.order(); ++k)
    if (!has_cycle_of_length(d, k)) return false;
  return d.order() >= 3;
}

namespace {

void two_way_dfs(const std::uint64_t* tw, std::vector<int>& path,
                 std::uint64_t& used, std::vector<int>& best) {
  if (path.size() > best.size()) best = path;
  for (std::uint64_t m = tw[path.back()] & ~used; m; m &= m - 1) {
    int v = std::countr_zero(m);
    path.push_back(v);
    used |= bit(v);
    two_way_dfs(tw, path, used, best);
    path.pop_back();
    used &= ~bit(v);
  }
}

}  // namespace

VertexPath longest_two_way_path(const Digraph& d) {
  const int n = d.order();
  std::uint64_t tw[Digraph::kMaxVertices];
  for (int v = 0; v < n; ++v) tw[v] = d.out_row(v) & d.in_row(v);
  std::vector<int> best{0};
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    std::uint64_t used = bit(s);
    two_way_dfs(tw, path, used, best);
  }
  return VertexPath{best};
}

DegreeSumBound degree_sum_bound_check(const Digraph& d, int u, int v) {
  const int n = d.order();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw std::invalid_argument("degree_sum_bound_check: bad vertex pair");
  if (!d.has_arc(u, v) || !d.has_arc(v, u))
    throw std::invalid_argument(
        "degree_sum_bound_check: arcs uv and vu must both be present");
  if (!is_strong(d))
    throw std::invalid_argument("degree_sum_bound_check: digraph not strong");
  if (n >= 3 && has_cycle_of_length(d, 3))
    throw std::invalid_argument(
        "degree_sum_bound_check: digraph contains a 3-cycle");
  DegreeSumBound r{};
  r.degree_sum = d.degree(u) + d.degree(v);
  r.bound_holds = r.degree_sum <= 2 * n;
  r.equality = r.degree_sum == 2 * n;
  r.all_pairs_two = true;
  const std::uint64_t pair = bit(u) | bit(v);
  for (int x = 0; x < n; ++x) {
    if (pair & bit(x)) continue;
    if (degree_between(d, pair, bit(x)) != 2) {
      r.all_pairs_two = false;
      break;
    }
  }
  return r;
}

namespace {

struct BypassContext {
  const Digraph* d;
  std::uint64_t cycle_mask;
  int pos[Digraph::kMaxVertices];  // cycle position by vertex id
  int cycle_len;
  const VertexCycle* cycle;
};

void bypass_dfs(const BypassContext& ctx, std::vector<int>& path,
                std::uint64_t& used, std::vector<Bypass>& out) {
  const Digraph& d = *ctx.d;
  int last = path.back();
  for (std::uint64_t m = d.out_row(last); m; m &= m - 1) {
    int w = std::countr_zero(m);
    if (ctx.cycle_mask & bit(w)) {
      if (w != path.front() && path.size() >= 2) {
        std::vector<int> full = path;
        full.push_back(w);
        int gap = (ctx.pos[w] - ctx.pos[path.front()] + ctx.cycle_len) %
                  ctx.cycle_len;
        out.push_back(Bypass{VertexPath{full}, *ctx.cycle, gap});
      }
    } else if (!(used & bit(w))) {
      path.push_back(w);
      used |= bit(w);
      bypass_dfs(ctx, path, used, out);
      path.pop_back();
      used &= ~bit(w);
    }
  }
}

// All bypasses in lexicographic order of their vertex sequences.
std::vector<Bypass> enumerate_bypasses(const Digraph& d,
                                       const VertexCycle& c) {
  if (!validate_cycle(d, c))
    throw std::invalid_argument("bypass search: cycle does not validate");
  BypassContext ctx{&d, 0, {}, static_cast<int>(c.vertices.size()), &c};
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    ctx.cycle_mask |= bit(c.vertices[i]);
    ctx.pos[c.vertices[i]] = static_cast<int>(i);
  }
  std::vector<Bypass> out;
  std::vector<int> starts = c.vertices;
  std::sort(starts.begin(), starts.end());
  for (int u : starts) {
    std::vector<int> path{u};
    std::uint64_t used = bit(u);
    bypass_dfs(ctx, path, used, out);
  }
  return out;
}

}  // namespace

std::optional<Bypass> find_bypass(const Digraph& d, const VertexCycle& c) {
  auto all = enumerate_bypasses(d, c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<Bypass> minimum_gap_bypass(const Digraph& d,
                                         const VertexCycle& c) {
  auto all = enumerate_bypasses(d, c);
  if (all.empty()) return std::nullopt;
  const Bypass* best = &all.front();
  for (const auto& b : all)
    if (b.gap_length < best->gap_length) best = &b;
  return *best;
}

namespace {

void check_insertion_inputs(const Digraph& d, const VertexPath& p,
                            const std::vector<int>& q_vertices,
                            bool q_is_cycle) {
  if (!validate_path(d, p))
    throw std::invalid_argument("insertion: P does not validate");
  if (q_is_cycle) {
    if (!validate_cycle(d, VertexCycle{q_vertices}))
      throw std::invalid_argument("insertion: Q does not validate");
  } else if (!validate_path(d, VertexPath{q_vertices})) {
    throw std::invalid_argument("insertion: Q does not validate");
  }
  if (mask_of(p.vertices) & mask_of(q_vertices))
    throw std::invalid_argument("insertion: P and Q share vertices");
}

std::optional<std::vector<int>> insert_once(const Digraph& d,
                                            const std::vector<int>& p,
                                            const std::vector<int>& q,
                                            bool q_is_cycle) {
  const std::size_t seams = q_is_cycle ? q.size() : q.size() - 1;
  for (std::size_t i = 0; i < seams; ++i) {
    int a = q[i];
    int b = q[(i + 1) % q.size()];
    if (d.has_arc(a, p.front()) && d.has_arc(p.back(), b)) {
      std::vector<int> merged(q.begin(), q.begin() + i + 1);
      merged.insert(merged.end(), p.begin(), p.end());
      merged.insert(merged.end(), q.begin() + i + 1, q.end());
      return merged;
    }
  }
  return std::nullopt;
}

bool multi_insert_search(const Digraph& d, const std::vector<int>& p,
                         std::size_t idx, std::vector<int>& host,
                         bool host_is_cycle) {
  if (idx == p.size()) return true;
  // longest block first, then backtrack over shorter blocks and other seams
  for (std::size_t len = p.size() - idx; len >= 1; --len) {
    int first = p[idx];
    int last = p[idx + len - 1];
    const std::size_t seams = host_is_cycle ? host.size() : host.size() - 1;
    for (std::size_t i = 0; i < seams; ++i) {
      int a = host[i];
      int b = host[(i + 1) % host.size()];
      if (!d.has_arc(a, first) || !d.has_arc(last, b)) continue;
      host.insert(host.begin() + i + 1, p.begin() + idx,
                  p.begin() + idx + len);
      if (multi_insert_search(d, p, idx + len, host, host_is_cycle))
        return true;
      host.erase(host.begin() + i + 1, host.begin() + i + 1 + len);
    }
  }
  return false;
}

}  // namespace

std::optional<VertexPath> insert_path(const Digraph& d, const VertexPath& p,
                                      const VertexPath& q) {
  check_insertion_inputs(d, p, q.vertices, false);
  if (auto merged = insert_once(d, p.vertices, q.vertices, false))
    return VertexPath{*merged};
  return std::nullopt;
}

std::optional<VertexCycle> insert_path(const Digraph& d, const VertexPath& p,
                                       const VertexCycle& q) {
  check_insertion_inputs(d, p, q.vertices, true);
  if (auto merged = insert_once(d, p.vertices, q.vertices, true))
    return VertexCycle{*merged};
  return std::nullopt;
}

std::optional<VertexPath> multi_insert(const Digraph& d, const VertexPath& p,
                                       const VertexPath& q) {
  check_insertion_inputs(d, p, q.vertices, false);
  std::vector<int> host = q.vertices;
  if (multi_insert_search(d, p.vertices, 0, host, false))
    return VertexPath{host};
  return std::nullopt;
}

std::optional<VertexCycle> multi_insert(const Digraph& d, const VertexPath& p,
                                        const VertexCycle& q) {
  check_insertion_inputs(d, p, q.vertices, true);
  std::vector<int> host = q.vertices;
  if (multi_insert_search(d, p.vertices, 0, host, true))
    return VertexCycle{host};
  return std::nullopt;
}

ExternalVertexClass classify_external_vertex(const Digraph& d,
                                             const VertexCycle& c, int w) {
  const int n = d.order();
  if (!validate_cycle(d, c))
    throw std::invalid_argument("classify_external_vertex: invalid cycle");
  const int k = static_cast<int>(c.vertices.size());
  if (k > n - 2)
    throw std::invalid_argument("classify_external_vertex: |C| must be <= n-2");
  const std::uint64_t cmask = mask_of(c.vertices);
  if (w < 0 || w >= n || (cmask & bit(w)))
    throw std::invalid_argument("classify_external_vertex: w must lie off C");
  if (!((d.out_row(w) | d.in_row(w)) & cmask))
    throw std::invalid_argument(
        "classify_external_vertex: w is not adjacent to C");
  for (int len = k + 1; len <= n - 1; ++len)
    if (has_cycle_of_length(d, len))
      throw std::invalid_argument(
          "classify_external_vertex: C is not a longest nonhamiltonian cycle");
  if (!bgl_condition_fast(d))
    throw std::invalid_argument(
        "classify_external_vertex: degree condition fails");
  if (d.degree(w) >= n) return ExternalVertexClass::HighDegree;
  if ((d.out_row(w) & cmask) == cmask) return ExternalVertexClass::FullOut;
  if ((d.in_row(w) & cmask) == cmask) return ExternalVertexClass::FullIn;
  throw ProofViolation("external-vertex-orientation",
                       "low-degree vertex adjacent to a longest "
                       "nonhamiltonian cycle dominates it in neither "
                       "direction");
}

namespace {

void reject_precondition(const Digraph& d, int min_order,
                         const char* caller) {
  const int n = d.order();
  if (n < min_order)
    throw std::invalid_argument(std::string(caller) + ": order below " +
                                std::to_string(min_order));
  if (!is_strong(d))
    throw std::invalid_argument(std::string(caller) + ": digraph not strong");
  if (!bgl_condition_fast(d))
    throw std::invalid_argument(std::string(caller) +
                                ": degree condition fails");
}

// Proof walk for the 3-cycle-free, long two-way path branch.
void verify_bipartite_branch(const Digraph& d, const VertexPath& p) {
  const int n = d.order();
  const int k = static_cast<int>(p.vertices.size()) - 1;
  if (k < 3)
    throw ProofViolation("two-way-path-length",
                         "longest two-way path of length 2 cannot occur");
  for (int v : p.vertices)
    if (d.degree(v) != n)
      throw ProofViolation("two-way-path-degree",
                           "vertex on longest two-way path has degree != n");
  for (int j = 0; j + 2 <= k; ++j) {
    int a = p.vertices[j], b = p.vertices[j + 2];
    if (d.out_row(a) != d.out_row(b))
      throw ProofViolation("alternating-out-neighborhoods",
                           "out-neighborhoods two apart on the longest "
                           "two-way path differ");
    if (d.in_row(a) != d.in_row(b))
      throw ProofViolation("alternating-in-neighborhoods",
                           "in-neighborhoods two apart on the longest "
                           "two-way path differ");
  }
  if (mask_of(p.vertices) != d.vertex_mask())
    throw ProofViolation("two-way-path-spans",
                         "longest two-way path does not cover all vertices");
}

void verify_lsd_branch(const Digraph& d) {
  const std::uint64_t vm = d.vertex_mask();
  for (int u = 0; u < d.order(); ++u)
    for (std::uint64_t m = d.out_row(u) & d.in_row(u); m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint64_t outside = vm & ~(bit(u) | bit(v));
      if ((d.out_row(u) & outside) != (d.out_row(v) & outside) ||
          (d.in_row(u) & outside) != (d.in_row(v) & outside))
        throw ProofViolation("two-way-arc-twin-neighborhoods",
                             "endpoints of a two-way arc differ outside the "
                             "pair");
    }
}

}  // namespace

CycleCertificate find_3_cycle(const Digraph& d, bool verify_proof) {
  reject_precondition(d, 3, "find_3_cycle");
  if (auto c3 = has_cycle_of_length(d, 3))
    return CycleCertificate{3, c3, std::nullopt};

  const VertexPath p = longest_two_way_path(d);
  const int length = static_cast<int>(p.vertices.size()) - 1;
  if (length >= 2) {
    if (verify_proof) verify_bipartite_branch(d, p);
    FamilyLabel db = is_exceptional_DB(d);
    if (db.kind != FamilyKind::DB)
      throw ProofViolation("bipartite-classification",
                           "3-cycle-free digraph with a long two-way path is "
                           "not a balanced complete bipartite digraph");
    return CycleCertificate{3, std::nullopt, db};
  }
  if (verify_proof) verify_lsd_branch(d);
  if (!is_lsd(d))
    throw ProofViolation("lsd-classification",
                         "3-cycle-free digraph without special pairs of low "
                         "degree is not locally semicomplete");
  FamilyLabel dl = is_exceptional_DL(d);
  if (dl.kind != FamilyKind::DL)
    throw ProofViolation("dl-classification",
                         "3-cycle-free strong LSD not recognized as "
                         "exceptional");
  for (const auto& block : dl.decomposition->blocks)
    if (block.size() > 2)
      throw ProofViolation("dl-block-size",
                           "round decomposition block of size > 2 in a "
                           "3-cycle-free digraph");
  return CycleCertificate{3, std::nullopt, dl};
}

Lemma8Outcome lemma8_structure_check(const Digraph& d, const VertexCycle& c,
                                     int v0, int v1) {
  const int n = d.order();
  if (!validate_cycle(d, c) ||
      static_cast<int>(c.vertices.size()) != n - 2)
    throw std::invalid_argument(
        "lemma8_structure_check: C must be a valid (n-2)-cycle");
  const std::uint64_t cmask = mask_of(c.vertices);
  if ((cmask | bit(v0) | bit(v1)) != d.vertex_mask() || v0 == v1 ||
      (cmask & (bit(v0) | bit(v1))))
    throw std::invalid_argument(
        "lemma8_structure_check: {v0,v1} must be the off-cycle vertices");
  if (has_cycle_of_length(d, n - 1)) return Lemma8Outcome::NotApplicable;
  if (d.degree(v0) < n || d.degree(v1) < n)
    return Lemma8Outcome::NotApplicable;
  if (n % 2 != 0)
    throw ProofViolation("alternating-structure-parity",
                         "hypothesis holds on an odd order");
  std::uint64_t odd = 0, even = 0;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    (i % 2 ? odd : even) |= bit(c.vertices[i]);
  auto matches = [&](int v, std::uint64_t cls) {
    return (d.out_row(v) & cmask) == cls && (d.in_row(v) & cmask) == cls;
  };
  bool ok = (matches(v0, odd) && matches(v1, even)) ||
            (matches(v0, even) && matches(v1, odd));
  if (!ok)
    throw ProofViolation("alternating-structure",
                         "off-cycle vertices do not alternate around the "
                         "(n-2)-cycle");
  if (!d.has_two_way_arc(v0, v1))
    throw ProofViolation("off-cycle-pair-arc",
                         "off-cycle vertices of degree >= n are not joined "
                         "by a two-way arc");
  if (d.min_degree() >= n) {
    if (is_exceptional_DB(d).kind != FamilyKind::DB)
      throw ProofViolation("bicomplete-structure",
                           "min degree >= n but D is not a balanced complete "
                           "bipartite digraph");
    return Lemma8Outcome::Bicomplete;
  }
  return Lemma8Outcome::StructureA;
}

namespace {

// Diagnostics for the provably empty branch where the longest
// nonhamiltonian cycle has length <= n-3. Raises naming the first broken
// inequality, or the case itself when everything checks out.
void short_cycle_diagnostics(const Digraph& d, const VertexCycle& c) {
  const int n = d.order();
  const int k = static_cast<int>(c.vertices.size());
  auto all = enumerate_bypasses(d, c);
  if (all.empty())
    throw ProofViolation("bypass-existence",
                         "longest nonhamiltonian cycle admits no bypass");
  const std::uint64_t cmask = mask_of(c.vertices);
  const std::uint64_t rmask = d.vertex_mask() & ~cmask;
  const int r_size = n - k;

  int min_gap = all.front().gap_length;
  for (const auto& b : all) min_gap = std::min(min_gap, b.gap_length);
  // prefer a minimum-gap bypass leaving some off-cycle vertex uncovered
  const Bypass* chosen = nullptr;
  for (const auto& b : all) {
    if (b.gap_length != min_gap) continue;
    if (!chosen) chosen = &b;
    if (rmask & ~mask_of(b.path.vertices)) {
      chosen = &b;
      break;
    }
  }
  const Bypass& bp = *chosen;
  const bool case11 = (rmask & ~mask_of(bp.path.vertices)) != 0;
  const int alpha = bp.gap_length;
  const int x1 = bp.path.vertices[1];
  // relabel the cycle so that position 0 is the bypass start
  int start_pos = 0;
  for (int i = 0; i < k; ++i)
    if (c.vertices[i] == bp.path.vertices.front()) start_pos = i;
  auto at = [&](int t) { return c.vertices[(start_pos + t) % k]; };
  std::uint64_t gap_mask = 0;   // C' = u_1..u_{alpha-1}
  for (int t = 1; t < alpha; ++t) gap_mask |= bit(at(t));
  std::uint64_t rest_mask = 0;  // C'' = u_alpha..u_0
  for (int t = alpha; t <= k; ++t) rest_mask |= bit(at(t % k));
  const int rest_size = k - alpha + 1;

  if (case11) {
    if (alpha < 2)
      throw ProofViolation("gap-length",
                           "gap of length 1 with an uncovered off-cycle "
                           "vertex contradicts cycle maximality");
    for (int t = 1; t < alpha; ++t) {
      int ub = at(t);
      if (degree_to(d, x1, gap_mask) + degree_to(d, ub, gap_mask) >
          2 * (alpha - 2))
        throw ProofViolation("gap-degree-sum",
                             "degree sum on the gap segment too large");
      if (degree_to(d, x1, rmask) + degree_to(d, ub, rmask) >
          2 * (r_size - 1))
        throw ProofViolation("offcycle-degree-sum",
                             "degree sum off the cycle too large");
    }
    if (degree_to(d, x1, rest_mask) > rest_size + 1)
      throw ProofViolation("tip-insertion-bound",
                           "bypass tip exceeds the non-insertable degree "
                           "bound");
    for (int t = 1; t < alpha; ++t) {
      int ug = at(t);
      if (d.has_arc(at(0), ug) &&
          degree_to(d, ug, rest_mask) < rest_size + 3)
        throw ProofViolation("gap-vertex-degree-lower-bound",
                             "dominated gap vertex below the insertion "
                             "degree bound");
    }
    if (alpha >= 2) {
      std::vector<int> gap_path, rest_path;
      for (int t = 1; t < alpha; ++t) gap_path.push_back(at(t));
      for (int t = alpha; t <= k; ++t) rest_path.push_back(at(t % k));
      if (multi_insert(d, VertexPath{gap_path}, VertexPath{rest_path}))
        throw ProofViolation("longest-cycle-maximality",
                             "gap segment multi-inserts into the rest of "
                             "the cycle, contradicting maximality");
    }
    throw ProofViolation("short-longest-cycle",
                         "case with an uncovered off-cycle vertex admits no "
                         "outcome");
  }
  if (alpha >= 2) {
    if (degree_to(d, x1, rmask) > r_size)
      throw ProofViolation("bypass-tail-degree",
                           "bypass tip exceeds the off-cycle degree bound");
    if (degree_to(d, x1, rest_mask) > rest_size)
      throw ProofViolation("tip-gap-degree",
                           "bypass tip exceeds the insertion bound on the "
                           "non-gap segment");
  }
  throw ProofViolation("short-longest-cycle",
                       "longest nonhamiltonian cycle of length <= n-3 under "
                       "the degree condition");
}

CycleCertificate small_order_certificate(const Digraph& d,
                                         bool /*verify_proof*/) {
  const int n = d.order();
  FamilyLabel db = is_exceptional_DB(d);
  if (db.kind == FamilyKind::DB)
    return CycleCertificate{n - 1, std::nullopt, db};
  auto ham = has_cycle_of_length(d, n);
  if (!ham)
    throw ProofViolation("hamiltonicity",
                         "degree condition holds but no hamiltonian cycle");
  // a forward chord u_i -> u_{i+2} closes an (n-1)-cycle directly
  const auto& h = ham->vertices;
  for (int i = 0; i < n; ++i) {
    if (d.has_arc(h[i], h[(i + 2) % n])) {
      std::vector<int> cyc{h[i]};
      for (int t = 2; t < n; ++t) cyc.push_back(h[(i + t) % n]);
      return CycleCertificate{n - 1, VertexCycle{cyc}, std::nullopt};
    }
  }
  // remaining chord configurations still force an (n-1)-cycle; locate it
  if (auto c = has_cycle_of_length(d, n - 1))
    return CycleCertificate{n - 1, *c, std::nullopt};
  throw ProofViolation("small-order-chords",
                       "order-" + std::to_string(n) +
                           " digraph without an (n-1)-cycle is neither the "
                           "pure cycle nor bipartite");
}

}  // namespace

CycleCertificate find_n_minus_1_cycle(const Digraph& d, bool verify_proof) {
  reject_precondition(d, 4, "find_n_minus_1_cycle");
  const int n = d.order();
  if (is_pure_cycle(d)) {
    FamilyLabel pure;
    pure.kind = FamilyKind::PureCycle;
    return CycleCertificate{n - 1, std::nullopt, pure};
  }
  if (n <= 5) return small_order_certificate(d, verify_proof);

  std::optional<VertexCycle> longest;
  for (int k = n - 1; k >= 2 && !longest; --k)
    longest = has_cycle_of_length(d, k);
  if (!longest)
    throw ProofViolation("chord-existence",
                         "non-cycle digraph has no nonhamiltonian cycle");
  const int k = static_cast<int>(longest->vertices.size());
  if (k == n - 1)
    return CycleCertificate{n - 1, *longest, std::nullopt};

  if (k == n - 2) {
    auto off = mask_vertices(d.vertex_mask() & ~mask_of(longest->vertices));
    if (verify_proof) {
      if (!minimum_gap_bypass(d, *longest))
        throw ProofViolation("bypass-existence",
                             "longest nonhamiltonian cycle admits no bypass");
      if (d.degree(off[0]) < n || d.degree(off[1]) < n)
        throw ProofViolation("off-cycle-degree",
                             "off-cycle vertex of an (n-2)-cycle has degree "
                             "< n");
    }
    Lemma8Outcome structure =
        lemma8_structure_check(d, *longest, off[0], off[1]);
    if (structure == Lemma8Outcome::Bicomplete) {
      FamilyLabel db = is_exceptional_DB(d);
      if (db.kind == FamilyKind::DB)
        return CycleCertificate{n - 1, std::nullopt, db};
    }
    throw ProofViolation("n-2-cycle-structure",
                         "(n-2)-cycle case does not resolve to the balanced "
                         "complete bipartite exception");
  }

  if (verify_proof) short_cycle_diagnostics(d, *longest);
  throw ProofViolation("short-longest-cycle",
                       "longest nonhamiltonian cycle has length <= n-3");
}

}  // namespace dcl
