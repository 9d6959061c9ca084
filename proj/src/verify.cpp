#include "dcl/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "dcl/conditions.hpp"
#include "dcl/cycles.hpp"
#include "dcl/enumerate.hpp"
#include "dcl/families.hpp"
#include "dcl/io.hpp"
#include "json.hpp"

namespace dcl {

namespace {

// Directed cycle through exactly the vertices of `mask`, or nullopt.
std::optional<VertexCycle> cycle_through(const Digraph& d,
                                         std::uint64_t mask) {
  std::vector<int> verts = mask_vertices(mask);
  if (verts.size() < 2) return std::nullopt;
  const int start = verts.front();
  std::vector<int> path{start};
  std::uint64_t used = bit(start);
  auto dfs = [&](auto&& self) -> bool {
    if (path.size() == verts.size())
      return d.has_arc(path.back(), start);
    for (std::uint64_t m = d.out_row(path.back()) & mask & ~used; m;
         m &= m - 1) {
      int v = std::countr_zero(m);
      path.push_back(v);
      used |= bit(v);
      if (self(self)) return true;
      path.pop_back();
      used &= ~bit(v);
    }
    return false;
  };
  if (dfs(dfs)) return VertexCycle{path};
  return std::nullopt;
}

void record_counterexample(const Digraph& d,
                           std::vector<std::string>& counterexamples) {
  counterexamples.push_back(write_digraph6(d));
}

void classify_theorem4(const Digraph& d, VerifyTotals& t,
                       std::vector<std::string>& cex) {
  if (!bgl_condition_fast(d)) return;
  ++t.condition_ok;
  try {
    CycleCertificate cert = find_3_cycle(d, /*verify_proof=*/true);
    if (cert.found()) {
      if (!validate_cycle(d, *cert.cycle) || cert.cycle->vertices.size() != 3)
        throw ProofViolation("certificate-validation", "bad 3-cycle");
      ++t.found;
    } else if (cert.exception->kind == FamilyKind::DB) {
      ++t.exception_DB;
    } else {
      ++t.exception_DL;
    }
  } catch (const ProofViolation&) {
    record_counterexample(d, cex);
  }
}

void classify_theorem5(const Digraph& d, VerifyTotals& t,
                       std::vector<std::string>& cex) {
  if (!bgl_condition_fast(d)) return;
  ++t.condition_ok;
  const int n = d.order();
  try {
    CycleCertificate cert = find_n_minus_1_cycle(d, /*verify_proof=*/true);
    if (cert.found()) {
      if (!validate_cycle(d, *cert.cycle) ||
          static_cast<int>(cert.cycle->vertices.size()) != n - 1)
        throw ProofViolation("certificate-validation", "bad (n-1)-cycle");
      ++t.found;
    } else if (cert.exception->kind == FamilyKind::DB) {
      ++t.exception_DB;
    } else if (cert.exception->kind == FamilyKind::PureCycle) {
      ++t.exception_pure_cycle;
    } else {
      throw ProofViolation("certificate-validation", "unexpected exception");
    }
  } catch (const ProofViolation&) {
    record_counterexample(d, cex);
  }
}

void classify_conjecture1(const Digraph& d, VerifyTotals& t,
                          std::vector<std::string>& cex) {
  if (!bgl_condition_fast(d)) return;
  ++t.condition_ok;
  if (is_pancyclic(d)) {
    ++t.found;
    return;
  }
  if (is_exceptional_DB(d).kind == FamilyKind::DB) {
    ++t.exception_DB;
    return;
  }
  if (is_exceptional_DL(d).kind == FamilyKind::DL) {
    ++t.exception_DL;
    return;
  }
  record_counterexample(d, cex);
}

void classify_theorem3(const Digraph& d, VerifyTotals& t,
                       std::vector<std::string>& cex) {
  if (!is_lsd(d)) return;
  ++t.condition_ok;
  const bool pan = is_pancyclic(d);
  const bool exceptional = is_exceptional_DL(d).kind == FamilyKind::DL;
  if (pan && !exceptional) {
    ++t.found;
  } else if (!pan && exceptional) {
    ++t.exception_DL;
  } else {
    record_counterexample(d, cex);
  }
}

void classify_lemma5(const Digraph& d, VerifyTotals& t,
                     std::vector<std::string>& cex) {
  if (d.order() >= 3 && has_cycle_of_length(d, 3)) return;
  ++t.condition_ok;
  bool ok = true;
  for (int u = 0; u < d.order() && ok; ++u)
    for (std::uint64_t m = d.out_row(u) & d.in_row(u); m && ok; m &= m - 1) {
      int v = std::countr_zero(m);
      if (v < u) continue;
      DegreeSumBound b = degree_sum_bound_check(d, u, v);
      if (!b.bound_holds || b.equality != b.all_pairs_two) ok = false;
    }
  if (ok)
    ++t.found;
  else
    record_counterexample(d, cex);
}

void classify_lemma8(const Digraph& d, VerifyTotals& t,
                     std::vector<std::string>& cex) {
  const int n = d.order();
  if (n < 5) return;
  if (has_cycle_of_length(d, n - 1)) return;
  // qualifying witnesses: an (n-2)-cycle whose two off-cycle vertices both
  // have degree >= n
  bool qualifies = false;
  bool ok = true;
  for (int v0 = 0; v0 < n && ok; ++v0)
    for (int v1 = v0 + 1; v1 < n && ok; ++v1) {
      if (d.degree(v0) < n || d.degree(v1) < n) continue;
      auto c = cycle_through(d, d.vertex_mask() & ~(bit(v0) | bit(v1)));
      if (!c) continue;
      qualifies = true;
      try {
        Lemma8Outcome out = lemma8_structure_check(d, *c, v0, v1);
        if (out == Lemma8Outcome::Bicomplete) {
          if (!(is_exceptional_DB(d).kind == FamilyKind::DB)) ok = false;
        } else if (out != Lemma8Outcome::StructureA) {
          ok = false;
        }
      } catch (const ProofViolation&) {
        ok = false;
      }
    }
  if (!qualifies) return;
  ++t.condition_ok;
  if (!ok) {
    record_counterexample(d, cex);
    return;
  }
  if (d.min_degree() >= n)
    ++t.exception_DB;
  else
    ++t.found;
}

}  // namespace

bool is_verify_target(const std::string& target) {
  return target == "theorem4" || target == "theorem5" ||
         target == "conjecture1" || target == "theorem3" ||
         target == "lemma5" || target == "lemma8";
}

void classify_for_target(const std::string& target, const Digraph& d,
                         VerifyTotals& totals,
                         std::vector<std::string>& counterexamples) {
  ++totals.enumerated;
  if (!is_strong(d)) return;
  ++totals.strong;
  if (target == "theorem4")
    classify_theorem4(d, totals, counterexamples);
  else if (target == "theorem5")
    classify_theorem5(d, totals, counterexamples);
  else if (target == "conjecture1")
    classify_conjecture1(d, totals, counterexamples);
  else if (target == "theorem3")
    classify_theorem3(d, totals, counterexamples);
  else if (target == "lemma5")
    classify_lemma5(d, totals, counterexamples);
  else if (target == "lemma8")
    classify_lemma8(d, totals, counterexamples);
  else
    throw std::invalid_argument("unknown verify target: " + target);
}

VerificationReport run_verify(const std::string& target, int n,
                              const VerifyOptions& opts) {
  if (!is_verify_target(target))
    throw std::invalid_argument("unknown verify target: " + target);
  const int min_n = target == "theorem5" ? 4 : 3;
  if (n < min_n)
    throw std::invalid_argument("target " + target + " needs n >= " +
                                std::to_string(min_n));
  VerificationReport report;
  report.target = target;
  report.n = n;
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.mode == VerifyMode::Exhaustive) {
    EnumerationSpec spec;
    spec.n = n;
    spec.shard_index = opts.shard_index;
    spec.shard_count = opts.shard_count;
    enumerate_digraphs(spec, [&](const Digraph& d) {
      classify_for_target(target, d, report.totals, report.counterexamples);
      return true;
    });
  } else {
    report.seed = opts.seed;
    const auto bound = [&](int i) {
      return static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(opts.sample_count) * i) /
          opts.shard_count);
    };
    for (std::uint64_t i = bound(opts.shard_index),
                       hi = bound(opts.shard_index + 1);
         i < hi; ++i)
      classify_for_target(target,
                          sample_digraph(n, opts.seed, i,
                                         opts.arc_probability),
                          report.totals, report.counterexamples);
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.counterexamples.erase(std::unique(report.counterexamples.begin(),
                                           report.counterexamples.end()),
                               report.counterexamples.end());
  if (opts.measure_time)
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
  return report;
}

VerificationReport merge_reports(
    const std::vector<VerificationReport>& parts) {
  if (parts.empty())
    throw std::invalid_argument("merge_reports: nothing to merge");
  VerificationReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.target != out.target || p.n != out.n || p.seed != out.seed)
      throw std::invalid_argument("merge_reports: mismatched parts");
    out.totals.enumerated += p.totals.enumerated;
    out.totals.strong += p.totals.strong;
    out.totals.condition_ok += p.totals.condition_ok;
    out.totals.found += p.totals.found;
    out.totals.exception_DB += p.totals.exception_DB;
    out.totals.exception_DL += p.totals.exception_DL;
    out.totals.exception_pure_cycle += p.totals.exception_pure_cycle;
    out.counterexamples.insert(out.counterexamples.end(),
                               p.counterexamples.begin(),
                               p.counterexamples.end());
    out.elapsed_ms += p.elapsed_ms;
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  out.counterexamples.erase(
      std::unique(out.counterexamples.begin(), out.counterexamples.end()),
      out.counterexamples.end());
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["target"] = report.target;
  j["n"] = report.n;
  j["totals"] = nlohmann::ordered_json{
      {"enumerated", report.totals.enumerated},
      {"strong", report.totals.strong},
      {"condition_ok", report.totals.condition_ok},
      {"found", report.totals.found},
      {"exception_DB", report.totals.exception_DB},
      {"exception_DL", report.totals.exception_DL},
      {"exception_pure_cycle", report.totals.exception_pure_cycle},
  };
  j["counterexamples"] = report.counterexamples;
  j["elapsed_ms"] = report.elapsed_ms;
  if (report.seed)
    j["seed"] = *report.seed;
  else
    j["seed"] = nullptr;
  return j.dump();
}

}  // namespace dcl
