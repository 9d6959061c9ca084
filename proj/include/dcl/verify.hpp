#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyTotals {
  std::uint64_t enumerated = 0;
  std::uint64_t strong = 0;
  std::uint64_t condition_ok = 0;
  std::uint64_t found = 0;
  std::uint64_t exception_DB = 0;
  std::uint64_t exception_DL = 0;
  std::uint64_t exception_pure_cycle = 0;
};

struct VerificationReport {
  std::string target;
  int n = 0;
  VerifyTotals totals;
  std::vector<std::string> counterexamples;  // digraph6, sorted, deduped
  std::uint64_t elapsed_ms = 0;
  std::optional<std::uint64_t> seed;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  int shard_index = 0;
  int shard_count = 1;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  double arc_probability = 0.5;
  // Wall-clock timing breaks byte-identical reports, so it is opt-in;
  // elapsed_ms stays 0 otherwise.
  bool measure_time = false;
};

bool is_verify_target(const std::string& target);

// Runs one target at one order. Targets: theorem4 (3-cycle dichotomy),
// theorem5 ((n-1)-cycle dichotomy), conjecture1 (pancyclicity dichotomy),
// theorem3 (strong LSD pancyclic iff not exceptional), lemma5 (two-way arc
// degree-sum bound), lemma8 ((n-2)-cycle alternation structure).
// Throws std::invalid_argument for unknown targets or unsupported orders.
VerificationReport run_verify(const std::string& target, int n,
                              const VerifyOptions& opts);

// Classifies a single digraph for the target, updating totals or recording
// a counterexample. Exposed so tests can replay recorded counterexamples.
void classify_for_target(const std::string& target, const Digraph& d,
                         VerifyTotals& totals,
                         std::vector<std::string>& counterexamples);

// Fold for sharded runs: same target and n required; totals add,
// counterexamples concatenate, then sort and dedup.
VerificationReport merge_reports(const std::vector<VerificationReport>& parts);

// One JSON object, no trailing newline; key order is fixed:
// target, n, totals, counterexamples, elapsed_ms, seed.
std::string report_to_json(const VerificationReport& report);

}  // namespace dcl
