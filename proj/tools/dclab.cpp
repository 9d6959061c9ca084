#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcl/conditions.hpp"
#include "dcl/cycles.hpp"
#include "dcl/enumerate.hpp"
#include "dcl/families.hpp"
#include "dcl/io.hpp"
#include "dcl/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

dcl::Digraph read_input(const std::string& path) {
  if (path == "-") return dcl::read_digraph_auto(std::cin);
  std::ifstream in(path);
  if (!in) throw dcl::FormatError("cannot open input file: " + path);
  return dcl::read_digraph_auto(in);
}

void emit(const dcl::Digraph& d, const std::string& format) {
  if (format == "d6")
    std::cout << dcl::write_digraph6(d) << "\n";
  else if (format == "dot")
    dcl::write_dot(d, std::cout);
  else
    dcl::write_adjacency_text(d, std::cout);
}

ordered_json decomposition_json(const dcl::RoundDecomposition& rd) {
  ordered_json j;
  j["quotient"] = dcl::write_digraph6(rd.quotient);
  j["blocks"] = rd.blocks;
  return j;
}

ordered_json certificate_json(const dcl::CycleCertificate& cert) {
  ordered_json j;
  j["target_length"] = cert.target_length;
  if (cert.found()) {
    j["outcome"] = "found";
    j["cycle"] = cert.cycle->vertices;
  } else {
    j["outcome"] = "exception";
    switch (cert.exception->kind) {
      case dcl::FamilyKind::DB:
        j["family"] = "bicomplete";
        j["part_a"] = dcl::mask_vertices(cert.exception->part_a);
        j["part_b"] = dcl::mask_vertices(cert.exception->part_b);
        break;
      case dcl::FamilyKind::DL:
        j["family"] = "round-composition";
        j["decomposition"] =
            decomposition_json(*cert.exception->decomposition);
        break;
      case dcl::FamilyKind::PureCycle:
        j["family"] = "pure-cycle";
        break;
      default:
        j["family"] = "none";
    }
  }
  return j;
}

std::vector<dcl::Filter> parse_filters(const std::vector<std::string>& names) {
  std::vector<dcl::Filter> filters;
  for (const auto& name : names) {
    if (name == "strong")
      filters.push_back(dcl::Filter::Strong);
    else if (name == "bgl-condition")
      filters.push_back(dcl::Filter::DegreeCondition);
    else if (name == "lsd")
      filters.push_back(dcl::Filter::Lsd);
    else if (name == "no-3-cycle")
      filters.push_back(dcl::Filter::No3Cycle);
    else
      throw CLI::ValidationError("--filters", "unknown filter: " + name);
  }
  return filters;
}

void parse_shard(const std::string& text, int& index, int& count) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw CLI::ValidationError("--shard", "expected i/t");
  index = std::stoi(text.substr(0, slash));
  count = std::stoi(text.substr(slash + 1));
  if (count < 1 || index < 0 || index >= count)
    throw CLI::ValidationError("--shard", "need 0 <= i < t");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph cycle-structure laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a digraph");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_format = "adj";
  gen->add_option("--format", gen_format, "adj, d6, or dot")
      ->check(CLI::IsMember({"adj", "d6", "dot"}));
  int gen_n = 3, gen_m = 2;
  std::uint64_t gen_seed = 1;
  auto* gen_cycle = gen->add_subcommand("cycle", "directed n-cycle");
  gen_cycle->fallthrough();
  gen_cycle->add_option("--n", gen_n, "order")->required();
  auto* gen_bi = gen->add_subcommand(
      "bicomplete", "complete bipartite digraph on parts of size m");
  gen_bi->fallthrough();
  gen_bi->add_option("--m", gen_m, "part size")->required();
  auto* gen_tour = gen->add_subcommand("tournament", "random tournament");
  gen_tour->fallthrough();
  gen_tour->add_option("--n", gen_n, "order")->required();
  gen_tour->add_option("--seed", gen_seed, "rng seed");
  auto* gen_rlt =
      gen->add_subcommand("round-lt", "random round local tournament");
  gen_rlt->fallthrough();
  gen_rlt->add_option("--n", gen_n, "order")->required();
  gen_rlt->add_option("--seed", gen_seed, "rng seed");
  auto* gen_comp = gen->add_subcommand(
      "compose", "substitution R[S_1..S_r] from digraph files");
  gen_comp->fallthrough();
  std::string comp_quotient;
  std::vector<std::string> comp_parts;
  gen_comp->add_option("--quotient", comp_quotient, "digraph file for R")
      ->required();
  gen_comp->add_option("--part", comp_parts, "digraph file per vertex of R")
      ->required();

  // check
  auto* check = app.add_subcommand("check", "test a digraph property");
  std::string check_what, check_file;
  check->add_option("property", check_what, "strong, bgl, lsd, db, or dl")
      ->required()
      ->check(CLI::IsMember({"strong", "bgl", "lsd", "db", "dl"}));
  check->add_option("file", check_file, "input digraph ('-' = stdin)")
      ->required();

  // decompose
  auto* decompose =
      app.add_subcommand("decompose", "round decomposition of an LSD");
  std::string dec_file;
  decompose->add_option("file", dec_file, "input digraph ('-' = stdin)")
      ->required();

  // find-cycle
  auto* findc = app.add_subcommand("find-cycle",
                                   "cycle certificate or exception label");
  std::string fc_file;
  bool fc_k3 = false, fc_nm1 = false, fc_verify = false;
  int fc_len = 0;
  findc->add_flag("--k3", fc_k3, "target a 3-cycle");
  findc->add_flag("--n-minus-1", fc_nm1, "target an (n-1)-cycle");
  findc->add_option("--length", fc_len, "target an exact cycle length");
  findc->add_flag("--verify-proof", fc_verify,
                  "check internal structure along the way");
  findc->add_option("file", fc_file, "input digraph ('-' = stdin)")
      ->required();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "all cycle lengths");
  std::string sp_file;
  spectrum->add_option("file", sp_file, "input digraph ('-' = stdin)")
      ->required();

  // enumerate
  auto* enumerate =
      app.add_subcommand("enumerate", "stream labeled digraphs as digraph6");
  int en_n = 0;
  std::vector<std::string> en_filters;
  std::string en_shard, en_dedup;
  bool en_big = false;
  enumerate->add_option("--n", en_n, "order")->required();
  enumerate->add_option("--filters", en_filters,
                        "strong, bgl-condition, lsd, no-3-cycle")
      ->delimiter(',');
  enumerate->add_option("--shard", en_shard, "i/t contiguous index range");
  enumerate->add_option("--dedup", en_dedup, "canonical")
      ->check(CLI::IsMember({"canonical"}));
  enumerate->add_flag("--big", en_big, "allow n = 6 (2^30 digraphs)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "classify every digraph against a statement's dichotomy");
  std::string ve_target, ve_mode = "exhaustive", ve_shard, ve_out;
  int ve_n = 0;
  std::uint64_t ve_seed = 1, ve_samples = 100000;
  double ve_prob = 0.5;
  bool ve_big = false, ve_timing = false;
  verify->add_option("--target", ve_target,
                     "theorem4, theorem5, conjecture1, theorem3, lemma5, "
                     "lemma8")
      ->required();
  verify->add_option("--n", ve_n, "order")->required();
  verify->add_option("--mode", ve_mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--seed", ve_seed, "rng seed (sampled mode)");
  verify->add_option("--samples", ve_samples, "sample count (sampled mode)");
  verify->add_option("--prob", ve_prob, "arc probability (sampled mode)");
  verify->add_option("--shard", ve_shard, "i/t partial run");
  verify->add_option("--out", ve_out, "append the JSONL report here");
  verify->add_flag("--big", ve_big, "allow n = 6 exhaustive");
  verify->add_flag("--timing", ve_timing,
                   "record wall-clock elapsed_ms (breaks byte-identical "
                   "reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      dcl::Digraph d{1};
      if (gen_cycle->parsed())
        d = dcl::gen_cycle(gen_n);
      else if (gen_bi->parsed())
        d = dcl::gen_bicomplete(gen_m);
      else if (gen_tour->parsed())
        d = dcl::gen_tournament_random(gen_n, gen_seed);
      else if (gen_rlt->parsed())
        d = dcl::gen_round_local_tournament_random(gen_n, gen_seed);
      else {
        dcl::Digraph r = read_input(comp_quotient);
        std::vector<dcl::Digraph> parts;
        for (const auto& p : comp_parts) parts.push_back(read_input(p));
        d = dcl::compose(r, parts);
      }
      emit(d, gen_format);
      return 0;
    }
    if (check->parsed()) {
      dcl::Digraph d = read_input(check_file);
      ordered_json j;
      bool holds = false;
      if (check_what == "strong") {
        holds = dcl::is_strong(d);
      } else if (check_what == "bgl") {
        auto verdict = dcl::conjecture1_condition_holds(d);
        holds = verdict.holds;
        ordered_json viol = ordered_json::array();
        for (const auto& v : verdict.violations)
          viol.push_back({{"vertex", v.vertex},
                          {"degree", v.degree},
                          {"pair", {v.witness.x, v.witness.y}},
                          {"common", v.witness.common},
                          {"kind", v.witness.kind == dcl::PairKind::Dominated
                                       ? "dominated"
                                       : "dominating"}});
        j["violations"] = viol;
      } else if (check_what == "lsd") {
        holds = dcl::is_lsd(d);
      } else if (check_what == "db") {
        auto label = dcl::is_exceptional_DB(d);
        holds = label.kind == dcl::FamilyKind::DB;
        if (holds) {
          j["part_a"] = dcl::mask_vertices(label.part_a);
          j["part_b"] = dcl::mask_vertices(label.part_b);
        }
      } else {
        auto label = dcl::is_exceptional_DL(d);
        holds = label.kind == dcl::FamilyKind::DL;
        if (holds) j["decomposition"] = decomposition_json(*label.decomposition);
      }
      j["property"] = check_what;
      j["holds"] = holds;
      std::cout << j.dump() << "\n";
      return holds ? 0 : 1;
    }
    if (decompose->parsed()) {
      dcl::Digraph d = read_input(dec_file);
      auto rd = dcl::round_decomposition(d);
      if (!rd) {
        std::cout << "{\"decomposition\":null}\n";
        return 1;
      }
      std::cout << decomposition_json(*rd).dump() << "\n";
      return 0;
    }
    if (findc->parsed()) {
      if (static_cast<int>(fc_k3) + static_cast<int>(fc_nm1) +
              static_cast<int>(fc_len > 0) !=
          1) {
        std::cerr << "find-cycle needs exactly one of --k3, --n-minus-1, "
                     "--length K\n";
        return 2;
      }
      dcl::Digraph d = read_input(fc_file);
      if (fc_len > 0) {
        auto c = dcl::has_cycle_of_length(d, fc_len);
        ordered_json j;
        j["target_length"] = fc_len;
        if (c) {
          j["outcome"] = "found";
          j["cycle"] = c->vertices;
        } else {
          j["outcome"] = "none";
        }
        std::cout << j.dump() << "\n";
        return c ? 0 : 1;
      }
      try {
        dcl::CycleCertificate cert =
            fc_k3 ? dcl::find_3_cycle(d, fc_verify)
                  : dcl::find_n_minus_1_cycle(d, fc_verify);
        std::cout << certificate_json(cert).dump() << "\n";
        return 0;
      } catch (const dcl::ProofViolation& e) {
        std::cerr << "structural violation: " << e.what() << "\n";
        return 1;
      }
    }
    if (spectrum->parsed()) {
      dcl::Digraph d = read_input(sp_file);
      auto sp = dcl::cycle_spectrum(d);
      ordered_json j;
      j["spectrum"] = std::vector<int>(sp.begin(), sp.end());
      j["pancyclic"] = dcl::is_pancyclic(d);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (enumerate->parsed()) {
      if (en_n > 5 && !en_big) {
        std::cerr << "n > 5 exhaustive enumeration needs --big\n";
        return 2;
      }
      dcl::EnumerationSpec spec;
      spec.n = en_n;
      spec.filters = parse_filters(en_filters);
      if (!en_shard.empty())
        parse_shard(en_shard, spec.shard_index, spec.shard_count);
      spec.dedup_canonical = en_dedup == "canonical";
      dcl::enumerate_digraphs(spec, [](const dcl::Digraph& d) {
        std::cout << dcl::write_digraph6(d) << "\n";
        return true;
      });
      return 0;
    }
    // verify
    if (!dcl::is_verify_target(ve_target)) {
      std::cerr << "unknown target: " << ve_target << "\n";
      return 2;
    }
    dcl::VerifyOptions opts;
    opts.mode = ve_mode == "sampled" ? dcl::VerifyMode::Sampled
                                     : dcl::VerifyMode::Exhaustive;
    if (opts.mode == dcl::VerifyMode::Exhaustive && ve_n > 5 && !ve_big) {
      std::cerr << "n > 5 exhaustive verification needs --big\n";
      return 2;
    }
    opts.seed = ve_seed;
    opts.sample_count = ve_samples;
    opts.arc_probability = ve_prob;
    opts.measure_time = ve_timing;
    if (!ve_shard.empty())
      parse_shard(ve_shard, opts.shard_index, opts.shard_count);
    dcl::VerificationReport report = dcl::run_verify(ve_target, ve_n, opts);
    const std::string line = dcl::report_to_json(report);
    if (ve_out.empty()) {
      std::cout << line << "\n";
    } else {
      std::ofstream out(ve_out, std::ios::app);
      if (!out) {
        std::cerr << "cannot open " << ve_out << "\n";
        return 2;
      }
      out << line << "\n";
    }
    return report.counterexamples.empty() ? 0 : 1;
  } catch (const dcl::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
