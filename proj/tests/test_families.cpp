#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcl/enumerate.hpp"
#include "dcl/families.hpp"
#include "oracles.hpp"

using dcl::Digraph;

namespace {

Digraph two_cycle_pair() { return Digraph::from_arcs(2, {{0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("semicompleteness and local semicompleteness") {
  CHECK(dcl::is_semicomplete(dcl::gen_cycle(3)));
  CHECK(!dcl::is_semicomplete(dcl::gen_cycle(4)));
  CHECK(dcl::is_semicomplete(two_cycle_pair()));
  // tournaments are local tournaments
  Digraph t = dcl::gen_tournament_random(6, 42);
  CHECK(dcl::is_semicomplete(t));
  CHECK(dcl::is_lsd(t));
  CHECK(dcl::is_local_tournament(t));
  // the bicomplete digraph has nonadjacent vertices inside a neighborhood
  CHECK(!dcl::is_lsd(dcl::gen_bicomplete(2)));
  // directed cycles are local tournaments
  CHECK(dcl::is_local_tournament(dcl::gen_cycle(5)));
  CHECK(!dcl::is_local_tournament(two_cycle_pair()));  // 2-cycle present
  CHECK(dcl::is_lsd(two_cycle_pair()));
}

TEST_CASE("round labeling checks the definitional runs") {
  Digraph c5 = dcl::gen_cycle(5);
  CHECK(dcl::check_round_labeling(c5, {0, 1, 2, 3, 4}));
  CHECK(dcl::check_round_labeling(c5, {1, 2, 3, 4, 0}));
  CHECK(!dcl::check_round_labeling(c5, {0, 2, 1, 3, 4}));
  CHECK(!dcl::check_round_labeling(c5, {0, 1, 2, 3}));
  CHECK(!dcl::check_round_labeling(c5, {0, 1, 2, 3, 3}));
}

TEST_CASE("find_round_labeling on generated round local tournaments") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    Digraph d = dcl::gen_round_local_tournament_random(n, seed);
    CHECK(dcl::is_local_tournament(d));
    CHECK(dcl::check_round_labeling(d, [&] {
      std::vector<int> identity(n);
      for (int v = 0; v < n; ++v) identity[v] = v;
      return identity;
    }()));
    auto order = dcl::find_round_labeling(d);
    REQUIRE(order.has_value());
    CHECK(dcl::check_round_labeling(d, *order));
  }
}

TEST_CASE("find_round_labeling agrees with the permutation reference") {
  for (std::uint64_t i = 0; i < 1500; ++i) {
    Digraph d = dcl::sample_digraph(4, 21, i, 0.4);
    CHECK(dcl::find_round_labeling(d).has_value() ==
          oracle::detail::is_round(d));
  }
  for (std::uint64_t i = 0; i < 300; ++i) {
    Digraph d = dcl::sample_digraph(5, 22, i, 0.35);
    CHECK(dcl::find_round_labeling(d).has_value() ==
          oracle::detail::is_round(d));
  }
}

TEST_CASE("composition lays blocks out consecutively") {
  // C_3 with the first vertex blown up into a 2-cycle
  Digraph d = dcl::compose(dcl::gen_cycle(3),
                           {two_cycle_pair(), Digraph(1), Digraph(1)});
  CHECK(d.order() == 4);
  CHECK(d.has_two_way_arc(0, 1));
  for (int u : {0, 1}) CHECK(d.has_arc(u, 2));
  CHECK(d.has_arc(2, 3));
  CHECK(!d.has_arc(2, 0));
  CHECK(d.has_arc(3, 0));
  CHECK(d.has_arc(3, 1));
}

TEST_CASE("composition rejects bad shapes") {
  CHECK_THROWS_AS(dcl::compose(dcl::gen_cycle(3), {Digraph(1), Digraph(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dcl::compose(dcl::gen_cycle(2), {Digraph(40), Digraph(40)}),
                  std::invalid_argument);
}

TEST_CASE("round decompositions match the brute-force reference") {
  auto check_all = [](const Digraph& d) {
    std::vector<std::vector<std::vector<int>>> lib, ref;
    for (const auto& dec : dcl::all_round_decompositions(d))
      lib.push_back(dec.blocks);
    for (const auto& dec : oracle::round_decompositions(d))
      ref.push_back(dec.blocks);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    CHECK(lib == ref);
  };
  for (std::uint64_t idx = 0; idx < dcl::index_count(3); ++idx)
    check_all(dcl::decode_index(3, idx));
  for (std::uint64_t i = 0; i < 400; ++i)
    check_all(dcl::sample_digraph(4, 31, i, 0.4));
  for (std::uint64_t i = 0; i < 60; ++i)
    check_all(dcl::sample_digraph(5, 32, i, 0.4));
}

TEST_CASE("strong semicomplete digraphs decompose as a single block") {
  Digraph t = dcl::gen_tournament_random(5, 7);
  if (!dcl::is_strong(t)) t = dcl::gen_cycle(3);
  auto dec = dcl::round_decomposition(t);
  REQUIRE(dec.has_value());
  CHECK(dec->block_count() == 1);
  CHECK(dec->quotient.order() == 1);
}

TEST_CASE("exceptional family membership for known members") {
  // C_4 sits in both exceptional families' scope: it is the pure cycle and
  // a round composition with singleton blocks and quotient girth 4 > 3
  Digraph c4 = dcl::gen_cycle(4);
  CHECK(dcl::is_pure_cycle(c4));
  CHECK(dcl::is_exceptional_DL(c4).kind == dcl::FamilyKind::DL);
  CHECK(dcl::is_exceptional_DB(dcl::gen_bicomplete(2)).kind ==
        dcl::FamilyKind::DB);
  CHECK(dcl::is_exceptional_DB(dcl::gen_bicomplete(3)).kind ==
        dcl::FamilyKind::DB);

  // C_4 with one vertex blown up into a 2-cycle: girth 4 > max(2,2)+1
  Digraph blown = dcl::compose(
      dcl::gen_cycle(4),
      {two_cycle_pair(), Digraph(1), Digraph(1), Digraph(1)});
  auto label = dcl::is_exceptional_DL(blown);
  REQUIRE(label.kind == dcl::FamilyKind::DL);
  REQUIRE(label.decomposition.has_value());
  CHECK(label.decomposition->block_count() == 4);

  // blowing up a vertex of C_3 gives quotient girth 3 = max(2,2)+1: not in
  Digraph blown3 = dcl::compose(dcl::gen_cycle(3),
                                {two_cycle_pair(), Digraph(1), Digraph(1)});
  CHECK(dcl::is_exceptional_DL(blown3).kind == dcl::FamilyKind::None);
}

TEST_CASE("exceptional family negatives") {
  CHECK(dcl::is_exceptional_DB(dcl::gen_cycle(4)).kind ==
        dcl::FamilyKind::None);
  CHECK(dcl::is_exceptional_DB(two_cycle_pair()).kind ==
        dcl::FamilyKind::None);  // n < 4
  // remove one arc from the bicomplete digraph
  Digraph d = dcl::gen_bicomplete(2);
  Digraph broken(4);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v && d.has_arc(u, v) && !(u == 0 && v == 2))
        broken.add_arc(u, v);
  CHECK(dcl::is_exceptional_DB(broken).kind == dcl::FamilyKind::None);
  CHECK(dcl::is_exceptional_DL(dcl::gen_cycle(3)).kind ==
        dcl::FamilyKind::None);  // girth 3 is not > 3
  CHECK(!dcl::is_pure_cycle(dcl::gen_bicomplete(2)));
  CHECK(!dcl::is_pure_cycle(Digraph(1)));
}

TEST_CASE("exceptional membership matches the reference on small digraphs") {
  for (std::uint64_t idx = 0; idx < dcl::index_count(3); ++idx) {
    Digraph d = dcl::decode_index(3, idx);
    CHECK((dcl::is_exceptional_DL(d).kind == dcl::FamilyKind::DL) ==
          oracle::exceptional_round_composition(d));
  }
  for (std::uint64_t i = 0; i < 400; ++i) {
    Digraph d = dcl::sample_digraph(4, 55, i, 0.4);
    CHECK((dcl::is_exceptional_DL(d).kind == dcl::FamilyKind::DL) ==
          oracle::exceptional_round_composition(d));
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    Digraph d = dcl::sample_digraph(5, 56, i, 0.35);
    CHECK((dcl::is_exceptional_DL(d).kind == dcl::FamilyKind::DL) ==
          oracle::exceptional_round_composition(d));
  }
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(dcl::gen_tournament_random(7, 5) == dcl::gen_tournament_random(7, 5));
  CHECK(dcl::gen_round_local_tournament_random(7, 5) ==
        dcl::gen_round_local_tournament_random(7, 5));
  CHECK(!(dcl::gen_tournament_random(7, 5) ==
          dcl::gen_tournament_random(7, 6)));
}

TEST_CASE("generated cycles and bicomplete digraphs have the right shape") {
  Digraph c6 = dcl::gen_cycle(6);
  CHECK(dcl::is_pure_cycle(c6));
  CHECK(c6.arc_count() == 6);
  Digraph b3 = dcl::gen_bicomplete(3);
  CHECK(b3.order() == 6);
  CHECK(b3.arc_count() == 18);
  for (int v = 0; v < 6; ++v) CHECK(b3.degree(v) == 6);
}
