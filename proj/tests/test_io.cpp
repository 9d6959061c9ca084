#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dcl/digraph.hpp"
#include "dcl/enumerate.hpp"
#include "dcl/families.hpp"
#include "dcl/io.hpp"

using dcl::Digraph;

namespace {

Digraph from_text(const std::string& text) {
  std::istringstream in(text);
  return dcl::read_adjacency_text(in);
}

std::string to_text(const Digraph& d) {
  std::ostringstream out;
  dcl::write_adjacency_text(d, out);
  return out.str();
}

}  // namespace

TEST_CASE("adjacency text round trip for the 3-cycle") {
  Digraph c3 = dcl::gen_cycle(3);
  std::string text = to_text(c3);
  CHECK(text == "3\n010\n001\n100\n");
  CHECK(from_text(text) == c3);
}

TEST_CASE("bicomplete digraph has out-degree rows (2,2,2,2)") {
  std::string text = to_text(dcl::gen_bicomplete(2));
  CHECK(text == "4\n0011\n0011\n1100\n1100\n");
}

TEST_CASE("adjacency text diagnostics are distinct") {
  auto message = [](const std::string& text) {
    try {
      from_text(text);
    } catch (const dcl::FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("") == "missing header line");
  CHECK(message("abc\n").find("malformed header") == 0);
  CHECK(message("0\n").find("vertex count out of range") == 0);
  CHECK(message("65\n").find("vertex count out of range") == 0);
  CHECK(message("2\n01\n").find("missing adjacency row") == 0);
  CHECK(message("2\n010\n00\n").find("non-square matrix") == 0);
  CHECK(message("2\n0x\n00\n").find("bad matrix character") == 0);
  CHECK(message("2\n10\n00\n").find("diagonal entry '1'") == 0);
}

TEST_CASE("digraph6 matches hand-packed encoding for the 3-cycle") {
  // bits row-major: 010 001 100 -> 010001 100(000) -> chars 63+17, 63+32
  CHECK(dcl::write_digraph6(dcl::gen_cycle(3)) == "&BP_");
  CHECK(dcl::read_digraph6("&BP_") == dcl::gen_cycle(3));
}

TEST_CASE("digraph6 diagnostics are distinct") {
  auto message = [](const std::string& line) {
    try {
      dcl::read_digraph6(line);
    } catch (const dcl::FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("BQ_") == "digraph6 line must start with '&'");
  CHECK(message("&") == "truncated digraph6 header");
  CHECK(message("&B\x01Q") == "illegal digraph6 character");
  CHECK(message("&BP") == "digraph6 payload length mismatch");
  CHECK(message("&BP__") == "digraph6 payload length mismatch");
  CHECK(message("&BPc") == "nonzero digraph6 padding bits");
  // first payload bit set = entry (0,0)
  CHECK(message(std::string("&B") + static_cast<char>(63 + 32) + "_") ==
        "digraph6 diagonal bit set");
}

TEST_CASE("random digraphs round trip through both formats") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(i % 12);
    Digraph d = dcl::sample_digraph(n, 77, i, 0.4);
    CHECK(dcl::read_digraph6(dcl::write_digraph6(d)) == d);
    CHECK(from_text(to_text(d)) == d);
  }
}

TEST_CASE("digraph6 long-form vertex count encoding round trips") {
  Digraph d = dcl::sample_digraph(63, 5, 0, 0.1);
  std::string s = dcl::write_digraph6(d);
  CHECK(s[1] == 126);  // three-character n encoding
  CHECK(dcl::read_digraph6(s) == d);
  Digraph d64 = dcl::sample_digraph(64, 5, 1, 0.1);
  CHECK(dcl::read_digraph6(dcl::write_digraph6(d64)) == d64);
}

TEST_CASE("dot export lists vertices and highlights cycle arcs") {
  std::ostringstream out;
  dcl::write_dot(dcl::gen_cycle(3), out, {0, 1, 2});
  std::string dot = out.str();
  CHECK(dot.find("digraph D {") == 0);
  CHECK(dot.find("v0 -> v1 [color=red, penwidth=2];") != std::string::npos);
  CHECK(dot.find("v2 -> v0 [color=red, penwidth=2];") != std::string::npos);
  std::ostringstream plain;
  dcl::write_dot(dcl::gen_cycle(3), plain);
  CHECK(plain.str().find("color=red") == std::string::npos);
}

TEST_CASE("auto reader accepts both formats") {
  std::istringstream d6("&BP_\n");
  CHECK(dcl::read_digraph_auto(d6) == dcl::gen_cycle(3));
  std::istringstream adj("3\n010\n001\n100\n");
  CHECK(dcl::read_digraph_auto(adj) == dcl::gen_cycle(3));
}
