#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

// All readers throw FormatError with a distinct message on malformed input.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First line "n", then n lines of n characters '0'/'1'; entry (i,j)='1'
// means arc i->j; the diagonal must be '0'.
Digraph read_adjacency_text(std::istream& in);
void write_adjacency_text(const Digraph& d, std::ostream& out);

// digraph6: leading '&', the graph6 length encoding of n, then the n^2
// adjacency bits row-major packed 6 per character with offset 63.
Digraph read_digraph6(const std::string& line);
std::string write_digraph6(const Digraph& d);

// One `digraph` block, vertices v0..v(n-1), one edge line per arc.
// `highlight`, if nonempty, is a cycle whose arcs are drawn bold red.
void write_dot(const Digraph& d, std::ostream& out,
               const std::vector<int>& highlight = {});

// Reads either format: a line starting with '&' is digraph6, anything else
// is treated as the adjacency-text header.
Digraph read_digraph_auto(std::istream& in);

}  // namespace dcl
