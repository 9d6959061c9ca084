#include "dcl/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dcl {

Digraph read_adjacency_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("missing header line");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(header, &pos);
    while (pos < header.size() && std::isspace(header[pos])) ++pos;
    if (pos != header.size()) throw FormatError("");
  } catch (...) {
    throw FormatError("malformed header: expected vertex count, got \"" +
                      header + "\"");
  }
  if (n < 1 || n > Digraph::kMaxVertices)
    throw FormatError("vertex count out of range 1..64: " + std::to_string(n));
  Digraph d(n);
  std::string row;
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, row)) throw FormatError("missing adjacency row");
    while (!row.empty() && (row.back() == '\r' || row.back() == ' '))
      row.pop_back();
    if (static_cast<int>(row.size()) != n)
      throw FormatError("non-square matrix: row " + std::to_string(i) +
                        " has " + std::to_string(row.size()) + " entries");
    for (int j = 0; j < n; ++j) {
      char c = row[j];
      if (c != '0' && c != '1')
        throw FormatError(std::string("bad matrix character '") + c + "'");
      if (c == '1') {
        if (i == j)
          throw FormatError("diagonal entry '1' at row " + std::to_string(i));
        d.add_arc(i, j);
      }
    }
  }
  return d;
}

void write_adjacency_text(const Digraph& d, std::ostream& out) {
  const int n = d.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (d.has_arc(i, j) ? '1' : '0');
    out << '\n';
  }
}

namespace {

void append_n_encoding(std::string& s, int n) {
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  }
}

int decode_char(char c) {
  if (c < 63 || c > 126) throw FormatError("illegal digraph6 character");
  return c - 63;
}

}  // namespace

std::string write_digraph6(const Digraph& d) {
  const int n = d.order();
  std::string s = "&";
  append_n_encoding(s, n);
  int acc = 0, nbits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      acc = (acc << 1) | (d.has_arc(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return s;
}

Digraph read_digraph6(const std::string& line) {
  if (line.empty() || line[0] != '&')
    throw FormatError("digraph6 line must start with '&'");
  std::size_t pos = 1;
  if (pos >= line.size()) throw FormatError("truncated digraph6 header");
  int n;
  int first = decode_char(line[pos]);
  if (first < 63) {
    n = first;
    ++pos;
  } else {
    if (pos + 3 >= line.size()) throw FormatError("truncated digraph6 header");
    n = (decode_char(line[pos + 1]) << 12) | (decode_char(line[pos + 2]) << 6) |
        decode_char(line[pos + 3]);
    pos += 4;
  }
  if (n < 1 || n > Digraph::kMaxVertices)
    throw FormatError("digraph6 vertex count out of range 1..64: " +
                      std::to_string(n));
  const int nbits = n * n;
  const std::size_t want = (nbits + 5) / 6;
  if (line.size() - pos != want)
    throw FormatError("digraph6 payload length mismatch");
  Digraph d(n);
  int bitpos = 0;
  for (std::size_t k = pos; k < line.size(); ++k) {
    int v = decode_char(line[k]);
    for (int b = 5; b >= 0; --b, ++bitpos) {
      int on = (v >> b) & 1;
      if (bitpos >= nbits) {
        if (on) throw FormatError("nonzero digraph6 padding bits");
        continue;
      }
      if (on) {
        int i = bitpos / n, j = bitpos % n;
        if (i == j) throw FormatError("digraph6 diagonal bit set");
        d.add_arc(i, j);
      }
    }
  }
  return d;
}

void write_dot(const Digraph& d, std::ostream& out,
               const std::vector<int>& highlight) {
  const int n = d.order();
  std::vector<std::vector<bool>> hot(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < highlight.size(); ++i) {
    int u = highlight[i];
    int v = highlight[(i + 1) % highlight.size()];
    if (u >= 0 && u < n && v >= 0 && v < n) hot[u][v] = true;
  }
  out << "digraph D {\n";
  for (int v = 0; v < n; ++v) out << "  v" << v << ";\n";
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.has_arc(u, v)) {
        out << "  v" << u << " -> v" << v;
        if (hot[u][v]) out << " [color=red, penwidth=2]";
        out << ";\n";
      }
  out << "}\n";
}

Digraph read_digraph_auto(std::istream& in) {
  int c = in.peek();
  if (c == '&') {
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    return read_digraph6(line);
  }
  return read_adjacency_text(in);
}

}  // namespace dcl
