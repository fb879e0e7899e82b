#pragma once

// graph6 text codec. One graph per line, printable bytes 63..126; the
// upper-triangle bits run column-major ((0,1),(0,2),(1,2),(0,3),...), packed
// big-endian into 6-bit groups with zero padding. Orders 63 and 64 use the
// extended '~' header.

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace scsplit {

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else {
    s += '~';
    s += static_cast<char>((n >> 12 & 63) + 63);
    s += static_cast<char>((n >> 6 & 63) + 63);
    s += static_cast<char>((n & 63) + 63);
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        s += static_cast<char>(group + 63);
        group = filled = 0;
      }
    }
  if (filled) s += static_cast<char>((group << (6 - filled)) + 63);
  return s;
}

inline Graph from_graph6(std::string_view s) {
  auto fail = [](const char* why) -> int { throw std::invalid_argument(std::string("graph6: ") + why); };
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) return fail("truncated");
    const unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) return fail("byte out of range");
    return c - 63;
  };
  long n = next();
  if (n == 63) {  // extended header
    if (pos < s.size() && s[pos] == '~') fail("order beyond 64 unsupported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = n << 6 | next();
  }
  if (n > max_vertices) fail("order beyond 64 unsupported");
  Graph g(static_cast<int>(n));
  int group = 0, avail = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        group = next();
        avail = 6;
      }
      if (group >> --avail & 1) g = g.with_edge(i, j);
    }
  if (avail && (group & low_mask(avail))) fail("nonzero padding");
  if (pos != s.size()) fail("trailing bytes");
  return g;
}

// Reads one graph per line; blank lines are skipped.
inline std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

inline void write_graph6(std::ostream& out, const std::vector<Graph>& gs) {
  for (const Graph& g : gs) out << to_graph6(g) << '\n';
}

}  // namespace scsplit
