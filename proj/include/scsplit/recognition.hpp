#pragma once

// Split and pseudo-split structure: recognition, the degree-threshold
// partition of self-complementary split graphs, and the order-changing
// transforms between the even and odd families.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"

namespace scsplit {

struct SplitPartition {
  std::vector<int> clique;       // K, pairwise adjacent
  std::vector<int> independent;  // I, pairwise nonadjacent
};

struct PseudoSplitPartition {
  std::vector<int> clique;
  std::vector<int> independent;
  std::vector<int> c5;  // empty, or the 5 vertices of the C5 joined to K
};

namespace detail {

inline bool clique_mask(const Graph& g, std::uint64_t mask) {
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if ((g.row(v) & mask) != (mask & ~vbit(v))) return false;
  }
  return true;
}

inline bool independent_mask(const Graph& g, std::uint64_t mask) {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if (g.row(std::countr_zero(m)) & mask) return false;
  return true;
}

}  // namespace detail

// Split recognition via the Hammer–Simeone degree test. On success the
// m = max{i : d_i >= i-1} largest-degree vertices form a clique; a vertex of
// that clique with no neighbor in I can go either way, and the tie rule here
// sends one to I (after one move nothing else is movable), so ambiguous
// vertices end up on the independent side.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  if (n == 0) return SplitPartition{};
  const auto deg = g.degrees();
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });

  int m = 0;
  long head = 0, tail = 0;
  for (int i = 0; i < n; ++i)
    if (deg[by_degree[i]] >= i) m = i + 1;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += deg[by_degree[i]];
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

  std::uint64_t kmask = 0;
  for (int i = 0; i < m; ++i) kmask |= vbit(by_degree[i]);
  std::uint64_t imask = g.vertex_mask() & ~kmask;

  // Tie rule: lowest-index clique vertex with no neighbor in I moves to I.
  for (std::uint64_t mm = kmask; mm; mm &= mm - 1) {
    const int v = std::countr_zero(mm);
    if ((g.row(v) & imask) == 0) {
      kmask &= ~vbit(v);
      imask |= vbit(v);
      break;
    }
  }

  if (!detail::clique_mask(g, kmask) || !detail::independent_mask(g, imask))
    return std::nullopt;  // defensive; the degree test should have settled it
  return SplitPartition{mask_to_vertices(kmask), mask_to_vertices(imask)};
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

// The unique split partition of a self-complementary split graph of order 4k:
// K is exactly the 2k vertices of degree >= 2k. Structure is validated, full
// self-complementarity of the input is the caller's contract.
inline SplitPartition unique_sc_split_partition(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 0) throw std::invalid_argument("unique_sc_split_partition: order must be 4k");
  const int k = n / 4;
  std::uint64_t kmask = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 2 * k) kmask |= vbit(v);
  const std::uint64_t imask = g.vertex_mask() & ~kmask;
  if (std::popcount(kmask) != 2 * k || !detail::clique_mask(g, kmask) ||
      !detail::independent_mask(g, imask))
    throw std::invalid_argument("unique_sc_split_partition: degree threshold does not split the graph");
  return SplitPartition{mask_to_vertices(kmask), mask_to_vertices(imask)};
}

namespace detail {

// First induced C5 in deterministic order: cycle a-b-c-d-e with a minimal
// and b < e fixing the orientation.
inline std::optional<std::vector<int>> find_induced_c5(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const std::uint64_t later = ~low_mask(a + 1) & g.vertex_mask();
    for (int b = 0; b < n; ++b) {
      if (b <= a || !g.adjacent(a, b)) continue;
      for (std::uint64_t mc = g.row(b) & ~g.row(a) & later & ~vbit(b); mc; mc &= mc - 1) {
        const int c = std::countr_zero(mc);
        for (std::uint64_t md = g.row(c) & ~g.row(a) & ~g.row(b) & later & ~vbit(b); md; md &= md - 1) {
          const int d = std::countr_zero(md);
          std::uint64_t me = g.row(d) & g.row(a) & ~g.row(b) & ~g.row(c) & later;
          me &= ~low_mask(b + 1);  // e > b picks one orientation
          if (me) {
            const int e = std::countr_zero(me);
            return std::vector<int>{a, b, c, d, e};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Pseudo-split recognition. A pseudo-split graph is split, or split plus a C5
// joined completely to K and not at all to I; in the latter case the C5 is
// unique, so the first induced C5 found either certifies the partition or
// refutes pseudo-splitness.
inline std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g) {
  if (auto sp = split_partition(g))
    return PseudoSplitPartition{std::move(sp->clique), std::move(sp->independent), {}};
  const auto c5 = detail::find_induced_c5(g);
  if (!c5) return std::nullopt;
  const std::uint64_t cmask = vertices_to_mask(*c5);
  std::uint64_t kmask = 0, imask = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (cmask >> v & 1) continue;
    const std::uint64_t to_c = g.row(v) & cmask;
    if (to_c == cmask)
      kmask |= vbit(v);
    else if (to_c == 0)
      imask |= vbit(v);
    else
      return std::nullopt;
  }
  if (!detail::clique_mask(g, kmask) || !detail::independent_mask(g, imask)) return std::nullopt;
  std::vector<int> c5_sorted = mask_to_vertices(cmask);
  return PseudoSplitPartition{mask_to_vertices(kmask), mask_to_vertices(imask), std::move(c5_sorted)};
}

inline bool is_pseudo_split(const Graph& g) { return pseudo_split_partition(g).has_value(); }

// An SC split graph of order 4k+1 has exactly one vertex of degree 2k, and
// deleting it leaves an SC split graph of order 4k. Returns that vertex and
// the reduced graph (labels above v shift down by one).
inline std::pair<int, Graph> odd_reduce(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 1) throw std::invalid_argument("odd_reduce: order must be 4k+1");
  const int k = n / 4;
  int v = -1;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 2 * k) continue;
    if (v >= 0) throw std::invalid_argument("odd_reduce: multiple vertices of degree 2k");
    v = u;
  }
  if (v < 0) throw std::invalid_argument("odd_reduce: no vertex of degree 2k");
  return {v, g.induced_mask(g.vertex_mask() & ~vbit(v))};
}

// Reverse of odd_reduce: append one vertex adjacent to all of K.
inline Graph apex_extend(const Graph& g) {
  const auto part = unique_sc_split_partition(g);
  Graph h(g.order() + 1);
  for (auto [u, v] : g.edges()) h = h.with_edge(u, v);
  for (int u : part.clique) h = h.with_edge(u, g.order());
  return h;
}

// Append a 5-cycle joined completely to K and not at all to I, giving the
// pseudo-split extension of order 4k+5.
inline Graph c5_extend(const Graph& g) {
  const auto part = unique_sc_split_partition(g);
  const int n = g.order();
  if (n + 5 > max_vertices) throw std::invalid_argument("c5_extend: order would exceed 64");
  Graph h(n + 5);
  for (auto [u, v] : g.edges()) h = h.with_edge(u, v);
  for (int i = 0; i < 5; ++i) h = h.with_edge(n + i, n + (i + 1) % 5);
  for (int u : part.clique)
    for (int i = 0; i < 5; ++i) h = h.with_edge(u, n + i);
  return h;
}

// Degree-extremal split core of an order-4k graph: complete the 2k vertices
// of largest degree, empty the 2k of smallest (ties by index). Applied to a
// self-complementary graph this yields a self-complementary split graph.
inline Graph split_core(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 0) throw std::invalid_argument("split_core: order must be 4k");
  const auto deg = g.degrees();
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  Graph h = g;
  for (int i = 0; i < n / 2; ++i)
    for (int j = i + 1; j < n / 2; ++j) {
      h = h.with_edge(by_degree[i], by_degree[j]);
      h = h.without_edge(by_degree[n - 1 - i], by_degree[n - 1 - j]);
    }
  return h;
}

}  // namespace scsplit
