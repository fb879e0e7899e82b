#pragma once

// Backtracking isomorphism and antimorphism search. No external
// canonical-labeling dependency: orders of interest stay small (<= ~24), and
// degree-class pruning plus incremental adjacency checks are enough there.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "permutation.hpp"

namespace scsplit {

// σ is an antimorphism of g when it maps g onto its complement:
// u~v  <=>  σ(u)!~σ(v) for every pair of distinct vertices.
inline bool is_antimorphism(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) == g.adjacent(sigma(u), sigma(v))) return false;
  return true;
}

namespace detail {

// Map of g onto h (edge-preserving when complementing=false, edge-flipping
// when true), with each vertex v restricted to candidate mask allowed[v].
// Returns the first mapping in lexicographic image order, for determinism.
inline std::optional<Permutation> find_mapping(const Graph& g, const Graph& h, bool complementing,
                                               const std::vector<std::uint64_t>& allowed) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;
  if (complementing) {
    // Necessary counts; also the cheap rejects the antimorphism search relies on.
    if (4 * g.edge_count() != n * (n - 1)) return std::nullopt;
    if (n % 4 > 1) return std::nullopt;
  }

  // Candidate masks from degree compatibility.
  std::vector<std::uint64_t> cand(n);
  const auto dg = g.degrees(), dh = h.degrees();
  for (int v = 0; v < n; ++v) {
    std::uint64_t m = 0;
    const int want = complementing ? n - 1 - dg[v] : dg[v];
    for (int w = 0; w < n; ++w)
      if (dh[w] == want) m |= vbit(w);
    cand[v] = m & allowed[v];
    if (!cand[v]) return std::nullopt;
  }

  // Assign images in a static order: rarest degree class first, then most
  // constrained; ties by index so the result is reproducible.
  std::map<int, int> degclass;
  for (int v = 0; v < n; ++v) ++degclass[dg[v]];
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int ca = degclass[dg[a]], cb = degclass[dg[b]];
    if (ca != cb) return ca < cb;
    if (dg[a] != dg[b]) return dg[a] > dg[b];
    return a < b;
  });

  std::vector<int> image(n, -1), preimage(n, -1);
  int fixed_used = 0;

  auto consistent = [&](int v, int w) {
    for (int u = 0; u < n; ++u) {
      if (image[u] < 0 || u == v) continue;
      const bool e = g.adjacent(u, v);
      const bool f = h.adjacent(image[u], w);
      if (complementing ? e == f : e != f) return false;
    }
    return true;
  };

  // Cycle-length lemma: an antimorphism's cycles have length 1 or a multiple
  // of 4, with at most one fixed point. Checked whenever an assignment closes
  // a cycle of the partial permutation.
  auto cycle_ok = [&](int v, int w) {
    if (!complementing) return true;
    if (w == v) {
      if (n % 4 != 1 || fixed_used) return false;
      return true;
    }
    int len = 1, u = w;
    while (u != v && image[u] >= 0) {
      u = image[u];
      ++len;
    }
    if (u != v) return true;  // chain still open
    return len % 4 == 0;
  };

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    std::uint64_t m = cand[v];
    while (m) {
      const int w = std::countr_zero(m);
      m &= m - 1;
      if (preimage[w] >= 0) continue;
      if (!consistent(v, w) || !cycle_ok(v, w)) continue;
      image[v] = w;
      preimage[w] = v;
      fixed_used += v == w;
      if (self(self, depth + 1)) return true;
      fixed_used -= v == w;
      image[v] = -1;
      preimage[w] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return Permutation(image);
}

inline std::vector<std::uint64_t> no_restriction(int n) {
  return std::vector<std::uint64_t>(n, low_mask(n));
}

}  // namespace detail

// Isomorphism g -> h, i.e. a permutation p with h = g relabeled by p.
inline std::optional<Permutation> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.edge_count() != h.edge_count()) return std::nullopt;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return detail::find_mapping(g, h, false, detail::no_restriction(g.order()));
}

// Self-complementarity certificate: an antimorphism of g, if one exists.
inline std::optional<Permutation> find_antimorphism(const Graph& g) {
  return detail::find_mapping(g, g, true, detail::no_restriction(g.order()));
}

// Antimorphism with vertex v constrained to images in allowed[v]; used by the
// partition module to pin part roles.
inline std::optional<Permutation> find_antimorphism_within(const Graph& g,
                                                           const std::vector<std::uint64_t>& allowed) {
  return detail::find_mapping(g, g, true, allowed);
}

inline bool is_self_complementary(const Graph& g) { return find_antimorphism(g).has_value(); }

}  // namespace scsplit
