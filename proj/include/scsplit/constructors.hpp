#pragma once

// Graph families: the layered elementary family (P4 / order-8 blocks with an
// optional apex or C5 tail), the blown-up path Z_k, the one-cycle Gibbs
// construction, circulant powers, and the non-self-complementary witness
// graphs obtained from them by 2-switches.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degree_sequence.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "isomorphism.hpp"
#include "permutation.hpp"

namespace scsplit {

enum class BlockKind { P4, FIG_A, FIG_B };
enum class Tail { NONE, APEX, C5 };

namespace detail {

// The two self-complementary split graphs on 8 vertices: clique 0..3,
// independent 4..7. They share the degree sequence (5^4, 2^4) but are not
// isomorphic; FIG_B is Z_2.
constexpr const char* fig_a_g6 = "G~qa`_";
constexpr const char* fig_b_g6 = "G~r@`_";
// The unique-up-to-iso non-self-complementary realization of (4^4, 3^4).
constexpr const char* fig5_g6 = "GjeHIk";

inline Graph checked_prototype(const char* g6, const DegreeSequence& want_ds, bool want_sc,
                               const char* name) {
  const Graph g = from_graph6(g6);
  if (DegreeSequence::of(g) != want_ds || is_self_complementary(g) != want_sc)
    throw std::logic_error(std::string("corrupt prototype: ") + name);
  return g;
}

}  // namespace detail

inline const Graph& fig_a() {
  static const Graph g =
      detail::checked_prototype(detail::fig_a_g6, {{5, 4}, {2, 4}}, true, "fig_a");
  return g;
}

inline const Graph& fig_b() {
  static const Graph g = [] {
    Graph b = detail::checked_prototype(detail::fig_b_g6, {{5, 4}, {2, 4}}, true, "fig_b");
    if (is_isomorphic(b, fig_a())) throw std::logic_error("corrupt prototype: fig_b == fig_a");
    return b;
  }();
  return g;
}

inline const Graph& fig5() {
  static const Graph g =
      detail::checked_prototype(detail::fig5_g6, {{4, 4}, {3, 4}}, false, "fig5");
  return g;
}

// Block list plus tail; text form "P4,A,B;c5", "P4,P4;apex", ";c5". A bare
// block list means no tail, and an empty block list requires one.
struct BlockSpec {
  std::vector<BlockKind> blocks;
  Tail tail = Tail::NONE;

  bool operator==(const BlockSpec& o) const { return blocks == o.blocks && tail == o.tail; }

  std::string to_string() const {
    std::string s;
    for (BlockKind b : blocks) {
      if (!s.empty()) s += ',';
      s += b == BlockKind::P4 ? "P4" : b == BlockKind::FIG_A ? "A" : "B";
    }
    if (tail == Tail::APEX) s += ";apex";
    if (tail == Tail::C5) s += ";c5";
    return s;
  }

  static BlockSpec parse(const std::string& text) {
    BlockSpec spec;
    const auto semi = text.find(';');
    if (text.find(';', semi + 1) != std::string::npos)
      throw std::invalid_argument("block spec: more than one ';'");
    const std::string head = text.substr(0, semi);
    if (semi != std::string::npos) {
      const std::string tail = text.substr(semi + 1);
      if (tail == "apex")
        spec.tail = Tail::APEX;
      else if (tail == "c5")
        spec.tail = Tail::C5;
      else
        throw std::invalid_argument("block spec: unknown tail '" + tail + "'");
    }
    std::size_t pos = 0;
    while (pos < head.size()) {
      auto comma = head.find(',', pos);
      if (comma == std::string::npos) comma = head.size();
      const std::string tok = head.substr(pos, comma - pos);
      if (tok == "P4")
        spec.blocks.push_back(BlockKind::P4);
      else if (tok == "A")
        spec.blocks.push_back(BlockKind::FIG_A);
      else if (tok == "B")
        spec.blocks.push_back(BlockKind::FIG_B);
      else
        throw std::invalid_argument("block spec: unknown block '" + tok + "'");
      pos = comma + 1;
    }
    if (spec.blocks.empty() && spec.tail == Tail::NONE)
      throw std::invalid_argument("block spec: empty");
    return spec;
  }
};

// Layered join of the blocks. Block i contributes a clique side K_i and an
// independent side I_i; all K_i together form a clique, K_i is additionally
// complete to I_j for every later block j, and the tail (apex vertex or
// 5-cycle) is complete to the union of the K_i. Earlier blocks therefore
// carry the higher degrees, and each block's two sides are recoverable as
// paired degree classes.
inline Graph build_elementary(const BlockSpec& spec) {
  if (spec.blocks.empty() && spec.tail == Tail::NONE)
    throw std::invalid_argument("build_elementary: empty spec");
  int n = spec.tail == Tail::APEX ? 1 : spec.tail == Tail::C5 ? 5 : 0;
  for (BlockKind b : spec.blocks) n += b == BlockKind::P4 ? 4 : 8;
  if (n > max_vertices) throw std::invalid_argument("build_elementary: order would exceed 64");

  Graph g(n);
  std::vector<int> all_k;
  std::vector<std::vector<int>> i_sides;
  int base = 0;
  for (BlockKind kind : spec.blocks) {
    const int half = kind == BlockKind::P4 ? 2 : 4;
    std::vector<int> kside, iside;
    for (int i = 0; i < half; ++i) kside.push_back(base + i);
    for (int i = 0; i < half; ++i) iside.push_back(base + half + i);
    if (kind == BlockKind::P4) {
      g = g.with_edge(kside[0], iside[0]).with_edge(kside[1], iside[1]);
    } else {
      // Attachment patterns of the two order-8 prototypes, clique side first.
      const int a_pat[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
      const int b_pat[4][2] = {{0, 1}, {0, 1}, {2, 3}, {2, 3}};
      const auto& pat = kind == BlockKind::FIG_A ? a_pat : b_pat;
      for (int i = 0; i < 4; ++i)
        for (int j : {pat[i][0], pat[i][1]}) g = g.with_edge(iside[i], kside[j]);
    }
    for (int u : all_k)
      for (int v : iside) g = g.with_edge(u, v);
    all_k.insert(all_k.end(), kside.begin(), kside.end());
    i_sides.push_back(std::move(iside));
    base += 2 * half;
  }
  for (std::size_t i = 0; i < all_k.size(); ++i)
    for (std::size_t j = i + 1; j < all_k.size(); ++j) g = g.with_edge(all_k[i], all_k[j]);

  if (spec.tail == Tail::APEX) {
    for (int u : all_k) g = g.with_edge(u, n - 1);
  } else if (spec.tail == Tail::C5) {
    for (int i = 0; i < 5; ++i) {
      g = g.with_edge(n - 5 + i, n - 5 + (i + 1) % 5);
      for (int u : all_k) g = g.with_edge(u, n - 5 + i);
    }
  }
  return g;
}

// Inverse of build_elementary up to isomorphism. The paired degree classes of
// a layered graph are exactly the block sides, so each slice must match a
// block prototype and an odd middle class must be the tail; a final
// isomorphism check against the rebuilt graph makes the decomposition sound
// on arbitrary input.
inline std::optional<BlockSpec> decompose_elementary(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  static const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});

  const auto all = slices(g);
  BlockSpec spec;
  for (const auto& s : all) {
    if (s.high == s.low) {  // middle class: the tail
      if (s.high.size() == 1)
        spec.tail = Tail::APEX;
      else if (s.high.size() == 5 && is_isomorphic(s.subgraph, Graph::cycle(5)))
        spec.tail = Tail::C5;
      else
        return std::nullopt;
      continue;
    }
    if (s.high.size() != s.low.size()) return std::nullopt;
    if (s.high.size() == 2 && is_isomorphic(s.subgraph, p4))
      spec.blocks.push_back(BlockKind::P4);
    else if (s.high.size() == 4 && is_isomorphic(s.subgraph, fig_a()))
      spec.blocks.push_back(BlockKind::FIG_A);
    else if (s.high.size() == 4 && is_isomorphic(s.subgraph, fig_b()))
      spec.blocks.push_back(BlockKind::FIG_B);
    else
      return std::nullopt;
  }
  if (!is_isomorphic(g, build_elementary(spec))) return std::nullopt;
  return spec;
}

// P4 with its two ends blown up to independent k-sets and its two middle
// vertices to k-cliques: u_1..u_2k form the clique, v_1..v_k attach to
// u_1..u_k and v_{k+1}..v_2k to u_{k+1}..u_2k. Degree sequence
// ((3k-1)^{2k}, k^{2k}); the unique self-complementary split graph with a
// rectangle partition.
inline Graph build_zk(int k) {
  if (k < 1) throw std::invalid_argument("build_zk: k must be positive");
  if (4 * k > max_vertices) throw std::invalid_argument("build_zk: order would exceed 64");
  Graph g(4 * k);
  for (int i = 0; i < 2 * k; ++i)
    for (int j = i + 1; j < 2 * k; ++j) g = g.with_edge(i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      g = g.with_edge(2 * k + i, j);          // v_1..v_k   to u_1..u_k
      g = g.with_edge(3 * k + i, k + j);      // v_{k+1}..v_2k to u_{k+1}..u_2k
    }
  return g;
}

// One-cycle construction: the self-complementary graph on v_1..v_4k whose
// antimorphism is the single cycle (v_1 v_2 ... v_4k) and whose odd-indexed
// vertices have degree d. Exists exactly for 2k <= d <= 3k-1. The first row
// fixes everything: adj(v_i, v_j) = adj(v_1, v_{j-i+1}) xor (i-1 mod 2); the
// build verifies that this propagation is symmetric-consistent, that the
// cycle really is an antimorphism, and that the degrees come out right.
inline Graph build_gibbs_onecycle(int k, int d) {
  if (k < 1) throw std::invalid_argument("build_gibbs_onecycle: k must be positive");
  if (d < 2 * k || d > 3 * k - 1)
    throw std::invalid_argument("build_gibbs_onecycle: need 2k <= d <= 3k-1");
  const int n = 4 * k;
  if (n > max_vertices) throw std::invalid_argument("build_gibbs_onecycle: order would exceed 64");

  // row1[j] = adjacency of v_1 and v_j, 1-based, j in 2..4k.
  std::vector<char> row1(n + 1, 0);
  for (int j = 2; j <= 4 * k - 2; j += 4) row1[j] = 1;
  if ((d - k) % 2 != 0) {
    for (int j = 3; j <= d - k; j += 2) row1[j] = 1;
    row1[2 * k + 1] = 1;
    for (int j = 5 * k - d + 2; j <= 4 * k - 1; j += 2) row1[j] = 1;
  } else {
    for (int j = 3; j <= d - k + 1; j += 2) row1[j] = 1;
    for (int j = 5 * k - d + 1; j <= 4 * k - 1; j += 2) row1[j] = 1;
  }

  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int t = j - i;
      const bool forward = row1[t + 1] ^ ((i - 1) & 1);
      const bool backward = row1[n - t + 1] ^ ((j - 1) & 1);
      if (forward != backward)
        throw std::logic_error("build_gibbs_onecycle: propagation is not symmetric");
      if (forward) g = g.with_edge(i - 1, j - 1);
    }

  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = (i + 1) % n;
  if (!is_antimorphism(g, Permutation(image)))
    throw std::logic_error("build_gibbs_onecycle: cycle is not an antimorphism");
  if (DegreeSequence::of(g) != DegreeSequence{{d, 2 * k}, {4 * k - 1 - d, 2 * k}})
    throw std::logic_error("build_gibbs_onecycle: wrong degree sequence");
  return g;
}

// k-th power of the cycle C_{4k+1}: vertices adjacent iff circular distance
// is at most k. 2k-regular; self-complementary only for k = 1 (C5).
inline Graph build_circulant_power(int k) {
  if (k < 1) throw std::invalid_argument("build_circulant_power: k must be positive");
  const int n = 4 * k + 1;
  if (n > max_vertices) throw std::invalid_argument("build_circulant_power: order would exceed 64");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int t = 1; t <= k; ++t) g = g.with_edge(i, (i + t) % n);
  return g;
}

// Non-self-complementary realization of the regular sequence ((2k)^{4k+1}),
// k >= 2: the circulant power itself.
inline Graph witness_regular(int k) {
  if (k < 2) throw std::invalid_argument("witness_regular: k must be at least 2 (C5 is SC)");
  return build_circulant_power(k);
}

// Non-self-complementary realization of (d^{2k}, (4k-1-d)^{2k}), k >= 2,
// 2k <= d <= 3k-1, except (k, d) = (2, 5) where every realization is SC.
// Three constructions: the stored (4^4, 3^4) graph; Z_k reshuffled by k
// 2-switches when d = 3k-1; one 2-switch on the Gibbs graph otherwise, placed
// according to whether v_1 ~ v_{2k+1} there.
inline Graph witness_two_degree(int k, int d) {
  if (k < 2) throw std::invalid_argument("witness_two_degree: k must be at least 2");
  if (d < 2 * k || d > 3 * k - 1)
    throw std::invalid_argument("witness_two_degree: need 2k <= d <= 3k-1");
  if (k == 2 && d == 5)
    throw std::invalid_argument("witness_two_degree: (5^4,2^4) has no non-SC realization");

  Graph g(0);
  if (k == 2 && d == 4) {
    g = fig5();
  } else if (d == 3 * k - 1) {
    g = build_zk(k);
    // (u_k v_i, u_{k+i} v_{k+i}) -> (u_k v_{k+i}, u_{k+i} v_i) for i = 1..k.
    for (int i = 1; i <= k; ++i)
      g = two_switch(g, k - 1, 2 * k + i - 1, 3 * k + i - 1, k + i - 1);
  } else {
    g = build_gibbs_onecycle(k, d);
    if (g.adjacent(0, 2 * k))  // v_1 ~ v_{2k+1}
      // (v_1 v_{2k+1}, v_{2k-1} v_{2k}) -> (v_1 v_{2k-1}, v_{2k+1} v_{2k})
      g = two_switch(g, 0, 2 * k, 2 * k - 2, 2 * k - 1);
    else
      // (v_1 v_{d-k+1}, v_{d-k+3} v_{d-k+4}) -> (v_1 v_{d-k+3}, v_{d-k+1} v_{d-k+4})
      g = two_switch(g, 0, d - k, d - k + 2, d - k + 3);
  }
  if (DegreeSequence::of(g) != DegreeSequence{{d, 2 * k}, {4 * k - 1 - d, 2 * k}})
    throw std::logic_error("witness_two_degree: wrong degree sequence");
  return g;
}

// Witness for four-degree sequences. potentially_sc_checked records whether
// the sequence was confirmed potentially SC by brute force (only feasible at
// n = 8); for larger orders the construction proceeds unchecked.
struct FourDegreeWitness {
  Graph graph;
  bool potentially_sc_checked = false;
};

// Non-SC realization of (d^{2k1}, (d-1)^{2k2}, (n-d)^{2k2}, (n-1-d)^{2k1})
// with n = 4(k1+k2) and 2k+1 <= d <= 3k-1, k = k1+k2: take the Gibbs graph,
// rotate the edge v_{4i+1} v_{4i+3} to v_{4i+2} v_{4i+4} for i < k2, then
// 2-switch (v_1 v_5, v_3 v_4) -> (v_1 v_3, v_4 v_5).
inline FourDegreeWitness witness_four_degree(int k1, int k2, int d, int n) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("witness_four_degree: k1, k2 must be positive");
  if (n != 4 * (k1 + k2)) throw std::invalid_argument("witness_four_degree: n must equal 4(k1+k2)");
  const int k = k1 + k2;
  if (d < 2 * k + 1 || d > 3 * k - 1)
    throw std::invalid_argument("witness_four_degree: need 2k+1 <= d <= 3k-1");
  const DegreeSequence target{{d, 2 * k1}, {d - 1, 2 * k2}, {n - d, 2 * k2}, {n - 1 - d, 2 * k1}};

  FourDegreeWitness w;
  if (n <= 10) {
    if (!is_potentially_sc_bruteforce(target))
      throw std::invalid_argument("witness_four_degree: sequence is not potentially SC");
    w.potentially_sc_checked = true;
  }

  Graph g = build_gibbs_onecycle(k, d);
  for (int i = 0; i < k2; ++i) {
    if (!g.adjacent(4 * i, 4 * i + 2) || g.adjacent(4 * i + 1, 4 * i + 3))
      throw std::logic_error("witness_four_degree: unexpected Gibbs adjacency");
    g = g.without_edge(4 * i, 4 * i + 2).with_edge(4 * i + 1, 4 * i + 3);
  }
  g = two_switch(g, 0, 4, 2, 3);
  if (DegreeSequence::of(g) != target)
    throw std::logic_error("witness_four_degree: wrong degree sequence");
  w.graph = g;
  return w;
}

}  // namespace scsplit
