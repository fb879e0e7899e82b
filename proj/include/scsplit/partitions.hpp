#pragma once

// Diamond and rectangle 4-partitions: construction from antimorphisms or
// from the Z_k structure, validity checking, and the self-complementarity of
// a partition (does some antimorphism map the part family onto itself?).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "constructors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "permutation.hpp"
#include "recognition.hpp"

namespace scsplit {

enum class PartitionKind { DIAMOND, RECTANGLE };

// Four disjoint nonempty parts covering the vertex set. DIAMOND: V1 complete
// to V3, V2 nonadjacent to V4. RECTANGLE: V1 complete to V2 and nonadjacent
// to V3, V4 complete to V3 and nonadjacent to V2. parts[j] is V_{j+1}.
struct FourPartition {
  PartitionKind kind = PartitionKind::DIAMOND;
  std::array<std::vector<int>, 4> parts;
};

namespace detail {

inline bool complete_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t m = a; m; m &= m - 1)
    if ((g.row(std::countr_zero(m)) & b) != b) return false;
  return true;
}

inline bool no_edges_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t m = a; m; m &= m - 1)
    if (g.row(std::countr_zero(m)) & b) return false;
  return true;
}

inline std::array<std::uint64_t, 4> part_masks(const FourPartition& p) {
  std::array<std::uint64_t, 4> m{};
  for (int j = 0; j < 4; ++j) m[j] = vertices_to_mask(p.parts[j]);
  return m;
}

}  // namespace detail

// Structural validity of the partition in g: nonempty disjoint cover with
// the kind's completeness/nonadjacency pattern.
inline bool is_valid_partition(const Graph& g, const FourPartition& p) {
  std::uint64_t all = 0;
  std::size_t total = 0;
  for (const auto& part : p.parts) {
    if (part.empty()) return false;
    for (int v : part)
      if (v < 0 || v >= g.order()) return false;
    const std::uint64_t m = vertices_to_mask(part);
    if (std::popcount(m) != static_cast<int>(part.size())) return false;  // repeats
    if (all & m) return false;
    all |= m;
    total += part.size();
  }
  if (all != g.vertex_mask() || total != static_cast<std::size_t>(g.order())) return false;

  const auto m = detail::part_masks(p);
  if (p.kind == PartitionKind::DIAMOND)
    return detail::complete_between(g, m[0], m[2]) && detail::no_edges_between(g, m[1], m[3]);
  return detail::complete_between(g, m[0], m[1]) && detail::no_edges_between(g, m[0], m[2]) &&
         detail::complete_between(g, m[3], m[2]) && detail::no_edges_between(g, m[3], m[1]);
}

// Diamond partition of a self-complementary split graph of order 4k from an
// antimorphism: rotate each cycle to start in K (membership alternates along
// the cycle), then deal the cycle's vertices to V1, V2, V3, V4 in turn.
// The resulting partition satisfies sigma(V_j) = V_{j+1 mod 4}.
inline FourPartition diamond_from_antimorphism(const Graph& g, const Permutation& sigma) {
  if (g.order() % 4 != 0)
    throw std::invalid_argument("diamond_from_antimorphism: order must be 4k");
  if (sigma.size() != g.order() || !is_antimorphism(g, sigma))
    throw std::invalid_argument("diamond_from_antimorphism: not an antimorphism of g");
  const auto part = unique_sc_split_partition(g);
  const std::uint64_t kmask = vertices_to_mask(part.clique);

  FourPartition out;
  out.kind = PartitionKind::DIAMOND;
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() % 4 != 0)
      throw std::logic_error("diamond_from_antimorphism: cycle length not a multiple of 4");
    std::size_t start = 0;
    while (start < cycle.size() && !(kmask >> cycle[start] & 1)) ++start;
    if (start >= cycle.size())
      throw std::logic_error("diamond_from_antimorphism: cycle misses the clique");
    for (std::size_t j = 0; j < cycle.size(); ++j)
      out.parts[j % 4].push_back(cycle[(start + j) % cycle.size()]);
  }
  for (auto& p : out.parts) std::sort(p.begin(), p.end());
  if (!is_valid_partition(g, out))
    throw std::logic_error("diamond_from_antimorphism: produced an invalid partition");
  return out;
}

// Some diamond partition of a split graph: halve K and I from its split
// partition. Needs at least two vertices on each side.
inline FourPartition any_diamond(const Graph& g) {
  const auto sp = split_partition(g);
  if (!sp) throw std::invalid_argument("any_diamond: graph is not split");
  const auto& k = sp->clique;
  const auto& i = sp->independent;
  if (k.size() < 2 || i.size() < 2)
    throw std::invalid_argument("any_diamond: need |K| >= 2 and |I| >= 2");
  FourPartition out;
  out.kind = PartitionKind::DIAMOND;
  out.parts[0].assign(k.begin(), k.begin() + k.size() / 2);
  out.parts[2].assign(k.begin() + k.size() / 2, k.end());
  out.parts[1].assign(i.begin(), i.begin() + i.size() / 2);
  out.parts[3].assign(i.begin() + i.size() / 2, i.end());
  return out;
}

// A partition is self-complementary when some antimorphism maps the part
// family onto itself (the parts then form a valid partition of the
// complement under the induced role permutation). rotation additionally
// reports whether the specific cyclic role shift V1->V2->V3->V4->V1 is
// achievable, as in the antimorphism-built diamond.
struct PartitionScReport {
  bool self_complementary = false;
  bool rotation = false;
};

inline PartitionScReport check_self_complementary_partition(const Graph& g,
                                                            const FourPartition& p) {
  if (!is_valid_partition(g, p)) return {};
  const auto masks = detail::part_masks(p);
  const int n = g.order();

  auto admits_role_map = [&](const std::array<int, 4>& role) {
    for (int j = 0; j < 4; ++j)
      if (p.parts[j].size() != p.parts[role[j]].size()) return false;
    std::vector<std::uint64_t> allowed(n, 0);
    for (int j = 0; j < 4; ++j)
      for (int v : p.parts[j]) allowed[v] = masks[role[j]];
    return find_antimorphism_within(g, allowed).has_value();
  };

  PartitionScReport report;
  if (admits_role_map({1, 2, 3, 0})) {
    report.self_complementary = report.rotation = true;
    return report;
  }
  std::array<int, 4> role = {0, 1, 2, 3};
  do {
    if (role == std::array<int, 4>{1, 2, 3, 0}) continue;
    if (admits_role_map(role)) {
      report.self_complementary = true;
      return report;
    }
  } while (std::next_permutation(role.begin(), role.end()));
  return report;
}

inline bool is_self_complementary_partition(const Graph& g, const FourPartition& p) {
  return check_self_complementary_partition(g, p).self_complementary;
}

// Rectangle partitions exist exactly on graphs isomorphic to Z_k; map the
// Z_k blocks through an isomorphism. V2 and V3 are the two clique halves,
// V1 and V4 the independent sets attached to them.
inline std::optional<FourPartition> rectangle_partition(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 4 != 0) return std::nullopt;
  const int k = n / 4;
  const auto iso = is_isomorphic(build_zk(k), g);  // maps Z_k labels to g labels
  if (!iso) return std::nullopt;

  FourPartition out;
  out.kind = PartitionKind::RECTANGLE;
  auto map_range = [&](int lo, int hi) {
    std::vector<int> part;
    for (int v = lo; v < hi; ++v) part.push_back((*iso)(v));
    std::sort(part.begin(), part.end());
    return part;
  };
  out.parts[0] = map_range(2 * k, 3 * k);  // v_1..v_k
  out.parts[1] = map_range(0, k);          // u_1..u_k
  out.parts[2] = map_range(k, 2 * k);      // u_{k+1}..u_2k
  out.parts[3] = map_range(3 * k, 4 * k);  // v_{k+1}..v_2k
  if (!is_valid_partition(g, out))
    throw std::logic_error("rectangle_partition: produced an invalid partition");
  return out;
}

}  // namespace scsplit
