#pragma once

// Dense small-graph value type: one 64-bit adjacency row per vertex.
// The 64-vertex cap keeps a Graph trivially copyable and makes neighborhood
// algebra single-word operations, which the recognizers and the brute-force
// oracles lean on heavily.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scsplit {

inline constexpr int max_vertices = 64;

constexpr std::uint64_t vbit(int v) { return std::uint64_t{1} << v; }

// Mask with the n low bits set; n may be 64.
constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(checked_order(n)) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(checked_order(n)) {
    for (auto [u, v] : edges) set_edge(u, v);
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u] >> v & 1;
  }

  // Neighborhood of v as a bit mask.
  std::uint64_t row(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const { return std::popcount(row(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  std::uint64_t vertex_mask() const { return low_mask(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (std::uint64_t m = rows_[u] & ~low_mask(u + 1); m; m &= m - 1)
        out.emplace_back(u, std::countr_zero(m));
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = std::popcount(rows_[v]);
    return d;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.set_edge(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    check_distinct(u, v);
    Graph g = *this;
    g.rows_[u] &= ~vbit(v);
    g.rows_[v] &= ~vbit(u);
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.rows_[v] = ~rows_[v] & vertex_mask() & ~vbit(v);
    return g;
  }

  // Subgraph induced by `keep`; vertex keep[i] becomes label i, so callers
  // control the relabeling order.
  Graph induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    if (keep.size() > static_cast<std::size_t>(n_))
      throw std::invalid_argument("induced: more vertices than the graph has");
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
  }

  // Induced subgraph on the set bits of `mask`, kept in ascending label order.
  Graph induced_mask(std::uint64_t mask) const {
    if (mask & ~vertex_mask()) throw std::invalid_argument("induced_mask: vertex out of range");
    std::vector<int> keep;
    for (std::uint64_t m = mask; m; m &= m - 1) keep.push_back(std::countr_zero(m));
    return induced(keep);
  }

  // Relabeled copy: vertex v of *this becomes image[v].
  Graph relabeled(const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != n_)
      throw std::invalid_argument("relabeled: image size != order");
    Graph g(n_);
    for (auto [u, v] : edges()) g.set_edge(image[u], image[v]);
    return g;
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (rows_[v] != o.rows_[v]) return false;
    return true;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  static Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.rows_[v] = low_mask(n) & ~vbit(v);
    return g;
  }

  static Graph cycle(int n) {
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
      g.set_edge(0, 1);
      return g;
    }
    for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
    return g;
  }

private:
  static int checked_order(int n) {
    if (n < 0 || n > max_vertices) throw std::invalid_argument("graph order must be in [0, 64]");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }
  void check_distinct(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not representable");
  }
  void set_edge(int u, int v) {
    check_distinct(u, v);
    rows_[u] |= vbit(v);
    rows_[v] |= vbit(u);
  }

  int n_ = 0;
  std::array<std::uint64_t, max_vertices> rows_{};
};

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) {
    if (v < 0 || v >= max_vertices) throw std::invalid_argument("vertex out of range");
    m |= vbit(v);
  }
  return m;
}

}  // namespace scsplit
