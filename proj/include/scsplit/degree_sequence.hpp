#pragma once

// Degree sequences in multiplicity form, Havel–Hakimi realization, 2-switch
// walks over the realization space, degree slices, and the forcibly
// self-complementary test.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"
#include "isomorphism.hpp"
#include "recognition.hpp"

namespace scsplit {

// Strictly decreasing degrees with multiplicities, e.g. (5^4, 2^4).
// Text form: "5^4,2^4"; a missing ^count means 1.
class DegreeSequence {
public:
  DegreeSequence(std::initializer_list<std::pair<int, int>> terms)
      : DegreeSequence(std::vector<std::pair<int, int>>(terms)) {}

  explicit DegreeSequence(std::vector<std::pair<int, int>> terms) : terms_(std::move(terms)) {
    int prev = -1;
    for (auto [d, c] : terms_) {
      if (d < 0 || c < 1) throw std::invalid_argument("degree sequence: bad term");
      if (prev >= 0 && d >= prev) throw std::invalid_argument("degree sequence: degrees must strictly decrease");
      prev = d;
    }
  }

  static DegreeSequence of(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.rbegin(), d.rend());
    std::vector<std::pair<int, int>> terms;
    for (int x : d) {
      if (!terms.empty() && terms.back().first == x)
        ++terms.back().second;
      else
        terms.emplace_back(x, 1);
    }
    return DegreeSequence(std::move(terms));
  }

  static DegreeSequence parse(const std::string& text) {
    std::vector<std::pair<int, int>> terms;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto caret = tok.find('^');
      try {
        const int d = std::stoi(tok.substr(0, caret));
        const int c = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        terms.emplace_back(d, c);
      } catch (const std::logic_error&) {
        throw std::invalid_argument("degree sequence: cannot parse '" + tok + "'");
      }
    }
    if (terms.empty()) throw std::invalid_argument("degree sequence: empty");
    return DegreeSequence(std::move(terms));
  }

  std::string to_string() const {
    std::string s;
    for (auto [d, c] : terms_) {
      if (!s.empty()) s += ',';
      s += std::to_string(d) + "^" + std::to_string(c);
    }
    return s;
  }

  const std::vector<std::pair<int, int>>& terms() const { return terms_; }
  int distinct_degrees() const { return static_cast<int>(terms_.size()); }

  int order() const {
    int n = 0;
    for (auto [d, c] : terms_) n += c;
    return n;
  }

  long degree_sum() const {
    long s = 0;
    for (auto [d, c] : terms_) s += static_cast<long>(d) * c;
    return s;
  }

  // Non-increasing expansion, one entry per vertex.
  std::vector<int> expand() const {
    std::vector<int> out;
    for (auto [d, c] : terms_) out.insert(out.end(), c, d);
    return out;
  }

  // Erdős–Gallai.
  bool graphical() const {
    const auto d = expand();
    const int n = static_cast<int>(d.size());
    if (degree_sum() % 2) return false;
    long lhs = 0;
    for (int k = 1; k <= n; ++k) {
      lhs += d[k - 1];
      long rhs = static_cast<long>(k) * (k - 1);
      for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
      if (lhs > rhs) return false;
    }
    return true;
  }

  bool operator==(const DegreeSequence& o) const { return terms_ == o.terms_; }
  bool operator!=(const DegreeSequence& o) const { return !(*this == o); }

private:
  std::vector<std::pair<int, int>> terms_;
};

// Havel–Hakimi realization. Vertex i receives the i-th entry of the
// non-increasing expansion, so labels are aligned with sorted degrees.
inline std::optional<Graph> realize(const DegreeSequence& ds) {
  const auto target = ds.expand();
  const int n = static_cast<int>(target.size());
  if (n > max_vertices || (n > 0 && target[0] >= n)) return std::nullopt;
  Graph g(n);
  std::vector<std::pair<int, int>> pool;  // (remaining demand, vertex)
  for (int v = 0; v < n; ++v) pool.emplace_back(target[v], v);
  while (!pool.empty()) {
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    auto [need, v] = pool.front();
    pool.erase(pool.begin());
    if (need == 0) continue;
    if (need > static_cast<int>(pool.size())) return std::nullopt;
    for (int i = 0; i < need; ++i) {
      if (--pool[i].first < 0) return std::nullopt;
      g = g.with_edge(v, pool[i].second);
    }
  }
  return g;
}

// The degree-preserving edge exchange: v1v2, v3v4 in, v1v3, v2v4 out of the
// non-edges. Preconditions are hard errors so callers can lean on them.
inline Graph two_switch(const Graph& g, int v1, int v2, int v3, int v4) {
  const int vs[4] = {v1, v2, v3, v4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw std::invalid_argument("two_switch: vertices must be distinct");
  if (!g.adjacent(v1, v2) || !g.adjacent(v3, v4))
    throw std::invalid_argument("two_switch: v1v2 and v3v4 must be edges");
  if (g.adjacent(v1, v3) || g.adjacent(v2, v4))
    throw std::invalid_argument("two_switch: v1v3 and v2v4 must be non-edges");
  return g.without_edge(v1, v2).without_edge(v3, v4).with_edge(v1, v3).with_edge(v2, v4);
}

namespace detail {

struct PackedGraph {
  std::uint64_t w0 = 0, w1 = 0;
  bool operator==(const PackedGraph& o) const { return w0 == o.w0 && w1 == o.w1; }
};

struct PackedGraphHash {
  std::size_t operator()(const PackedGraph& p) const {
    auto mix = [](std::uint64_t x) {
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ULL;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return mix(p.w0 ^ mix(p.w1));
  }
};

inline PackedGraph pack_triangle(const Graph& g) {
  PackedGraph p;
  int k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) (k < 64 ? p.w0 : p.w1) |= std::uint64_t{1} << (k & 63);
  return p;
}

inline Graph unpack_triangle(int n, PackedGraph p) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((k < 64 ? p.w0 : p.w1) >> (k & 63) & 1) g = g.with_edge(i, j);
  return g;
}

// Breadth-first walk of the 2-switch closure from `start`. The visitor sees
// each distinct labeled graph once; returning false aborts the walk.
template <class Visit>
void walk_two_switches(const Graph& start, Visit&& visit) {
  const int n = start.order();
  if (n * (n - 1) / 2 > 128) throw std::invalid_argument("2-switch walk: order too large");
  std::unordered_set<PackedGraph, PackedGraphHash> seen;
  std::deque<PackedGraph> frontier;
  seen.insert(pack_triangle(start));
  frontier.push_back(pack_triangle(start));
  if (!visit(start)) return;
  while (!frontier.empty()) {
    const Graph g = unpack_triangle(n, frontier.front());
    frontier.pop_front();
    const auto es = g.edges();
    for (std::size_t x = 0; x < es.size(); ++x)
      for (std::size_t y = x + 1; y < es.size(); ++y) {
        const auto [a1, a2] = es[x];
        const auto [b1, b2] = es[y];
        if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
        const std::pair<int, int> swaps[2][2] = {{{a1, b1}, {a2, b2}}, {{a1, b2}, {a2, b1}}};
        for (const auto& sw : swaps) {
          if (g.adjacent(sw[0].first, sw[0].second) || g.adjacent(sw[1].first, sw[1].second)) continue;
          Graph h = g.without_edge(a1, a2).without_edge(b1, b2);
          h = h.with_edge(sw[0].first, sw[0].second).with_edge(sw[1].first, sw[1].second);
          if (seen.insert(pack_triangle(h)).second) {
            frontier.push_back(pack_triangle(h));
            if (!visit(h)) return;
          }
        }
      }
  }
}

}  // namespace detail

// True when every realization reachable by 2-switches from the Havel–Hakimi
// realization satisfies pred; by Ryser's exchange theorem that closure is all
// realizations with the sorted degree assignment. Exits early on a witness.
template <class Pred>
bool all_realizations(const DegreeSequence& ds, Pred&& pred) {
  const auto g = realize(ds);
  if (!g) throw std::invalid_argument("all_realizations: sequence is not graphical");
  bool ok = true;
  detail::walk_two_switches(*g, [&](const Graph& h) { return ok = pred(h); });
  return ok;
}

template <class Pred>
bool any_realization(const DegreeSequence& ds, Pred&& pred) {
  const auto g = realize(ds);
  if (!g) throw std::invalid_argument("any_realization: sequence is not graphical");
  bool found = false;
  detail::walk_two_switches(*g, [&](const Graph& h) { return !(found = pred(h)); });
  return found;
}

// Every labeled realization reachable from the Havel–Hakimi graph, optionally
// reduced to isomorphism-class representatives. Output is sorted by graph6
// string, so results are byte-stable.
inline std::vector<Graph> realization_closure(const DegreeSequence& ds, bool iso_dedupe = false) {
  const auto g = realize(ds);
  if (!g) throw std::invalid_argument("realization_closure: sequence is not graphical");
  std::vector<Graph> out;
  detail::walk_two_switches(*g, [&](const Graph& h) {
    out.push_back(h);
    return true;
  });
  if (iso_dedupe) {
    std::vector<Graph> reps;
    for (const Graph& h : out) {
      bool dup = false;
      for (const Graph& r : reps)
        if (is_isomorphic(h, r)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(h);
    }
    out = std::move(reps);
  }
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  return out;
}

// Some realization is self-complementary. Non-graphical sequences have no
// realization at all, hence false. Guarded to small orders; the walk is
// exponential in the worst case.
inline bool is_potentially_sc_bruteforce(const DegreeSequence& ds) {
  const int n = ds.order();
  if (n > 10) throw std::invalid_argument("is_potentially_sc_bruteforce: order too large");
  if (2 * ds.degree_sum() != static_cast<long>(n) * (n - 1)) return false;
  if (!ds.graphical()) return false;
  return any_realization(ds, [](const Graph& g) { return is_self_complementary(g); });
}

// Degree slice i: the subgraph induced by the i-th degree class together with
// the (l+1-i)-th. For odd l the middle slice pairs the middle class with
// itself.
struct Slice {
  int index = 0;                // 1-based
  std::vector<int> high, low;   // V_i and V_{l+1-i}
  Graph subgraph;
};

inline std::vector<Slice> slices(const Graph& g) {
  const auto ds = DegreeSequence::of(g);
  const int l = ds.distinct_degrees();
  std::vector<Slice> out;
  for (int i = 1; 2 * i <= l + 1; ++i) {
    Slice s;
    s.index = i;
    const int dhi = ds.terms()[i - 1].first;
    const int dlo = ds.terms()[l - i].first;
    std::uint64_t mask = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == dhi) s.high.push_back(v);
      if (g.degree(v) == dlo) s.low.push_back(v);
      if (g.degree(v) == dhi || g.degree(v) == dlo) mask |= vbit(v);
    }
    s.subgraph = g.induced_mask(mask);
    out.push_back(std::move(s));
  }
  return out;
}

// Necessary parity conditions for self-complementarity of an order-4k graph:
// every degree class of G, of G[H], and of G[L] has even size, where H holds
// the 2k largest degrees and L the 2k smallest. Not sufficient (K4 passes).
inline bool parity_conditions(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 0) throw std::invalid_argument("parity_conditions: order must be 4k");
  auto classes_even = [](const Graph& h) {
    for (auto [d, c] : DegreeSequence::of(h).terms())
      if (c % 2) return false;
    return true;
  };
  const auto deg = g.degrees();
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  const std::vector<int> high(by_degree.begin(), by_degree.begin() + n / 2);
  const std::vector<int> low(by_degree.begin() + n / 2, by_degree.end());
  return classes_even(g) && classes_even(g.induced(high)) && classes_even(g.induced(low));
}

// Rao's characterization: every realization of ds is self-complementary iff
// the paired classes have multiplicity 2 or 4 with complementary degrees at
// prescribed thresholds, and an odd middle class is (n-1)/2 with multiplicity
// 1 or 5.
inline bool is_forcibly_sc(const DegreeSequence& ds) {
  const auto& t = ds.terms();
  const int l = ds.distinct_degrees();
  const int n = ds.order();
  long prefix = 0;
  for (int i = 1; i <= l / 2; ++i) {
    const auto [di, ni] = t[i - 1];
    const auto [dj, nj] = t[l - i];
    prefix += ni;
    if (nj != ni || (ni != 2 && ni != 4)) return false;
    if (dj != n - 1 - di) return false;
    if (dj != prefix - ni / 2) return false;
  }
  if (l % 2) {
    const auto [dm, nm] = t[l / 2];
    if (nm != 1 && nm != 5) return false;
    if (2 * dm != n - 1) return false;
  }
  return true;
}

}  // namespace scsplit
