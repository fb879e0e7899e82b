#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "oracle_support.hpp"
#include "scsplit/scsplit.hpp"

using namespace scsplit;
namespace ts = testsupport;

namespace {

DegreeSequence seq_to_ds(const std::vector<int>& seq) {
  std::vector<std::pair<int, int>> terms;
  for (int x : seq) {
    if (!terms.empty() && terms.back().first == x)
      ++terms.back().second;
    else
      terms.emplace_back(x, 1);
  }
  return DegreeSequence(std::move(terms));
}

// All graphical degree sequences of order n, by filtering the non-increasing
// candidate vectors.
std::vector<DegreeSequence> graphical_sequences(int n) {
  std::vector<DegreeSequence> out;
  for (const auto& seq : ts::nonincreasing_sequences(n)) {
    DegreeSequence ds = seq_to_ds(seq);
    if (ds.graphical()) out.push_back(std::move(ds));
  }
  return out;
}

void report(int criterion, const std::string& detail) {
  std::cout << "ACCEPTANCE " << criterion << ": PASS — " << detail << std::endl;
}

}  // namespace

TEST_CASE("criterion 1: count formulas reproduce the reference table") {
  const auto start = std::chrono::steady_clock::now();
  const int orders[] = {4, 5, 8, 9, 12, 13, 16, 17, 20, 21};
  const long split_want[] = {1, 1, 3, 3, 16, 16, 218, 218, 9608, 9608};
  const long pseudo_want[] = {1, 2, 3, 4, 16, 19, 218, 234, 9608, 9826};
  bool ok = true;
  for (int i = 0; i < 10; ++i) {
    ok = ok && lambda_split(orders[i]) == split_want[i];
    ok = ok && lambda_pseudo_split(orders[i]) == pseudo_want[i];
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  ok = ok && elapsed.count() < 1000;
  if (ok)
    report(1, "both count formulas exact at all ten orders in " + std::to_string(elapsed.count()) +
                  " ms");
  REQUIRE(ok);
}

TEST_CASE("criterion 2: census counts match the formulas") {
  bool ok = generate_sc(4, CensusFilter::SC_SPLIT).graphs.size() == 1;
  ok = ok && generate_sc(8, CensusFilter::SC_SPLIT).graphs.size() == 3;
  ok = ok && generate_sc(12, CensusFilter::SC_SPLIT).graphs.size() == 16;
  ok = ok && generate_sc(5, CensusFilter::SC_PSEUDO_SPLIT).graphs.size() == 2;
  ok = ok && generate_sc(9, CensusFilter::SC_PSEUDO_SPLIT).graphs.size() == 4;
  ok = ok && generate_sc(8, CensusFilter::ALL_SC).graphs.size() == 10;
  if (ok) report(2, "exhaustive censuses agree with the counting formulas");
  REQUIRE(ok);
}

TEST_CASE("criterion 3: forced self-complementarity matches the brute-force definition") {
  for (const int n : {4, 5, 8, 9}) {
    for (const DegreeSequence& ds : graphical_sequences(n)) {
      const bool brute =
          all_realizations(ds, [](const Graph& g) { return is_self_complementary(g); });
      if (is_forcibly_sc(ds) != brute) {
        CAPTURE(ds.to_string());
        REQUIRE(is_forcibly_sc(ds) == brute);
      }
    }
  }
  REQUIRE(is_forcibly_sc(DegreeSequence::parse("5^4,2^4")));
  REQUIRE(is_forcibly_sc(DegreeSequence::parse("6^2,4^2,3^2,1^2")));
  REQUIRE_FALSE(is_forcibly_sc(DegreeSequence::parse("4^4,3^4")));
  report(3, "characterization agrees with exhaustive realization walks at orders 4, 5, 8, 9");
}

TEST_CASE("criterion 4: realizations of forced sequences are layered graphs") {
  std::size_t sequences = 0, graphs = 0;
  for (int n = 1; n <= 9; ++n) {
    bool any = false;
    for (const DegreeSequence& ds : graphical_sequences(n)) {
      if (!is_forcibly_sc(ds)) continue;
      any = true;
      ++sequences;
      const bool all_layered = all_realizations(ds, [&](const Graph& g) {
        ++graphs;
        return find_antimorphism(g).has_value() && decompose_elementary(g).has_value();
      });
      if (!all_layered) CAPTURE(ds.to_string());
      REQUIRE(all_layered);
    }
    // no forced sequences can exist at impossible orders
    if (n % 4 == 2 || n % 4 == 3) REQUIRE_FALSE(any);
  }
  REQUIRE(sequences > 0);
  report(4, "every realization of every forced sequence through order 9 decomposes (" +
                std::to_string(sequences) + " sequences, " + std::to_string(graphs) +
                " labeled graphs)");
}

TEST_CASE("criterion 5: witness graphs have the right degrees and no antimorphism") {
  const Graph w1 = witness_regular(2);
  REQUIRE(to_graph6(w1) == ts::kC9Squared);
  REQUIRE(DegreeSequence::of(w1) == DegreeSequence({{4, 9}}));
  REQUIRE_FALSE(find_antimorphism(w1).has_value());
  REQUIRE_FALSE(ts::brute_find_antimorphism(w1).has_value());

  const Graph w2 = witness_two_degree(2, 4);
  REQUIRE(w2 == fig5());
  REQUIRE(DegreeSequence::of(w2) == DegreeSequence({{4, 4}, {3, 4}}));
  REQUIRE_FALSE(find_antimorphism(w2).has_value());
  REQUIRE_FALSE(ts::brute_find_antimorphism(w2).has_value());

  const Graph w3 = witness_two_degree(3, 8);
  REQUIRE(is_isomorphic(w3, ts::twelve_vertex_witness_reference()).has_value());
  REQUIRE(DegreeSequence::of(w3) == DegreeSequence({{8, 6}, {3, 6}}));
  REQUIRE_FALSE(find_antimorphism(w3).has_value());

  const auto w4 = witness_four_degree(1, 1, 5, 8);
  REQUIRE(DegreeSequence::of(w4.graph) == DegreeSequence({{5, 2}, {4, 2}, {3, 2}, {2, 2}}));
  REQUIRE(w4.potentially_sc_checked);
  REQUIRE_FALSE(find_antimorphism(w4.graph).has_value());
  REQUIRE_FALSE(ts::brute_find_antimorphism(w4.graph).has_value());

  report(5, "all four witness families check out (degrees right, no antimorphism)");
}

TEST_CASE("criterion 6: one-cycle construction across its whole parameter range") {
  for (int k = 1; k <= 5; ++k) {
    for (int d = 2 * k; d <= 3 * k - 1; ++d) {
      const Graph g = build_gibbs_onecycle(k, d);
      std::vector<int> image(4 * k);
      for (int i = 0; i < 4 * k; ++i) image[i] = (i + 1) % (4 * k);
      REQUIRE(is_antimorphism(g, Permutation(image)));
      REQUIRE(DegreeSequence::of(g) == DegreeSequence({{d, 2 * k}, {4 * k - 1 - d, 2 * k}}));
    }
  }
  // outside the admissible range the two-class sequence has no realization at
  // all, let alone a self-complementary one
  for (int k = 1; k <= 3; ++k) {
    for (int d = 3 * k; d <= 4 * k - 1; ++d) {
      const DegreeSequence ds{{d, 2 * k}, {4 * k - 1 - d, 2 * k}};
      REQUIRE_FALSE(ds.graphical());
    }
  }
  report(6, "antimorphism and degrees verified for k <= 5; no realizations outside the range");
}

TEST_CASE("criterion 7: partition suite over the split censuses") {
  for (const int n : {8, 12}) {
    std::size_t rectangles = 0;
    for (const Graph& g : generate_sc(n, CensusFilter::SC_SPLIT).graphs) {
      const auto sigma = find_antimorphism(g);
      REQUIRE(sigma);
      const FourPartition p = diamond_from_antimorphism(g, *sigma);
      REQUIRE(is_valid_partition(g, p));
      REQUIRE(is_self_complementary_partition(g, p));

      const auto rect = rectangle_partition(g);
      if (rect) {
        ++rectangles;
        REQUIRE(is_valid_partition(g, *rect));
        REQUIRE(is_isomorphic(g, build_zk(n / 4)).has_value());
      }
    }
    REQUIRE(rectangles == 1);
  }
  report(7, "diamonds from antimorphisms everywhere; exactly one rectangle class per order");
}

TEST_CASE("criterion 8: invariant battery over censuses and constructions") {
  std::mt19937 rng(20260822);
  std::size_t cases = 0;

  // pool of self-complementary graphs from every source in the library
  std::vector<Graph> pool;
  for (const Graph& g : generate_sc(8, CensusFilter::ALL_SC).graphs) pool.push_back(g);
  for (const Graph& g : generate_sc(9, CensusFilter::ALL_SC).graphs) pool.push_back(g);
  for (const Graph& g : generate_sc(12, CensusFilter::SC_SPLIT).graphs) pool.push_back(g);
  for (const Graph& g : generate_sc(13, CensusFilter::SC_PSEUDO_SPLIT).graphs) pool.push_back(g);
  for (int k = 1; k <= 4; ++k) pool.push_back(build_zk(k));
  for (int k = 1; k <= 4; ++k)
    for (int d = 2 * k; d <= 3 * k - 1; ++d) pool.push_back(build_gibbs_onecycle(k, d));
  for (const char* spec : {"P4", "A", "B", "P4,P4", "A,B", "P4;apex", "B;apex", "P4,A;c5", ";c5"})
    pool.push_back(build_elementary(BlockSpec::parse(spec)));

  for (const Graph& g : pool) {
    const int n = g.order();

    // edge count of a self-complementary graph
    REQUIRE(g.edge_count() == n * (n - 1) / 4);
    ++cases;

    // antimorphism cycle shape
    const auto sigma = find_antimorphism(g);
    REQUIRE(sigma);
    REQUIRE(is_antimorphism(g, *sigma));
    int fixed = 0;
    for (const auto& cycle : sigma->cycles()) {
      if (cycle.size() == 1)
        ++fixed;
      else
        REQUIRE(cycle.size() % 4 == 0);
      ++cases;
    }
    REQUIRE(fixed <= 1);

    // complement involution, and the complement is self-complementary too
    REQUIRE(g.complement().complement() == g);
    REQUIRE(is_antimorphism(g.complement(), *sigma));
    ++cases;

    // random subsets of the antimorphism's cycles induce self-complementary
    // subgraphs, certified by the restriction of sigma
    const auto& cycles = sigma->cycles();
    std::uniform_int_distribution<std::uint32_t> subset(1, (1u << cycles.size()) - 1);
    for (int trial = 0; trial < 12; ++trial) {
      const std::uint32_t pick = subset(rng);
      std::vector<int> keep;
      for (std::size_t c = 0; c < cycles.size(); ++c)
        if (pick >> c & 1) keep.insert(keep.end(), cycles[c].begin(), cycles[c].end());
      std::vector<int> index(n, -1);
      for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
      std::vector<int> restricted(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) restricted[i] = index[(*sigma)(keep[i])];
      REQUIRE(is_antimorphism(g.induced(keep), Permutation(restricted)));
      ++cases;
    }

    // random valid 2-switches preserve the degree sequence and split-ness
    const DegreeSequence ds = DegreeSequence::of(g);
    const bool split_before = is_split(g);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int v1 = vertex(rng), v2 = vertex(rng), v3 = vertex(rng), v4 = vertex(rng);
      const std::set<int> distinct{v1, v2, v3, v4};
      if (distinct.size() != 4) continue;
      if (!g.adjacent(v1, v2) || !g.adjacent(v3, v4)) continue;
      if (g.adjacent(v1, v3) || g.adjacent(v2, v4)) continue;
      const Graph h = two_switch(g, v1, v2, v3, v4);
      REQUIRE(DegreeSequence::of(h) == ds);
      REQUIRE(is_split(h) == split_before);
      ++cases;
    }
  }

  // odd/even transfer in both directions
  for (const Graph& g : generate_sc(13, CensusFilter::SC_SPLIT).graphs) {
    const auto [apex, down] = odd_reduce(g);
    REQUIRE(is_self_complementary(down));
    REQUIRE(is_split(down));
    std::vector<int> image(13);
    for (int v = 0; v < 13; ++v) image[v] = v < apex ? v : v == apex ? 12 : v - 1;
    REQUIRE(apex_extend(down) == g.relabeled(image));
    ++cases;
  }
  for (const Graph& g : generate_sc(12, CensusFilter::SC_SPLIT).graphs) {
    const Graph up = apex_extend(g);
    const auto [apex, down] = odd_reduce(up);
    REQUIRE(apex == 12);
    REQUIRE(down == g);
    ++cases;
  }

  REQUIRE(cases > 2000);
  report(8, "invariant battery passed (" + std::to_string(cases) + " checks)");
}
