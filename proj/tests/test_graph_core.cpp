#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracle_support.hpp"
#include "scsplit/graph.hpp"
#include "scsplit/graph6.hpp"
#include "scsplit/isomorphism.hpp"
#include "scsplit/permutation.hpp"

using namespace scsplit;
namespace ts = testsupport;

namespace {

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("graph construction and edge queries") {
  const Graph empty0(0);
  CHECK(empty0.order() == 0);
  CHECK(empty0.edge_count() == 0);
  CHECK(empty0.edges().empty());
  CHECK(empty0.vertex_mask() == 0);

  const Graph p4 = path4();
  CHECK(p4.order() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(0, 1));
  CHECK(p4.adjacent(1, 0));
  CHECK_FALSE(p4.adjacent(0, 2));
  CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.row(1) == (vbit(0) | vbit(2)));

  CHECK(Graph::complete(4).edge_count() == 6);
  CHECK(Graph::complete(0).order() == 0);
  CHECK(Graph::cycle(5).degrees() == std::vector<int>(5, 2));
  CHECK(Graph::cycle(2).edge_count() == 1);
  CHECK(Graph::cycle(1).edge_count() == 0);

  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(p4.adjacent(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(p4.with_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("graph value operations") {
  const Graph p4 = path4();

  const Graph plus = p4.with_edge(0, 3);
  CHECK(plus.adjacent(0, 3));
  CHECK_FALSE(p4.adjacent(0, 3));  // original untouched
  CHECK(plus.without_edge(0, 3) == p4);
  CHECK(p4.with_edge(0, 1) == p4);  // re-adding an edge is a no-op

  // complement is an involution and complements every pair
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = ts::random_graph(rng, n);
    const Graph gc = g.complement();
    CHECK(gc.complement() == g);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(g.adjacent(i, j) != gc.adjacent(i, j));
    CHECK(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
  }

  // induced keeps the order of `keep`; induced_mask keeps ascending labels
  CHECK(p4.induced({1, 2}) == Graph(2, {{0, 1}}));
  CHECK(p4.induced({0, 2}) == Graph(2));
  CHECK(p4.induced({3, 2, 1}) == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(p4.induced_mask(vbit(0) | vbit(1) | vbit(2)) == Graph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(p4.induced({0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(p4.induced_mask(vbit(4)), std::invalid_argument);

  // relabeled moves v to image[v]; applying the inverse image returns home
  const std::vector<int> image{2, 0, 3, 1};
  const Graph moved = p4.relabeled(image);
  CHECK(moved.adjacent(2, 0));  // edge 0-1 landed on 2-0
  std::vector<int> inv(4);
  for (int v = 0; v < 4; ++v) inv[image[v]] = v;
  CHECK(moved.relabeled(inv) == p4);
  CHECK_THROWS_AS(p4.relabeled({0, 1, 2}), std::invalid_argument);

  CHECK(mask_to_vertices(vbit(0) | vbit(3) | vbit(5)) == std::vector<int>{0, 3, 5});
  CHECK(vertices_to_mask({5, 0, 3}) == (vbit(0) | vbit(3) | vbit(5)));
  CHECK_THROWS_AS(vertices_to_mask({64}), std::invalid_argument);
}

TEST_CASE("permutation cycles and algebra") {
  const Permutation id = Permutation::identity(4);
  CHECK(id.size() == 4);
  CHECK(id.fixed_points() == 4);
  CHECK(id.to_string() == "(0)(1)(2)(3)");

  const Permutation rot(std::vector<int>{1, 2, 3, 0});
  CHECK(rot.fixed_points() == 0);
  CHECK(rot.cycles() == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(rot.to_string() == "(0 1 2 3)");
  CHECK(rot(3) == 0);
  CHECK(rot.iterate(0, 4) == 0);
  CHECK(rot.iterate(1, 2) == 3);
  CHECK(rot.inverse().image() == std::vector<int>{3, 0, 1, 2});
  CHECK(rot.inverse().inverse() == rot);

  // canonical decomposition: cycles start at their least element, ordered by start
  const Permutation mixed(std::vector<int>{0, 3, 4, 1, 2});
  CHECK(mixed.cycles() == std::vector<std::vector<int>>{{0}, {1, 3}, {2, 4}});
  CHECK(mixed.fixed_points() == 1);

  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(id(4), std::invalid_argument);
  CHECK_THROWS_AS(id(-1), std::invalid_argument);
}

TEST_CASE("graph6 encoding matches stored strings") {
  CHECK(to_graph6(Graph(1)) == ts::kK1);
  CHECK(to_graph6(Graph::complete(3)) == ts::kK3);
  CHECK(to_graph6(path4()) == ts::kP4);
  CHECK(to_graph6(Graph::complete(4)) == ts::kK4);
  CHECK(to_graph6(Graph::cycle(4)) == ts::kC4);
  CHECK(to_graph6(Graph::cycle(5)) == ts::kC5);
  CHECK(to_graph6(Graph(5)) == ts::kE5);
  CHECK(to_graph6(Graph(0)) == "?");

  for (const char* s : {ts::kK1, ts::kK3, ts::kP4, ts::kK4, ts::kC4, ts::kC5, ts::kE5,
                        ts::kC9Squared, ts::kFigA, ts::kFigB, ts::kNotScFourThree, ts::kScEight})
    CHECK(to_graph6(from_graph6(s)) == s);

  // every labeled graph on <= 5 vertices round-trips
  for (int n = 0; n <= 5; ++n)
    ts::for_all_graphs(n, [&](const Graph& g) { REQUIRE(from_graph6(to_graph6(g)) == g); });
}

TEST_CASE("graph6 long-form header for orders above 62") {
  std::vector<std::pair<int, int>> e63, e64;
  for (int i = 0; i < 63; ++i)
    for (int j = i + 1; j < 63; ++j)
      if ((i + j) % 3 == 0) e63.emplace_back(i, j);
  for (int i = 0; i < 64; ++i)
    for (int j = i + 1; j < 64; ++j)
      if (i * j % 5 == 1) e64.emplace_back(i, j);
  const Graph g63(63, e63), g64(64, e64);

  const std::string s63 = to_graph6(g63), s64 = to_graph6(g64);
  CHECK(s63 == ts::kBig63);
  CHECK(s64 == ts::kBig64);
  CHECK(s63.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(s64.size() == 4 + (64 * 63 / 2 + 5) / 6);
  CHECK(from_graph6(s63) == g63);
  CHECK(from_graph6(s64) == g64);
}

TEST_CASE("graph6 decoder rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Ch "), std::invalid_argument);   // trailing byte
  CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);     // truncated body
  CHECK_THROWS_AS(from_graph6("Ch\x7f"), std::invalid_argument);  // byte out of range
  CHECK_THROWS_AS(from_graph6("D?@"), std::invalid_argument);   // padding bits set
  CHECK_THROWS_AS(from_graph6("~"), std::invalid_argument);     // header cut short
  CHECK_THROWS_AS(from_graph6("~~"), std::invalid_argument);    // 8-byte form unsupported

  std::istringstream in("Ch\nBw\n");
  const auto batch = read_graph6(in);
  REQUIRE(batch.size() == 2);
  CHECK(batch[0] == path4());
  CHECK(batch[1] == Graph::complete(3));

  std::ostringstream out;
  write_graph6(out, batch);
  CHECK(out.str() == "Ch\nBw\n");
}

TEST_CASE("isomorphism search agrees with permutation scan") {
  std::mt19937 rng(777);

  // positive cases: relabelings are always detected, with a verified witness
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = ts::random_graph(rng, n);
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    const Graph h = g.relabeled(image);

    const auto iso = is_isomorphic(g, h);
    REQUIRE(iso.has_value());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(g.adjacent(i, j) == h.adjacent((*iso)(i), (*iso)(j)));
  }

  // random pairs: presence/absence matches the brute scan
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = ts::random_graph(rng, n);
    const Graph h = ts::random_graph(rng, n);
    CHECK(is_isomorphic(g, h).has_value() == ts::brute_find_isomorphism(g, h).has_value());
  }

  CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)).has_value());
  CHECK(is_isomorphic(Graph(0), Graph(0)).has_value());
  CHECK_FALSE(is_isomorphic(Graph::cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}))
                  .has_value());
}

TEST_CASE("self-complementarity test agrees with permutation scan") {
  // exhaustive over all labeled graphs on 4 and 5 vertices
  for (int n = 4; n <= 5; ++n) {
    int sc = 0;
    ts::for_all_graphs(n, [&](const Graph& g) {
      const auto sigma = find_antimorphism(g);
      REQUIRE(sigma.has_value() == ts::brute_is_sc(g));
      if (sigma) {
        CHECK(is_antimorphism(g, *sigma));
        ++sc;
      }
    });
    // labeled counts: 12 paths on four vertices; 12 pentagons + 60 bulls on five
    CHECK(sc == (n == 4 ? 12 : 72));
  }

  // spot checks at larger orders
  CHECK(is_self_complementary(from_graph6(ts::kScEight)));
  CHECK_FALSE(is_self_complementary(from_graph6(ts::kNotScFourThree)));
  CHECK_FALSE(is_self_complementary(from_graph6(ts::kC9Squared)));
  CHECK(is_self_complementary(Graph(1)));
  CHECK(is_self_complementary(Graph(0)));
  CHECK_FALSE(is_self_complementary(Graph(2)));

  // is_antimorphism rejects wrong certificates
  const Graph p4 = path4();
  CHECK(is_antimorphism(p4, Permutation({1, 3, 0, 2})));
  CHECK_FALSE(is_antimorphism(p4, Permutation::identity(4)));
  CHECK_FALSE(is_antimorphism(p4, Permutation({1, 2, 3, 0})));
  CHECK_THROWS_AS(is_antimorphism(p4, Permutation::identity(3)), std::invalid_argument);
}
