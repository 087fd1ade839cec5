#include "ferrers/exactcount.hpp"

#include <random>

#include "doctest.h"
#include "ferrers/partition.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

BipartiteGraph k2() { return BipartiteGraph::from_edges(1, 1, {{0, 0}}); }

BipartiteGraph c4() {
  return BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

BipartiteGraph c6() {
  return BipartiteGraph::from_edges(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
}

BipartiteGraph fig1() { return ferrers_from_partition(Partition{{3, 3, 2, 1}}); }

BipartiteGraph complete(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
  return BipartiteGraph::from_edges(m, n, edges);
}

std::vector<BipartiteGraph> enumerate_all(int n) {
  std::vector<BipartiteGraph> out;
  enumerate_connected(n, false, [&](const BipartiteGraph& g) { out.push_back(g); });
  return out;
}

ExactInt ipow(long base, int exp) {
  ExactInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("bareiss determinant basics") {
  CHECK(bareiss_determinant({}) == 1);
  CHECK(bareiss_determinant({{ExactInt(5)}}) == 5);
  CHECK(bareiss_determinant({{ExactInt(0), ExactInt(1)}, {ExactInt(1), ExactInt(0)}}) == -1);
  std::vector<std::vector<ExactInt>> m = {
      {ExactInt(2), ExactInt(-1), ExactInt(0)},
      {ExactInt(-1), ExactInt(2), ExactInt(-1)},
      {ExactInt(0), ExactInt(-1), ExactInt(2)}};
  CHECK(bareiss_determinant(m) == 4);
}

TEST_CASE("spanning tree count examples") {
  CHECK(spanning_tree_count(c4()) == 4);
  CHECK(spanning_tree_count(k2()) == 1);
  CHECK(spanning_tree_count(fig1()) == 36);
  CHECK(spanning_tree_count(BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}})) == 0);
  CHECK(spanning_tree_count(BipartiteGraph(1, 0, {0})) == 1);
}

TEST_CASE("spanning tree count matches edge-subset brute force, <= 7 edges") {
  for (int n = 2; n <= 7; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) {
      if (g.edge_count() > 7) continue;
      CHECK(spanning_tree_count(g) == oracle::spanning_trees_brute(g));
    }
}

TEST_CASE("determinant independent of deleted row/column, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) {
      ExactInt t = spanning_tree_count(g);
      for (int k = 0; k < g.n(); ++k) CHECK(spanning_tree_count(g, k) == t);
    }
}

TEST_CASE("complete bipartite closed form, m,n <= 4") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      BipartiteGraph g = complete(m, n);
      ExactInt expect = ipow(m, n - 1) * ipow(n, m - 1);
      CHECK(spanning_tree_count(g) == expect);
      CHECK(ExactRational(expect) == ferrers_invariant(g));
    }
}

TEST_CASE("ferrers invariant examples") {
  CHECK(ferrers_invariant(fig1()) == ExactRational(36));
  CHECK(ferrers_invariant(c6()) == ExactRational(64, 9));
  CHECK(ferrers_invariant(k2()) == 1);
  CHECK(rational_string(ferrers_invariant(c6())) == "64/9");
  CHECK_THROWS_AS(ferrers_invariant(BipartiteGraph(1, 0, {0})), std::invalid_argument);
  // isolated vertex: zero invariant
  CHECK(ferrers_invariant(BipartiteGraph(2, 1, {1u, 0u})) == 0);
}

TEST_CASE("classification examples") {
  Classification c = classify(c6());
  CHECK(c.verdict == Verdict::Good);
  CHECK(c.tree_count == 6);

  c = classify(c4());
  CHECK(c.verdict == Verdict::Good);
  CHECK(ExactRational(c.tree_count) == c.ferrers_invariant);

  c = classify(fig1());
  CHECK(c.verdict == Verdict::Good);
  CHECK(c.tree_count == 36);
  CHECK(c.ferrers_invariant == 36);
}

TEST_CASE("Ferrers graphs give exact equality, sums <= 9") {
  for (int m = 1; m <= 9; ++m)
    for (int parts = 1; parts <= m; ++parts)
      enumerate_partitions(m, parts, m, [&](const Partition& lam) {
        Classification c = classify(ferrers_from_partition(lam));
        CHECK(c.verdict == Verdict::Good);
        CHECK(ExactRational(c.tree_count) == c.ferrers_invariant);
      });
}

TEST_CASE("venkataramana examples") {
  CHECK(venkataramana_holds(c4()));
  CHECK(venkataramana_holds(k2()));
  CHECK(venkataramana_holds(complete(1, 3)));
  CHECK_THROWS_AS(venkataramana_holds(BipartiteGraph::from_edges(2, 2, {{0, 0}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("bridge and glue multiplicativity, random pairs n <= 6") {
  std::vector<BipartiteGraph> pool;
  for (int n = 2; n <= 6; ++n)
    for (const BipartiteGraph& g : enumerate_all(n)) pool.push_back(g);
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto& g1 = pool[rng() % pool.size()];
    const auto& g2 = pool[rng() % pool.size()];
    ExactInt t1 = spanning_tree_count(g1), t2 = spanning_tree_count(g2);
    int x1 = static_cast<int>(rng() % g1.p());
    int x2 = static_cast<int>(rng() % g2.p());
    CHECK(spanning_tree_count(glue_at_vertex(g1, x1, g2, x2)) == t1 * t2);
    int v = static_cast<int>(rng() % g2.q());
    CHECK(spanning_tree_count(join_by_edge(g1, x1, g2, v)) == t1 * t2);
  }
}

TEST_CASE("glued invariant dominates the product, random Good pairs") {
  std::vector<BipartiteGraph> pool;
  for (int n = 2; n <= 6; ++n)
    for (const BipartiteGraph& g : enumerate_all(n))
      if (classify(g).verdict == Verdict::Good) pool.push_back(g);
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    const auto& g1 = pool[rng() % pool.size()];
    const auto& g2 = pool[rng() % pool.size()];
    int x1 = static_cast<int>(rng() % g1.p());
    int x2 = static_cast<int>(rng() % g2.p());
    CHECK(ferrers_invariant(g1) * ferrers_invariant(g2) <=
          ferrers_invariant(glue_at_vertex(g1, x1, g2, x2)));
  }
}
