#include "diffnet/error.hpp"
#include "diffnet/graphops.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <numeric>

using namespace diffnet;

namespace {

using Edges = std::vector<std::pair<NodeId, NodeId>>;

DirectedGraph make(std::size_t n, const Edges& e) { return DirectedGraph(n, e); }

std::vector<NodeId> all_nodes(std::size_t n) {
  std::vector<NodeId> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Edges to_edges(const oracle::EdgeList& e) {
  Edges out;
  for (auto [u, v] : e) out.emplace_back(u, v);
  return out;
}

}  // namespace

TEST_CASE("graph construction collapses parallel edges and rejects self-loops") {
  const auto g = make(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK_THROWS_AS(make(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(make(2, {{0, 2}}), Error);
}

TEST_CASE("strongly connected components") {
  CHECK(strongly_connected_components(make(0, {})).empty());
  // a=0, b=1, c=2
  const auto c = strongly_connected_components(make(3, {{0, 1}, {1, 0}, {1, 2}}));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Component{0, 1});
  CHECK(c[1] == Component{2});
  CHECK(strongly_connected_components(make(3, {{0, 1}, {1, 2}, {2, 0}})).size() == 1);
}

TEST_CASE("weakly connected components") {
  CHECK(weakly_connected_components(make(0, {})).empty());
  const auto two = weakly_connected_components(make(4, {{0, 1}, {2, 3}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 2);
  CHECK(two[1].size() == 2);
  const auto one = weakly_connected_components(make(3, {{0, 1}, {2, 1}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Component{0, 1, 2});
}

TEST_CASE("largest component tie goes to smallest member") {
  const auto comps = weakly_connected_components(make(4, {{2, 3}, {0, 1}}));
  CHECK(largest_component(comps) == Component{0, 1});
}

TEST_CASE("diameter of connected node sets") {
  CHECK(diameter_undirected(make(1, {}), all_nodes(1)) == 0);
  CHECK(diameter_undirected(make(3, {{0, 1}, {2, 1}}), all_nodes(3)) == 2);
  CHECK(diameter_undirected(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), all_nodes(4)) == 2);
  CHECK_THROWS_AS(diameter_undirected(make(3, {{0, 1}}), all_nodes(3)), Error);
}

TEST_CASE("average clustering") {
  CHECK(average_clustering(make(0, {})) == 0.0);
  CHECK(average_clustering(make(3, {{0, 1}, {1, 2}, {2, 0}})) == doctest::Approx(1.0));
  CHECK(average_clustering(make(4, {{0, 1}, {0, 2}, {0, 3}})) == 0.0);
  // Triangle 0-1-2 plus pendant 3 on node 2: (1 + 1 + 1/3 + 0) / 4.
  CHECK(average_clustering(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})) ==
        doctest::Approx((1.0 + 1.0 + 1.0 / 3.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("main k-core number uses total degree") {
  CHECK(main_kcore_number(make(0, {})) == 0);
  CHECK(main_kcore_number(make(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);
  CHECK(main_kcore_number(make(2, {{0, 1}})) == 1);
  // A mutual pair gives each end total degree 2.
  CHECK(main_kcore_number(make(2, {{0, 1}, {1, 0}})) == 2);
}

TEST_CASE("structural virality") {
  CHECK(structural_virality(make(1, {}), all_nodes(1)) == 0.0);
  CHECK(structural_virality(make(3, {{0, 1}, {1, 2}}), all_nodes(3)) == doctest::Approx(8.0 / 6.0));
  Edges complete;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) complete.emplace_back(u, v);
  CHECK(structural_virality(make(5, complete), all_nodes(5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(structural_virality(make(2, {}), all_nodes(2)), Error);
}

TEST_CASE("density") {
  CHECK(density(make(3, {})) == 0.0);
  CHECK(density(make(1, {})) == 0.0);
  CHECK(density(make(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}})) == doctest::Approx(1.0));
  CHECK(density(make(3, {{0, 1}})) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("metrics agree with brute-force oracles on random small graphs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const auto raw = oracle::random_edges(rng, n);
    const auto g = make(static_cast<std::size_t>(n), to_edges(raw));
    CAPTURE(trial);

    const auto scc = strongly_connected_components(g);
    const auto wcc = weakly_connected_components(g);
    const auto want_scc = oracle::scc(n, raw);
    const auto want_wcc = oracle::wcc(n, raw);
    REQUIRE(scc.size() == want_scc.size());
    for (std::size_t i = 0; i < scc.size(); ++i) {
      CHECK(std::vector<int>(scc[i].begin(), scc[i].end()) == want_scc[i]);
    }
    REQUIRE(wcc.size() == want_wcc.size());
    for (std::size_t i = 0; i < wcc.size(); ++i) {
      CHECK(std::vector<int>(wcc[i].begin(), wcc[i].end()) == want_wcc[i]);
    }
    // Every SCC lies inside one WCC.
    for (const auto& s : scc) {
      CHECK(std::any_of(wcc.begin(), wcc.end(), [&](const Component& w) {
        return std::includes(w.begin(), w.end(), s.begin(), s.end());
      }));
    }

    CHECK(main_kcore_number(g) == oracle::kcore(n, raw));
    CHECK(average_clustering(g) == doctest::Approx(oracle::clustering(n, raw)).epsilon(1e-12));
    CHECK(density(g) == doctest::Approx(oracle::density(n, raw)).epsilon(1e-12));
    for (const auto& c : wcc) {
      const std::vector<int> members(c.begin(), c.end());
      CHECK(diameter_undirected(g, c) == oracle::diameter(n, raw, members));
      const double sv = structural_virality(g, c);
      CHECK(sv == doctest::Approx(oracle::structural_virality(n, raw, members)).epsilon(1e-12));
      if (c.size() >= 2) CHECK(sv >= 1.0);
    }
  }
}

TEST_CASE("metrics are invariant under node relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto raw = oracle::random_edges(rng, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Edges a = to_edges(raw), b;
    for (auto [u, v] : raw) b.emplace_back(perm[u], perm[v]);
    const auto ga = make(n, a), gb = make(n, b);
    CHECK(main_kcore_number(ga) == main_kcore_number(gb));
    CHECK(average_clustering(ga) == doctest::Approx(average_clustering(gb)));
    CHECK(density(ga) == density(gb));
    CHECK(strongly_connected_components(ga).size() == strongly_connected_components(gb).size());
    const auto la = largest_component(weakly_connected_components(ga));
    const auto lb = largest_component(weakly_connected_components(gb));
    CHECK(la.size() == lb.size());
  }
}

TEST_CASE("long path does not overflow the traversal stack") {
  const std::size_t n = 200000;
  Edges path;
  for (NodeId i = 0; i + 1 < static_cast<NodeId>(n); ++i) path.emplace_back(i, i + 1);
  const auto g = make(n, path);
  CHECK(strongly_connected_components(g).size() == n);
  CHECK(weakly_connected_components(g).size() == 1);
  CHECK(main_kcore_number(g) == 1);
}
