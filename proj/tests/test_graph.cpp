#include <doctest.h>

#include <random>

#include "oddcycle/certify.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/graph.hpp"
#include "oracles.hpp"

using namespace oddcycle;

TEST_CASE("bitset basics") {
  VertexBitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(1) == 64);
  CHECK(b.find_next(65) == 129);
  CHECK(b.find_next(130) == 130);
  CHECK(b.to_list() == VertexList{0, 64, 129});
  VertexBitset full(130, true);
  CHECK(full.count() == 130);
  full.subtract(b);
  CHECK(full.count() == 127);
  CHECK_FALSE(full.intersects(b));
  CHECK(VertexBitset::from_list(130, {0, 64, 129}) == b);
}

TEST_CASE("builder rejects loops and out of range vertices") {
  Graph::Builder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(b.add_edge(0, 3), InputError);
}

TEST_CASE("views mask vertices without copying") {
  const Graph k4 = oracle::complete(4);
  const Graph h = k4.without({1});
  CHECK(h.active_count() == 3);
  CHECK_FALSE(h.has_edge(0, 1));
  CHECK(h.has_edge(0, 2));
  CHECK(h.degree(0) == 2);
  CHECK(h.edge_count() == 3);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.restricted_to({0, 3}).edges() == std::vector<Edge>{{0, 3}});
}

TEST_CASE("bfs_layers on a path") {
  const Graph p = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const LayeredBall ball = bfs_layers(p, 0, 2);
  REQUIRE(ball.layers.size() == 3);
  CHECK(ball.layers[0] == VertexList{0});
  CHECK(ball.layers[1] == VertexList{1});
  CHECK(ball.layers[2] == VertexList{2});
}

TEST_CASE("bfs_layers on an isolated vertex") {
  const LayeredBall ball = bfs_layers(Graph(3), 1, 5);
  REQUIRE(ball.layers.size() == 1);
  CHECK(ball.layers[0] == VertexList{1});
}

TEST_CASE("bfs_layers on the Petersen graph") {
  const LayeredBall ball = bfs_layers(oracle::petersen(), 0, 2);
  CHECK(ball.cumulative == std::vector<std::size_t>{1, 4, 10});
}

TEST_CASE("bfs_layers rejects an inactive root") {
  const Graph g = oracle::cycle(5).without({2});
  CHECK_THROWS_AS(bfs_layers(g, 2, 1), InputError);
}

TEST_CASE("bfs layers match naive distances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng() % 60;
    const Graph g = oracle::random_graph(n, 0.08, rng);
    const auto d = oracle::floyd(oracle::matrix(g));
    const Vertex root = static_cast<Vertex>(rng() % n);
    const LayeredBall ball = bfs_layers(g, root, n);
    for (std::size_t i = 0; i < ball.layers.size(); ++i)
      for (Vertex v : ball.layers[i]) CHECK(d[root][v] == i);
    std::size_t reachable = 0;
    for (std::size_t v = 0; v < n; ++v) reachable += d[root][v] != oracle::kInf;
    CHECK(ball.size() == reachable);
  }
}

TEST_CASE("check_bipartite on C_6") {
  auto res = check_bipartite(oracle::cycle(6));
  REQUIRE(std::holds_alternative<std::vector<ComponentBipartition>>(res));
  const auto& parts = std::get<std::vector<ComponentBipartition>>(res);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].sides.side0 == VertexList{0, 2, 4});
  CHECK(parts[0].sides.side1 == VertexList{1, 3, 5});
}

TEST_CASE("check_bipartite on C_7 and K_4") {
  auto c7 = check_bipartite(oracle::cycle(7));
  REQUIRE(std::holds_alternative<OddCycleCertificate>(c7));
  CHECK(std::get<OddCycleCertificate>(c7).length() == 7);
  CHECK_FALSE(verify_odd_cycle(oracle::cycle(7), std::get<OddCycleCertificate>(c7)));

  auto k4 = check_bipartite(oracle::complete(4));
  REQUIRE(std::holds_alternative<OddCycleCertificate>(k4));
  CHECK(std::get<OddCycleCertificate>(k4).length() == 3);
  CHECK_FALSE(verify_odd_cycle(oracle::complete(4), std::get<OddCycleCertificate>(k4)));
}

TEST_CASE("odd_girth examples") {
  CHECK(odd_girth(oracle::cycle(5))->length == 5);
  CHECK(odd_girth(oracle::complete(4))->length == 3);
  const Graph p = oracle::petersen();
  const auto og = odd_girth(p);
  REQUIRE(og);
  CHECK(og->length == 5);
  CHECK(oracle::odd_girth(oracle::matrix(p)) == 5);
  CHECK_FALSE(verify_odd_cycle(p, og->witness));
  CHECK_FALSE(odd_girth(oracle::cycle(8)));
  CHECK_FALSE(odd_girth(oracle::cycle(9), 7));
}

TEST_CASE("odd_girth matches exhaustive enumeration and bipartiteness") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 6);
    const Graph g = oracle::random_graph(n, p, rng);
    const auto m = oracle::matrix(g);
    const std::size_t expect = oracle::odd_girth(m);
    const auto og = odd_girth(g);
    CHECK(og.has_value() == (expect != 0));
    if (og) {
      CHECK(og->length == expect);
      CHECK_FALSE(verify_odd_cycle(g, og->witness));
    }
    CHECK(is_bipartite(g) == !og.has_value());
    CHECK(oracle::bipartite(m) == is_bipartite(g));
    auto chk = check_bipartite(g);
    if (auto* cert = std::get_if<OddCycleCertificate>(&chk)) CHECK_FALSE(verify_odd_cycle(g, *cert));
    else CHECK_FALSE(verify_bipartition(g, merge_sides(std::get<std::vector<ComponentBipartition>>(chk))));
  }
}

TEST_CASE("shortest_odd_walks minimum is the odd girth") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.3, rng);
    std::size_t best = 0;
    for (const auto& w : shortest_odd_walks(g))
      if (w && (best == 0 || *w < best)) best = *w;
    CHECK(best == oracle::odd_girth(oracle::matrix(g)));
  }
}

TEST_CASE("odd_cycle_from_walk") {
  const Graph k3 = oracle::complete(3);
  CHECK(odd_cycle_from_walk({{0, 1, 2}}, k3).vertices == VertexList{0, 1, 2});

  // Triangle 0,1,2 and square 0,3,4,5 sharing vertex 0.
  const Graph eight = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto c = odd_cycle_from_walk({{0, 1, 2, 0, 3, 4, 5}}, eight);
  CHECK(c.length() == 3);
  CHECK_FALSE(verify_odd_cycle(eight, c));

  CHECK_THROWS_AS(odd_cycle_from_walk({{0, 1, 2, 3}}, oracle::complete(4)), InputError);
  CHECK_THROWS_AS(odd_cycle_from_walk({{0, 1, 3}}, eight), InputError);
}

TEST_CASE("odd_cycle_from_walk on random walks in K_7") {
  const Graph k7 = oracle::complete(7);
  EdgeColouring mono(7, 1);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    VertexList w{static_cast<Vertex>(rng() % 7)};
    while (w.size() < 9) {
      Vertex next;
      do next = static_cast<Vertex>(rng() % 7);
      while (next == w.back() || (w.size() == 8 && next == w.front()));
      w.push_back(next);
    }
    const auto c = odd_cycle_from_walk({w}, k7);
    CHECK(c.length() <= 9);
    CHECK_FALSE(verify_mono_odd_cycle(mono, c));
  }
}

TEST_CASE("shortest_path_within") {
  const Graph star = Graph::from_edges(3, {{0, 2}, {1, 2}});
  CHECK(shortest_path_within(star, {0, 1, 2}, 0, 0) == VertexList{0});
  CHECK(shortest_path_within(star, {0, 1, 2}, 0, 1) == VertexList{0, 2, 1});

  Graph::Builder b(12);
  for (Vertex i = 0; i < 11; ++i) b.add_edge(i, (i + 1) % 11);
  b.add_edge(0, 11).add_edge(11, 5);
  const Graph f = std::move(b).build();
  CHECK(shortest_path_within(f, {0, 11, 5}, 0, 5) == VertexList{0, 11, 5});
  CHECK_THROWS_AS(shortest_path_within(f, {0, 5}, 0, 5), InputError);
  CHECK_THROWS_AS(shortest_path_within(f, {0, 11}, 0, 5), InputError);
}

TEST_CASE("connected components") {
  const Graph g = Graph::from_edges(6, {{0, 3}, {3, 4}, {1, 2}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexList{0, 3, 4});
  CHECK(comps[1] == VertexList{1, 2});
  CHECK(comps[2] == VertexList{5});
}
