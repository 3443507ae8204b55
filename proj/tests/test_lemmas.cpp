#include <doctest.h>

#include <cmath>
#include <random>

#include "oddcycle/certify.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/lemmas.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

const Decomposition& as_decomposition(const PeelOutcome& o) {
  REQUIRE(std::holds_alternative<Decomposition>(o));
  return std::get<Decomposition>(o);
}

Graph apex_c11() {
  Graph::Builder b(12);
  for (Vertex i = 0; i < 11; ++i) b.add_edge(i, (i + 1) % 11);
  b.add_edge(0, 11).add_edge(11, 5);
  return std::move(b).build();
}

OddCycleCertificate c11_seed() {
  OddCycleCertificate c;
  for (Vertex i = 0; i < 11; ++i) c.vertices.push_back(i);
  return c;
}

SelectorInstance random_instance(std::size_t n, std::size_t q, std::size_t max_side, std::mt19937_64& rng) {
  SelectorInstance inst{n, {}};
  for (std::size_t i = 0; i < q; ++i) {
    SidePair p;
    for (Vertex x = 0; x < n; ++x) {
      const auto roll = rng() % 4;
      if (roll == 0 && p.a.size() + p.b.size() < max_side) p.a.push_back(x);
      else if (roll == 1 && p.a.size() + p.b.size() < max_side) p.b.push_back(x);
    }
    inst.pairs.push_back(std::move(p));
  }
  return inst;
}

}  // namespace

TEST_CASE("arrest rule modes") {
  const ArrestRule std_rule = arrest_rule(16, 4);
  CHECK(std_rule.mode == PeelMode::standard);
  CHECK(std_rule.factor == doctest::Approx(1.0));
  CHECK(std_rule.deleted_bound == 16);
  const ArrestRule gen = arrest_rule(1024, 5);
  CHECK(gen.mode == PeelMode::generalized);
  CHECK(gen.factor == doctest::Approx(3.0));
  CHECK(gen.deleted_bound == static_cast<std::size_t>(std::ceil((1.0 - 1.0 / 4.0) * 1024)));
  CHECK_THROWS_AS(arrest_rule(10, 0), InputError);
}

TEST_CASE("peel C_16 with k = 4") {
  const Graph g = oracle::cycle(16);
  const PeelOutcome out = peel(g, 4);
  const auto& dec = as_decomposition(out);
  CHECK(dec.deleted.size() <= 16);
  CHECK(is_bipartite(g.without(dec.deleted)));
  CHECK_FALSE(verify_peel(g, 4, out));
}

TEST_CASE("peel C_9 with k = 4 arrests at layer 2") {
  // log2(9)/4 < 1: the two-vertex layer 2 is small enough against the ball of 3.
  const Graph g = oracle::cycle(9);
  const PeelOutcome out = peel(g, 4);
  const auto& dec = as_decomposition(out);
  CHECK(dec.deleted == VertexList{2, 5, 7});
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.components[0].vertices == VertexList{0, 1, 8});
  CHECK(dec.components[0].radius == 1);
  CHECK(dec.components[1].vertices == VertexList{3, 4});
  CHECK(dec.components[2].vertices == VertexList{6});
  CHECK_FALSE(verify_peel(g, 4, out));
}

TEST_CASE("peel K_4 with k = 2 finds a triangle") {
  const Graph g = oracle::complete(4);
  const PeelOutcome out = peel(g, 2);
  REQUIRE(std::holds_alternative<ShortCycle>(out));
  CHECK(std::get<ShortCycle>(out).cycle.length() == 3);
  CHECK_FALSE(verify_peel(g, 2, out));
}

TEST_CASE("peel on high odd girth graphs always decomposes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 200;
    const Graph g = oracle::random_bipartite(n, 0.05 + 0.05 * static_cast<double>(rng() % 5), rng);
    const std::size_t k = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + rng() % 3;
    const PeelOutcome out = peel(g, k);
    as_decomposition(out);
    CHECK_FALSE(verify_peel(g, k, out));
  }
  for (std::size_t m : {21, 33, 51, 101}) {
    const Graph g = oracle::cycle(m);
    const std::size_t k = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(m))));
    REQUIRE(2 * k + 1 < m);
    const PeelOutcome out = peel(g, k);
    as_decomposition(out);
    CHECK_FALSE(verify_peel(g, k, out));
  }
}

TEST_CASE("generalized peel respects its deleted-set bound") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_bipartite(256, 0.03, rng);
    const std::size_t k = 1 + rng() % 6;
    const PeelOutcome out = peel(g, k);
    const auto& dec = as_decomposition(out);
    CHECK(dec.deleted.size() <= arrest_rule(256, k).deleted_bound);
    CHECK_FALSE(verify_peel(g, k, out));
  }
}

TEST_CASE("peel outcomes on random graphs verify") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(10 + rng() % 60, 0.05 + 0.01 * static_cast<double>(rng() % 10), rng);
    const std::size_t k = 1 + rng() % 8;
    CHECK_FALSE(verify_peel(g, k, peel(g, k)));
  }
}

TEST_CASE("independent set via peel") {
  const Graph c16 = oracle::cycle(16);
  const auto dec = as_decomposition(peel(c16, 4));
  auto res = independent_set_via_peel(c16, 4);
  REQUIRE(std::holds_alternative<VertexList>(res));
  const auto& set = std::get<VertexList>(res);
  CHECK(2 * set.size() >= 16 - dec.deleted.size());
  CHECK(c16.restricted_to(set).edge_count() == 0);

  auto empty = independent_set_via_peel(Graph(7), 3);
  CHECK(std::get<VertexList>(empty).size() == 7);

  std::mt19937_64 rng(64);
  const Graph g = oracle::random_bipartite(64, 0.1, rng);
  const auto d64 = as_decomposition(peel(g, 6));
  const auto s64 = std::get<VertexList>(independent_set_via_peel(g, 6));
  CHECK(2 * s64.size() >= 64 - d64.deleted.size());
  CHECK(g.restricted_to(s64).edge_count() == 0);

  CHECK(std::holds_alternative<ShortCycle>(independent_set_via_peel(oracle::complete(4), 2)));
}

TEST_CASE("shorten_cycle with no targets returns the seed") {
  const Graph f = apex_c11();
  const auto out = shorten_cycle(f, {Cluster{{0, 5, 11}, 11, 1}}, std::vector<std::size_t>{}, 1, c11_seed());
  CHECK(out == c11_seed());
}

TEST_CASE("shorten_cycle worked apex instance") {
  const Graph f = apex_c11();
  const std::vector<Cluster> clusters{{{0, 5, 11}, 11, 1}};
  const auto out = shorten_cycle(f, clusters, std::vector<std::size_t>{0}, 1, c11_seed());
  CHECK(out.vertices == VertexList{0, 1, 2, 3, 4, 5, 11});
  CHECK_FALSE(verify_odd_cycle(f, out));
  CHECK(out.length() <= shortening_bound(f, {{0, 5, 11}}, 1));
  CHECK(shortening_bound(f, {{0, 5, 11}}, 1) == 14);
  CHECK(out.length() >= odd_girth(f)->length);
}

TEST_CASE("shorten_cycle recovers a short cycle inside the target") {
  // C_5 on 0..4 plus a 14-edge detour from 0 to 2 through 5..17.
  Graph::Builder b(18);
  for (Vertex i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  b.add_edge(0, 5);
  for (Vertex i = 5; i < 17; ++i) b.add_edge(i, i + 1);
  b.add_edge(17, 2);
  const Graph f = std::move(b).build();
  OddCycleCertificate seed{{0, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 2, 3, 4}, {}};
  REQUIRE_FALSE(verify_odd_cycle(f, seed));
  const auto out = shorten_cycle(f, {Cluster{{0, 1, 2, 3, 4}, 0, 2}}, std::vector<std::size_t>{0}, 2, seed);
  CHECK(out.length() <= 9);
  CHECK(out.length() == odd_girth(f)->length);
  CHECK_FALSE(verify_odd_cycle(f, out));
}

TEST_CASE("shorten_cycle long target forces the pigeonhole splice") {
  // Wheel on a 25-cycle: the hub is within distance 1 of every rim vertex.
  const std::size_t m = 25;
  Graph::Builder b(m + 1);
  for (Vertex i = 0; i < m; ++i) b.add_edge(i, (i + 1) % m).add_edge(i, m);
  const Graph f = std::move(b).build();
  OddCycleCertificate seed;
  for (Vertex i = 0; i < m; ++i) seed.vertices.push_back(i);
  VertexList all;
  for (Vertex i = 0; i <= m; ++i) all.push_back(i);
  const auto out = shorten_cycle(f, {Cluster{all, static_cast<Vertex>(m), 1}}, std::vector<std::size_t>{0}, 1, seed);
  CHECK(out.length() <= 5);
  CHECK_FALSE(verify_odd_cycle(f, out));
}

TEST_CASE("shorten_cycle input errors") {
  const Graph f = apex_c11();
  OddCycleCertificate bad{{0, 1, 3}, {}};
  CHECK_THROWS_AS(shorten_cycle(f, {Cluster{{0, 5, 11}, 11, 1}}, std::vector<std::size_t>{0}, 1, bad), InputError);
  // Radius claim 0 is false for the apex cluster.
  CHECK_THROWS_AS(shorten_cycle(f, {Cluster{{0, 5, 11}, 11, 0}}, std::vector<std::size_t>{0}, 1, c11_seed()), InputError);
  // Disconnected cluster.
  CHECK_THROWS_AS(shorten_cycle(f, {Cluster{{0, 5}, 0, 1}}, std::vector<std::size_t>{0}, 1, c11_seed()), InputError);
}

TEST_CASE("selector with empty pairs keeps everything") {
  const SelectorInstance inst{6, {SidePair{}, SidePair{}}};
  const auto res = select_complement(inst);
  CHECK(res.survivors.size() == 6);
  CHECK_FALSE(verify_selector(inst, res, 6));
}

TEST_CASE("selector n = 4 single pair") {
  const SelectorInstance inst{4, {SidePair{{0}, {1}}}};
  const auto res = select_complement(inst);
  CHECK(res.survivors.size() == 3);
  CHECK(oracle::best_selector(inst) == 3);
  CHECK_FALSE(verify_selector(inst, res, 3));
}

TEST_CASE("expectation bound") {
  CHECK(expectation_bound(SelectorInstance{4, {SidePair{{0, 1}, {2, 3}}}}) == 2);
  CHECK(expectation_bound(SelectorInstance{4, {SidePair{{0}, {1}}}}) == 3);  // 4 * 2^-1/2 = 2.83
  CHECK(expectation_bound(SelectorInstance{0, {}}) == 0);
}

TEST_CASE("derandomized selector meets the expectation on small instances") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 10, q = 1 + rng() % 4;
    const SelectorInstance inst = random_instance(n, q, n, rng);
    const auto res = select_complement(inst);
    const std::size_t bound = expectation_bound(inst);
    CHECK_FALSE(verify_selector(inst, res, bound));
    CHECK(res.survivors.size() <= oracle::best_selector(inst));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const SelectorInstance inst = random_instance(8, 2, 4, rng);
    CHECK_FALSE(verify_selector(inst, select_complement(inst), expectation_bound(inst)));
  }
}

TEST_CASE("randomized selector") {
  std::mt19937_64 rng(7);
  const SelectorInstance inst = random_instance(40, 5, 20, rng);
  const auto a = select_complement(inst, RandomizedSelection{42});
  const auto b = select_complement(inst, RandomizedSelection{42});
  CHECK(a.choices == b.choices);
  CHECK_FALSE(verify_selector(inst, a, expectation_bound(inst)));
  CHECK_THROWS_AS(select_complement(inst, RandomizedSelection{1, 5, 41}), RetryExhausted);
}

TEST_CASE("selector rejects overlapping sides") {
  CHECK_THROWS_AS(select_complement(SelectorInstance{3, {SidePair{{0, 1}, {1}}}}), InputError);
  CHECK_THROWS_AS(select_complement(SelectorInstance{3, {SidePair{{3}, {}}}}), InputError);
}
