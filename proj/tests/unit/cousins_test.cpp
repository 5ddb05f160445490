#include <doctest.h>

#include <algorithm>
#include <set>

#include "cospec/cousins.hpp"
#include "cospec/distance.hpp"
#include "cospec/errors.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cospec;
using namespace cospec::testing;

namespace {

// Sum of distances from v to every vertex outside both sets, by BFS.
long external_transmission(const Graph& g, Vertex v, const std::set<Vertex>& excluded) {
  const auto d = dijkstra(g, v);
  long sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!excluded.contains(u)) sum += d[static_cast<std::size_t>(u)];
  }
  return sum;
}

}  // namespace

TEST_CASE("classification of the fixtures") {
  const auto cotrans = load_plan("cotransmission_k2.plan");
  const auto c = classify_pair(cotrans.base, cotrans.v1, cotrans.v2);
  CHECK(c.co_transmission.holds());
  CHECK(c.cousins.holds());
  CHECK(c.relaxed.holds());
  CHECK(c.co_transmission.witnesses.empty());

  const auto twins = load_plan("twin_path.plan");
  const auto t = classify_pair(twins.base, twins.v1, twins.v2);
  CHECK(t.co_degree.holds());
  CHECK(t.twin_sets);
  CHECK_FALSE(t.co_transmission.holds());
  CHECK_FALSE(t.co_transmission.witnesses.empty());
}

TEST_CASE("twin sets with unequal external transmission") {
  // Twins {1,2} hang off 0 and twins {3,4} off 5, along the path 7-0-6-5.
  // The extra vertex 7 sits next to 0, so external transmissions are 8 and 10.
  Graph g(8);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {0, 6}, {6, 5}, {5, 3}, {5, 4}, {0, 7}}) g.add_edge(u, v);
  const std::vector<Vertex> v1{1, 2}, v2{3, 4};
  const auto c = classify_pair(g, v1, v2);
  CHECK(c.cousins.holds());
  CHECK(c.twin_sets);
  const std::set<Vertex> excluded{1, 2, 3, 4};
  CHECK(external_transmission(g, 1, excluded) == 8);
  CHECK(external_transmission(g, 3, excluded) == 10);
  CHECK_FALSE(c.co_transmission.holds());
}

TEST_CASE("classification input errors") {
  const Graph g = cycle_graph(6);
  CHECK_THROWS_AS(classify_pair(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 2}), InputError);
  CHECK_THROWS_AS(classify_pair(g, std::vector<Vertex>{0}, std::vector<Vertex>{1, 2}), InputError);
  CHECK_THROWS_AS(classify_pair(g, std::vector<Vertex>{}, std::vector<Vertex>{}), InputError);
  CHECK_THROWS_AS(classify_pair(g, std::vector<Vertex>{0}, std::vector<Vertex>{9}), InputError);
  CHECK_THROWS_AS(classify_pair(g, std::vector<Vertex>{0, 0}, std::vector<Vertex>{2, 3}), InputError);

  const Graph split = disjoint_union(complete_graph(3), complete_graph(3));
  const auto c = classify_pair(split, std::vector<Vertex>{0}, std::vector<Vertex>{3});
  CHECK(c.cousins.verdict == Verdict::NotEvaluable);
  CHECK(c.co_transmission.verdict == Verdict::NotEvaluable);
  CHECK_FALSE(c.cousins.witnesses.empty());
}

TEST_CASE("classification is symmetric and respects the implications") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_only(graphs_up_to_isomorphism(n))) {
      const auto distances = all_pairs_distances(g);
      for (std::size_t m = 1; m <= 2; ++m) {
        // All ordered pairs of disjoint sorted m-subsets.
        std::vector<std::vector<Vertex>> subsets;
        for (Vertex x = 0; x < n; ++x) {
          if (m == 1) {
            subsets.push_back({x});
          } else {
            for (Vertex y = x + 1; y < n; ++y) subsets.push_back({x, y});
          }
        }
        for (const auto& s1 : subsets) {
          for (const auto& s2 : subsets) {
            if (std::find_first_of(s1.begin(), s1.end(), s2.begin(), s2.end()) != s1.end()) continue;
            const auto c = classify_pair(g, distances, s1, s2);
            const auto r = classify_pair(g, distances, s2, s1);
            CHECK(c.relaxed.holds() == r.relaxed.holds());
            CHECK(c.cousins.holds() == r.cousins.holds());
            CHECK(c.co_degree.holds() == r.co_degree.holds());
            CHECK(c.co_transmission.holds() == r.co_transmission.holds());
            if (c.co_transmission.holds()) CHECK(c.cousins.holds());
            if (c.cousins.holds()) CHECK(c.relaxed.holds());
            if (c.co_degree.holds()) CHECK(c.relaxed.holds());
            for (const auto* flag : {&c.relaxed, &c.cousins, &c.co_degree, &c.co_transmission}) {
              CHECK(flag->witnesses.empty() == flag->holds());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  const auto cotrans = load_plan("cotransmission_k2.plan");
  const auto found = enumerate_cousin_pairs(cotrans.base, 2, CousinFlag::CoTransmission);
  CHECK(std::find(found.begin(), found.end(), CousinPair{{2, 3}, {4, 5}}) != found.end());

  const auto k5 = enumerate_cousin_pairs(complete_graph(5), 1, CousinFlag::Relaxed);
  CHECK(k5.size() == 10);

  const auto empty = enumerate_cousin_pairs(Graph(4), 2, CousinFlag::CoDegree);
  CHECK(empty == std::vector<CousinPair>{{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});

  const auto k4 = enumerate_cousin_pairs(complete_graph(4), 2, CousinFlag::CoTransmission);
  CHECK(k4.size() == 3);

  CHECK_THROWS_AS(enumerate_cousin_pairs(Graph(17), 1, CousinFlag::Relaxed), PreconditionError);
  CHECK_THROWS_AS(enumerate_cousin_pairs(Graph(12), 6, CousinFlag::Relaxed), PreconditionError);
  CHECK_THROWS_AS(enumerate_cousin_pairs(Graph(4), 0, CousinFlag::Relaxed), InputError);

  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 8, 0.5);
    const auto pairs = enumerate_cousin_pairs(g, 2, CousinFlag::Relaxed);
    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;
    for (const auto& p : pairs) {
      CHECK(p.first < p.second);
      CHECK(seen.emplace(p.first, p.second).second);
      // Swapping the roles gives the same unordered pair, which is relaxed too.
      CHECK(classify_pair(g, p.second, p.first).relaxed.holds());
    }
    CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](const CousinPair& a, const CousinPair& b) {
      return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    }));
  }
}

TEST_CASE("set swaps") {
  const std::vector<Vertex> v1{0, 1}, v2{2, 3};
  const SetSwap pi(v1, v2, std::vector<Vertex>{3, 2});
  CHECK(pi(0) == 3);
  CHECK(pi(3) == 0);
  CHECK(pi(7) == 7);
  CHECK(pi(Edge{0, 1}) == Edge{3, 2});
  CHECK_THROWS_AS(SetSwap(v1, v2, std::vector<Vertex>{2, 2}), InputError);
  CHECK_THROWS_AS(SetSwap(v1, v2, std::vector<Vertex>{2, 5}), InputError);
  const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 3}, {2, 1}};
  CHECK(SetSwap::from_pairs(v1, v2, pairs) == pi);
  const std::vector<std::pair<Vertex, Vertex>> bad{{0, 1}};
  CHECK_THROWS_AS(SetSwap::from_pairs(v1, v2, bad), InputError);
  const std::vector<std::pair<Vertex, Vertex>> partial{{0, 3}};
  CHECK_THROWS_AS(SetSwap::from_pairs(v1, v2, partial), InputError);
}

TEST_CASE("involution search") {
  // v_{1,j} -> v_{2,5-j} on the paw-swap base.
  const auto paw = load_plan("paw_swap.plan");
  const auto sigma = find_involution(paw.base, paw.v1, paw.v2);
  REQUIRE(sigma.has_value());
  CHECK(sigma->image() == std::vector<Vertex>{9, 8, 7, 6});

  // No edges at all: the first candidate is returned.
  const std::vector<Vertex> v1{0, 1, 2}, v2{3, 4, 5};
  CHECK(find_involution(Graph(6), v1, v2)->image() == std::vector<Vertex>{5, 4, 3});
  // Complete bipartite between the sets: every bijection works.
  Graph kmm(6);
  for (Vertex a : v1) {
    for (Vertex b : v2) kmm.add_edge(a, b);
  }
  CHECK(find_involution(kmm, v1, v2)->image() == std::vector<Vertex>{5, 4, 3});
  // A single edge 0-3 forces 0 <-> 3.
  Graph single(6);
  single.add_edge(0, 3);
  CHECK(find_involution(single, v1, v2)->image()[0] == 3);
  // Degrees (2,0,0) on V1 against (1,1,0) on V2: no swap can preserve them.
  Graph lopsided(6);
  lopsided.add_edge(0, 3);
  lopsided.add_edge(0, 4);
  CHECK_FALSE(find_involution(lopsided, v1, v2).has_value());
  Graph inside(6);
  inside.add_edge(0, 1);
  CHECK_THROWS_AS(find_involution(inside, v1, v2), PreconditionError);

  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 8, 0.4);
    Graph h = g;
    for (auto set : {std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{3, 4, 5}}) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          if (h.has_edge(set[i], set[j])) h.remove_edge(set[i], set[j]);
        }
      }
    }
    const auto found = find_involution(h, v1, v2);
    if (!found) continue;
    const SetSwap pi(v1, v2, found->image());
    for (Vertex v = 0; v < 6; ++v) CHECK(pi(pi(v)) == v);
    for (Vertex a = 0; a < 6; ++a) {
      for (Vertex b = a + 1; b < 6; ++b) CHECK(h.has_edge(a, b) == h.has_edge(pi(a), pi(b)));
    }
  }
}

TEST_CASE("canonical swap order") {
  const std::vector<Vertex> one1{4}, one2{9};
  const SetSwap single(one1, one2, one2);
  CHECK(canonical_swap_order(one1, one2, single) == std::vector<Vertex>{4, 9});

  const auto paw = load_plan("paw_swap.plan");
  const auto order = canonical_swap_order(paw.v1, paw.v2, paw.pi);
  std::vector<Vertex> printed = paw.v1;
  printed.insert(printed.end(), paw.v2.begin(), paw.v2.end());
  CHECK(order == printed);

  // i -> 2m-1-i applied twice is the identity, and it realizes π on the order.
  const std::size_t len = order.size();
  for (std::size_t i = 0; i < len; ++i) {
    CHECK(len - 1 - (len - 1 - i) == i);
    CHECK(paw.pi(order[i]) == order[len - 1 - i]);
  }
  const std::vector<Vertex> short_v2{6, 7, 8};
  CHECK_THROWS_AS(canonical_swap_order(paw.v1, short_v2, paw.pi), InputError);
  const std::vector<Vertex> wrong_v2{6, 7, 8, 10};
  CHECK_THROWS_AS(canonical_swap_order(paw.v1, wrong_v2, paw.pi), InputError);
}
