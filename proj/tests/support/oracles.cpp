#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cospec::testing {

BiPoly generalized_charpoly_oracle(const Graph& g) {
  const int n = g.order();
  auto entry = [&](Vertex i, Vertex j) {
    if (i == j) return BiPoly::lambda() + BiPoly::constant(g.degree(i)) * BiPoly::r();
    return BiPoly::constant(g.has_edge(i, j) ? -1 : 0);
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BiPoly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    BiPoly term = BiPoly::constant(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * entry(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<int> dijkstra(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  using Item = std::pair<int, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (Vertex v : g.neighbors(u)) {
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (dv < 0 || d + 1 < dv) {
        dv = d + 1;
        queue.emplace(dv, v);
      }
    }
  }
  return dist;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

ExactMatrix random_integer_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> pick(lo, hi);
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
  }
  return m;
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

}  // namespace cospec::testing
