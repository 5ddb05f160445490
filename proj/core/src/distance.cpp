#include "cospec/distance.hpp"

#include <algorithm>
#include <queue>

#include "cospec/errors.hpp"

namespace cospec {

DistanceTable::DistanceTable(int order, std::vector<int> dist)
    : order_(order), dist_(std::move(dist)) {
  connected_ = std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

long DistanceTable::transmission(Vertex v) const {
  if (!connected_) throw PreconditionError("transmission is undefined on a disconnected graph");
  long sum = 0;
  for (Vertex u = 0; u < order_; ++u) sum += at(v, u);
  return sum;
}

int DistanceTable::diameter() const {
  if (!connected_) throw PreconditionError("diameter is undefined on a disconnected graph");
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Vertex>> adj(un);
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  std::vector<int> dist(un * un, DistanceTable::kUnreachable);
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    int* row = dist.data() + static_cast<std::size_t>(s) * un;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (row[w] == DistanceTable::kUnreachable) {
          row[w] = row[v] + 1;
          frontier.push(w);
        }
      }
    }
  }
  return DistanceTable(n, std::move(dist));
}

bool is_connected(const Graph& g) { return all_pairs_distances(g).connected(); }

bool is_transmission_regular(const Graph& g) {
  const auto table = all_pairs_distances(g);
  if (!table.connected()) return false;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (table.transmission(v) != table.transmission(0)) return false;
  }
  return true;
}

}  // namespace cospec
