#pragma once

#include <cstddef>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// All-pairs hop distances of a graph.
class DistanceTable {
 public:
  static constexpr int kUnreachable = -1;

  DistanceTable() = default;
  DistanceTable(int order, std::vector<int> dist);

  int order() const noexcept { return order_; }
  int at(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
                 static_cast<std::size_t>(v)];
  }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
  bool connected() const noexcept { return connected_; }

  /// Sum of distances from v; requires a connected graph.
  long transmission(Vertex v) const;
  /// Largest finite distance; requires a connected graph.
  int diameter() const;

  bool operator==(const DistanceTable&) const = default;

 private:
  int order_ = 0;
  std::vector<int> dist_;
  bool connected_ = true;
};

/// BFS from every vertex.
DistanceTable all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// True iff g is connected and every vertex has the same transmission. A
/// disconnected graph is never transmission regular.
bool is_transmission_regular(const Graph& g);

}  // namespace cospec
