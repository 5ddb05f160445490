#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the vertices 0..order()-1.
///
/// Vertex identifiers are significant: matrix rows follow them, and every
/// relabeling in the library is explicit.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Throws InputError on a self-loop, duplicate edge or out-of-range endpoint.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order_; }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v);
  }
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<int> degrees_;
};

/// Injective map from the positions 0..m-1 of a source vertex list into the
/// vertices of a target graph.
class VertexMap {
 public:
  VertexMap() = default;
  /// Throws InputError if the image has repeated or negative entries.
  explicit VertexMap(std::vector<Vertex> image);

  static VertexMap identity(std::size_t m);

  std::size_t domain_size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex x) const;
  const std::vector<Vertex>& image() const noexcept { return image_; }

  /// Throws InputError unless every image vertex is a vertex of `target`.
  void check_into(const Graph& target) const;

  bool operator==(const VertexMap&) const = default;

 private:
  std::vector<Vertex> image_;
};

/// Graph on |subset| vertices, relabeled by position in `subset`.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// `g` plus the edges of `h` mapped through `phi`. Gluing onto an existing
/// edge is an error, so |E| always grows by |E(h)|.
Graph glue(const Graph& g, const Graph& h, const VertexMap& phi);

/// Edges of `h` mapped through `phi` (no validation against a target graph).
std::vector<Edge> mapped_edges(const Graph& h, const VertexMap& phi);

bool is_regular(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace cospec
