#include "cospec/graph.hpp"

#include <algorithm>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw InputError("graph order must be nonnegative");
  const auto n = static_cast<std::size_t>(order);
  adjacency_.assign(n * n, 0);
  degrees_.assign(n, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[index(u, v)] != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adjacency_[index(u, v)] != 0) {
    throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adjacency_[index(u, v)] = 1;
  adjacency_[index(v, u)] = 1;
  ++degrees_[static_cast<std::size_t>(u)];
  ++degrees_[static_cast<std::size_t>(v)];
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    throw InputError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} to remove");
  }
  adjacency_[index(u, v)] = 0;
  adjacency_[index(v, u)] = 0;
  --degrees_[static_cast<std::size_t>(u)];
  --degrees_[static_cast<std::size_t>(v)];
  --edge_count_;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return degrees_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degrees_[static_cast<std::size_t>(v)]));
  for (Vertex u = 0; u < order_; ++u) {
    if (adjacency_[index(v, u)] != 0) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (adjacency_[index(u, v)] != 0) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMap::VertexMap(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<Vertex> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) {
    throw InputError("vertex map has a negative image");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("vertex map is not injective");
  }
}

VertexMap VertexMap::identity(std::size_t m) {
  std::vector<Vertex> image(m);
  for (std::size_t i = 0; i < m; ++i) image[i] = static_cast<Vertex>(i);
  return VertexMap(std::move(image));
}

Vertex VertexMap::operator()(Vertex x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= image_.size()) {
    throw InputError("vertex " + std::to_string(x) + " outside the domain of the vertex map");
  }
  return image_[static_cast<std::size_t>(x)];
}

void VertexMap::check_into(const Graph& target) const {
  for (Vertex v : image_) {
    if (!target.contains(v)) {
      throw InputError("vertex map image " + std::to_string(v) + " is not a vertex of the target");
    }
  }
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  const VertexMap positions{std::vector<Vertex>(subset.begin(), subset.end())};
  positions.check_into(g);
  Graph out(static_cast<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.has_edge(subset[i], subset[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

std::vector<Edge> mapped_edges(const Graph& h, const VertexMap& phi) {
  if (phi.domain_size() != static_cast<std::size_t>(h.order())) {
    throw InputError("gluing map domain size " + std::to_string(phi.domain_size()) +
                     " does not match the glued graph order " + std::to_string(h.order()));
  }
  std::vector<Edge> out;
  out.reserve(h.size());
  for (const auto& [a, b] : h.edges()) out.emplace_back(phi(a), phi(b));
  return out;
}

Graph glue(const Graph& g, const Graph& h, const VertexMap& phi) {
  phi.check_into(g);
  Graph out = g;
  for (const auto& [u, v] : mapped_edges(h, phi)) out.add_edge(u, v);
  return out;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("relabeling must list every vertex exactly once");
  }
  const VertexMap map{std::vector<Vertex>(perm.begin(), perm.end())};
  map.check_into(g);
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(map(u), map(v));
  return out;
}

}  // namespace cospec
