#include "cospec/construct.hpp"

#include <algorithm>
#include <string>

#include "cospec/distance.hpp"
#include "cospec/errors.hpp"

namespace cospec {
namespace {

std::vector<Vertex> concat(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_bijection_onto(const VertexMap& phi, const Graph& h, std::span<const Vertex> target,
                          const char* label) {
  if (phi.domain_size() != static_cast<std::size_t>(h.order()) || phi.domain_size() != target.size()) {
    throw InputError(std::string(label) + " must map all " + std::to_string(h.order()) +
                     " vertices of its graph onto a set of size " + std::to_string(target.size()));
  }
  std::vector<Vertex> image = phi.image();
  std::vector<Vertex> expected(target.begin(), target.end());
  std::sort(image.begin(), image.end());
  std::sort(expected.begin(), expected.end());
  if (image != expected) throw InputError(std::string(label) + " is not a bijection onto its swap set");
}

std::vector<std::size_t> full_ordering(int n, std::span<const Vertex> swap_order) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::size_t> order;
  for (Vertex v : swap_order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("swap ordering is not a list of distinct vertices");
    }
    seen[static_cast<std::size_t>(v)] = true;
    order.push_back(static_cast<std::size_t>(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) order.push_back(static_cast<std::size_t>(v));
  }
  return order;
}

}  // namespace

void validate_plan(const SwapPlan& plan) {
  const Graph& g = plan.base;
  const std::size_t m = plan.v1.size();
  if (m == 0 || plan.v2.size() != m) throw InputError("V1 and V2 must be nonempty and equal in size");
  for (auto set : {std::span<const Vertex>(plan.v1), std::span<const Vertex>(plan.v2)}) {
    for (Vertex v : set) {
      if (!g.contains(v)) throw InputError("swap vertex " + std::to_string(v) + " is not in the base graph");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (g.has_edge(set[i], set[j])) {
          throw InputError("base graph has edge {" + std::to_string(set[i]) + "," +
                           std::to_string(set[j]) + "} inside a swap set");
        }
      }
    }
  }
  if (plan.pi.v1() != plan.v1 || plan.pi.v2() != plan.v2) {
    throw InputError("π was built for different swap sets");
  }
  const auto both = concat(plan.v1, plan.v2);
  for (std::size_t i = 0; i < both.size(); ++i) {
    for (std::size_t j = i + 1; j < both.size(); ++j) {
      if (g.has_edge(both[i], both[j]) != g.has_edge(plan.pi(both[i]), plan.pi(both[j]))) {
        throw InputError("π is not an automorphism of G[V1 ∪ V2]: {" + std::to_string(both[i]) +
                         "," + std::to_string(both[j]) + "}");
      }
    }
  }
  check_bijection_onto(plan.phi1, plan.h1, plan.v1, "φ1");
  check_bijection_onto(plan.phi2, plan.h2, plan.v2, "φ2");
}

std::pair<Graph, Graph> swap_construct(const SwapPlan& plan) {
  validate_plan(plan);
  Graph g1 = glue(glue(plan.base, plan.h1, plan.phi1), plan.h2, plan.phi2);
  Graph g2 = plan.base;
  auto add_swapped = [&](const Graph& h, const VertexMap& phi) {
    for (const auto& e : mapped_edges(h, phi)) {
      const auto [u, v] = plan.pi(e);
      g2.add_edge(u, v);
    }
  };
  add_swapped(plan.h1, plan.phi1);
  add_swapped(plan.h2, plan.phi2);
  return {std::move(g1), std::move(g2)};
}

HypothesisReport check_hypotheses(const SwapPlan& plan, const Graph& g1) {
  HypothesisReport report;
  report.classification = classify_pair(plan.base, plan.v1, plan.v2);
  const Graph induced = induced_subgraph(g1, concat(plan.v1, plan.v2));
  report.g1_induced_regular = is_regular(induced);
  report.g1_induced_transmission_regular = is_transmission_regular(induced);

  const auto& c = report.classification;
  if (c.co_transmission.holds()) report.licensed.insert(MatrixKind::DistanceLaplacian);
  if (c.cousins.holds() && report.g1_induced_transmission_regular) {
    report.licensed.insert(MatrixKind::Distance);
  }
  if (c.co_degree.holds()) {
    report.licensed.insert(MatrixKind::Laplacian);
    if (report.g1_induced_regular) {
      report.licensed.insert(MatrixKind::SignlessLaplacian);
      report.licensed.insert(MatrixKind::Generalized);
      if (!has_isolated_vertex(g1)) report.licensed.insert(MatrixKind::NormalizedLaplacian);
    }
  }
  if (c.relaxed.holds() && report.g1_induced_regular) report.licensed.insert(MatrixKind::Adjacency);
  return report;
}

bool verify_similarity(const Graph& g1, const Graph& g2, std::span<const Vertex> swap_order,
                       MatrixKind kind) {
  if (g1.order() != g2.order()) throw InputError("similarity check needs equal orders");
  if (swap_order.empty() || swap_order.size() % 2 != 0) {
    throw InputError("swap ordering must list 2m vertices");
  }
  const auto ordering = full_ordering(g1.order(), swap_order);
  const ExactMatrix s = swap_similarity(swap_order.size() / 2, static_cast<std::size_t>(g1.order()));
  if (s * s != ExactMatrix::identity(s.order())) return false;
  auto conjugates = [&](const ExactMatrix& m1, const ExactMatrix& m2) {
    return s * m1.permuted(ordering) * s == m2.permuted(ordering);
  };

  switch (kind) {
    case MatrixKind::Generalized: {
      const int n = g1.order();
      for (int lambda = 0; lambda <= n; ++lambda) {
        for (int r = 0; r <= n; ++r) {
          if (!conjugates(generalized_matrix(g1, lambda, r), generalized_matrix(g2, lambda, r))) {
            return false;
          }
        }
      }
      return true;
    }
    case MatrixKind::NormalizedLaplacian:
      return conjugates(random_walk_laplacian(g1), random_walk_laplacian(g2));
    default:
      return conjugates(build_matrix(g1, kind), build_matrix(g2, kind));
  }
}

bool verify_distance_preservation(const Graph& g1, const Graph& g2, std::span<const Vertex> v1,
                                  std::span<const Vertex> v2) {
  if (g1.order() != g2.order()) throw InputError("distance comparison needs equal orders");
  const auto d1 = all_pairs_distances(g1);
  const auto d2 = all_pairs_distances(g2);
  if (!d1.connected() || !d2.connected()) {
    throw PreconditionError("distance preservation needs connected graphs");
  }
  std::vector<bool> swapped(static_cast<std::size_t>(g1.order()), false);
  for (auto set : {v1, v2}) {
    for (Vertex v : set) swapped.at(static_cast<std::size_t>(v)) = true;
  }
  for (Vertex u = 0; u < g1.order(); ++u) {
    if (swapped[static_cast<std::size_t>(u)]) continue;
    for (Vertex v = 0; v < g1.order(); ++v) {
      if (d1.at(u, v) != d2.at(u, v)) return false;
    }
  }
  return true;
}

bool verify_pi_isomorphism(const SwapPlan& plan, const Graph& g1, const Graph& g2) {
  const auto both = concat(plan.v1, plan.v2);
  for (std::size_t i = 0; i < both.size(); ++i) {
    for (std::size_t j = i + 1; j < both.size(); ++j) {
      if (g1.has_edge(both[i], both[j]) != g2.has_edge(plan.pi(both[i]), plan.pi(both[j]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cospec
