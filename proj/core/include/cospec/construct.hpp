#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cospec/cousins.hpp"
#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

/// Everything needed to build the swapped pair: base graph G, the swap sets,
/// the involution π, the glued graphs H1, H2 and their maps φᵢ: Hᵢ → Vᵢ.
struct SwapPlan {
  Graph base;
  std::vector<Vertex> v1;
  std::vector<Vertex> v2;
  SetSwap pi;
  Graph h1;
  Graph h2;
  VertexMap phi1;
  VertexMap phi2;
};

/// Throws InputError naming the first broken invariant: G[V1] or G[V2] not
/// empty, π not an automorphism of G[V1 ∪ V2], φᵢ not a bijection onto Vᵢ.
void validate_plan(const SwapPlan& plan);

/// G1 = G + φ1(E(H1)) + φ2(E(H2)); G2 = G + π(φ1(E(H1))) + π(φ2(E(H2))).
/// Validates the plan first.
std::pair<Graph, Graph> swap_construct(const SwapPlan& plan);

struct HypothesisReport {
  CousinClassification classification;
  bool g1_induced_regular = false;
  bool g1_induced_transmission_regular = false;
  std::set<MatrixKind> licensed;
};

/// Matrix kinds for which the plan's hypotheses guarantee cospectrality:
///   co-transmission                          -> distance Laplacian
///   cousins + G1[V1∪V2] transmission regular -> distance
///   co-degree                                -> Laplacian
///   co-degree + G1[V1∪V2] regular            -> signless, generalized,
///                                               normalized (no isolated vertex)
///   relaxed + G1[V1∪V2] regular              -> adjacency
/// Regularity is judged on G1[V1∪V2] as a graph in its own right.
HypothesisReport check_hypotheses(const SwapPlan& plan, const Graph& g1);

/// Whether S·M(G1)·S = M(G2) exactly, with both matrices taken in the vertex
/// order `swap_order` (2m vertices, V1 then reflected V2) followed by the
/// remaining vertices ascending. Generalized is checked on N(λ, r) for the
/// integer grid λ, r in 0..n; NormalizedLaplacian through the similar
/// random-walk Laplacian D⁻¹L.
bool verify_similarity(const Graph& g1, const Graph& g2, std::span<const Vertex> swap_order,
                       MatrixKind kind);

/// Distances with at least one endpoint outside V1 ∪ V2 agree in G1 and G2.
/// Throws PreconditionError if either graph is disconnected.
bool verify_distance_preservation(const Graph& g1, const Graph& g2, std::span<const Vertex> v1,
                                  std::span<const Vertex> v2);

/// π maps E(G1[V1∪V2]) onto E(G2[V1∪V2]).
bool verify_pi_isomorphism(const SwapPlan& plan, const Graph& g1, const Graph& g2);

}  // namespace cospec
