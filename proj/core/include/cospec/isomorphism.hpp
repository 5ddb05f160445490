#pragma once

#include <optional>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Largest order accepted by the exhaustive isomorphism search.
inline constexpr int kMaxIsomorphismOrder = 16;

/// Exhaustive backtracking with colour-refinement pruning. Returns a bijection
/// `map` with {u,v} in E(a) iff {map[u], map[v]} in E(b), or nullopt.
/// Throws PreconditionError above kMaxIsomorphismOrder.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace cospec
