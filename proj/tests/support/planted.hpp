#pragma once

#include "cospec/construct.hpp"
#include "oracles.hpp"

namespace cospec::testing {

enum class PlantedMode {
  /// Random bipartite block, random H1 != H2, independent attachments.
  Generic,
  /// Generic, but the whole base graph has an automorphism extending π, which
  /// makes the sets co-transmission cousins and G1 isomorphic to G2.
  Mirrored,
  /// m = 4 with regular H1 != H2 and a regular bipartite block, so that
  /// G1[V1 ∪ V2] is regular.
  Regular,
  /// Regular and Mirrored together.
  RegularMirrored,
};

struct PlantedPlan {
  SwapPlan plan;
  PlantedMode mode = PlantedMode::Generic;
};

/// A valid swap plan on at most 14 vertices with |V1| = |V2| in {2, 3, 4} and
/// H1 != H2. Each outside vertex is adjacent to all or none of V1 and to all
/// or none of V2, so the sets are always relaxed cousins; the other flags
/// depend on the draw. Vertices are shuffled at the end.
PlantedPlan random_planted_plan(Rng& rng, PlantedMode mode);

}  // namespace cospec::testing
