#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cospec/distance.hpp"
#include "cospec/graph.hpp"

namespace cospec {

enum class Verdict { Holds, Fails, NotEvaluable };

struct ConditionResult {
  Verdict verdict = Verdict::Fails;
  /// Violated conditions; nonempty exactly when the verdict is not Holds.
  std::vector<std::string> witnesses;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
};

enum class CousinFlag { Relaxed, Cousins, CoDegree, CoTransmission };

/// relaxed, cousins, co-degree, co-transmission
std::string_view name(CousinFlag flag);
std::optional<CousinFlag> parse_cousin_flag(std::string_view text);

/// Which cousin definitions a disjoint pair (V1, V2) of equal-size sets meets.
///
/// relaxed: every outside vertex is adjacent to all or none of V1, and to all
///   or none of V2.
/// cousins: every outside vertex is equidistant from all of V1, and from all
///   of V2.
/// co-degree: relaxed, and |N(u) \ V2| = |N(w) \ V1| for all u in V1, w in V2.
/// co-transmission: cousins, and the distance sums to outside vertices agree
///   across V1 and V2.
struct CousinClassification {
  std::size_t m = 0;
  ConditionResult relaxed;
  ConditionResult cousins;
  ConditionResult co_degree;
  ConditionResult co_transmission;
  /// No edges between V1 and V2, so each set consists of isolated twins
  /// whenever the pair is relaxed.
  bool twin_sets = false;

  const ConditionResult& flag(CousinFlag which) const;
};

/// Throws InputError when the sets overlap, differ in size, are empty, repeat
/// a vertex, or name a vertex outside the graph. Distance-based flags are
/// NotEvaluable on a disconnected graph.
CousinClassification classify_pair(const Graph& g, std::span<const Vertex> v1,
                                   std::span<const Vertex> v2);
/// Same, reusing precomputed distances of `g`.
CousinClassification classify_pair(const Graph& g, const DistanceTable& distances,
                                   std::span<const Vertex> v1, std::span<const Vertex> v2);

struct CousinPair {
  std::vector<Vertex> first;
  std::vector<Vertex> second;

  bool operator==(const CousinPair&) const = default;
};

inline constexpr std::size_t kMaxCousinSetSize = 5;
inline constexpr int kMaxCousinSearchOrder = 16;

/// Every unordered pair of disjoint sorted m-subsets meeting `require`, listed
/// once with first < second, in lexicographic order. Throws PreconditionError
/// past the m <= 5, n <= 16 guard and InputError for m = 0.
std::vector<CousinPair> enumerate_cousin_pairs(const Graph& g, std::size_t m, CousinFlag require);

/// A set-swapping involution π of V1 ∪ V2: π(V1) = V2, π(V2) = V1, π² = id.
/// Identity outside V1 ∪ V2.
class SetSwap {
 public:
  SetSwap() = default;
  /// π(v1[i]) = v1_images[i]. Throws InputError unless this describes a
  /// bijection V1 → V2.
  SetSwap(std::span<const Vertex> v1, std::span<const Vertex> v2,
          std::span<const Vertex> v1_images);
  /// From explicit (x, π(x)) pairs; each pair also fixes π(π(x)) = x. Throws
  /// InputError unless the pairs define a set-swapping involution.
  static SetSwap from_pairs(std::span<const Vertex> v1, std::span<const Vertex> v2,
                            std::span<const std::pair<Vertex, Vertex>> pairs);

  Vertex operator()(Vertex x) const;
  Edge operator()(const Edge& e) const;
  const std::vector<Vertex>& v1() const noexcept { return v1_; }
  const std::vector<Vertex>& v2() const noexcept { return v2_; }
  std::size_t half_size() const noexcept { return v1_.size(); }

  bool operator==(const SetSwap&) const = default;

 private:
  std::vector<Vertex> v1_;
  std::vector<Vertex> v2_;
  std::map<Vertex, Vertex> map_;
};

/// First bijection σ: V1 → V2 whose swap is an automorphism of G[V1 ∪ V2].
/// Candidates are visited lexicographically relative to the anti-diagonal
/// pairing: the first candidate sends v1[i] to v2[m-1-i]. Throws
/// PreconditionError when G[V1] or G[V2] has an edge.
std::optional<VertexMap> find_involution(const Graph& g, std::span<const Vertex> v1,
                                         std::span<const Vertex> v2);

/// [v1[0..m-1], π(v1[m-1]), ..., π(v1[0])]: V2 relabeled so that
/// π(v_{1,i}) = v_{2,m-i+1}, which makes π the anti-diagonal reflection of the
/// leading 2m block.
std::vector<Vertex> canonical_swap_order(std::span<const Vertex> v1, std::span<const Vertex> v2,
                                         const SetSwap& pi);

}  // namespace cospec
