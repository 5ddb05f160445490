#include "cospec/cousins.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

constexpr std::array<std::pair<CousinFlag, std::string_view>, 4> kFlagNames = {{
    {CousinFlag::Relaxed, "relaxed"},
    {CousinFlag::Cousins, "cousins"},
    {CousinFlag::CoDegree, "co-degree"},
    {CousinFlag::CoTransmission, "co-transmission"},
}};

std::string vname(Vertex v) { return std::to_string(v); }

void validate_sets(const Graph& g, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  if (v1.empty() || v2.empty()) throw InputError("cousin sets must be nonempty");
  if (v1.size() != v2.size()) {
    throw InputError("cousin sets differ in size (" + std::to_string(v1.size()) + " vs " +
                     std::to_string(v2.size()) + ")");
  }
  std::set<Vertex> seen;
  for (auto set : {v1, v2}) {
    for (Vertex v : set) {
      if (!g.contains(v)) throw InputError("vertex " + vname(v) + " is not in the graph");
      if (!seen.insert(v).second) {
        throw InputError("vertex " + vname(v) + " repeated or shared between the sets");
      }
    }
  }
}

std::vector<Vertex> outside(const Graph& g, std::span<const Vertex> v1,
                            std::span<const Vertex> v2) {
  std::vector<bool> inside(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : v1) inside[static_cast<std::size_t>(v)] = true;
  for (Vertex v : v2) inside[static_cast<std::size_t>(v)] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!inside[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

ConditionResult make_result(std::vector<std::string> witnesses) {
  ConditionResult r;
  r.verdict = witnesses.empty() ? Verdict::Holds : Verdict::Fails;
  r.witnesses = std::move(witnesses);
  return r;
}

ConditionResult not_evaluable(std::string why) {
  return {Verdict::NotEvaluable, {std::move(why)}};
}

// For each outside vertex x, f(s, x) must be constant over s in the set.
template <class F>
void uniform_over_set(std::span<const Vertex> set, const std::vector<Vertex>& rest, F f,
                      std::string_view what, std::vector<std::string>& witnesses) {
  for (Vertex x : rest) {
    for (std::size_t i = 1; i < set.size(); ++i) {
      if (f(set[i], x) != f(set[0], x)) {
        witnesses.push_back(std::string(what) + " of " + vname(set[0]) + " and " + vname(set[i]) +
                            " to " + vname(x) + " differ");
        break;
      }
    }
  }
}

}  // namespace

std::string_view name(CousinFlag flag) {
  for (const auto& [f, n] : kFlagNames) {
    if (f == flag) return n;
  }
  return "unknown";
}

std::optional<CousinFlag> parse_cousin_flag(std::string_view text) {
  for (const auto& [f, n] : kFlagNames) {
    if (n == text) return f;
  }
  if (text == "co_degree" || text == "codegree") return CousinFlag::CoDegree;
  if (text == "co_transmission" || text == "cotransmission") return CousinFlag::CoTransmission;
  return std::nullopt;
}

const ConditionResult& CousinClassification::flag(CousinFlag which) const {
  switch (which) {
    case CousinFlag::Relaxed: return relaxed;
    case CousinFlag::Cousins: return cousins;
    case CousinFlag::CoDegree: return co_degree;
    case CousinFlag::CoTransmission: return co_transmission;
  }
  return relaxed;
}

CousinClassification classify_pair(const Graph& g, std::span<const Vertex> v1,
                                   std::span<const Vertex> v2) {
  return classify_pair(g, all_pairs_distances(g), v1, v2);
}

CousinClassification classify_pair(const Graph& g, const DistanceTable& distances,
                                   std::span<const Vertex> v1, std::span<const Vertex> v2) {
  validate_sets(g, v1, v2);
  const auto rest = outside(g, v1, v2);
  CousinClassification out;
  out.m = v1.size();

  {
    std::vector<std::string> witnesses;
    auto adjacent = [&](Vertex s, Vertex x) { return g.has_edge(s, x); };
    uniform_over_set(v1, rest, adjacent, "adjacency", witnesses);
    uniform_over_set(v2, rest, adjacent, "adjacency", witnesses);
    out.relaxed = make_result(std::move(witnesses));
  }

  out.twin_sets = true;
  for (Vertex a : v1) {
    for (Vertex b : v2) {
      if (g.has_edge(a, b)) out.twin_sets = false;
    }
  }

  if (!out.relaxed.holds()) {
    out.co_degree = make_result({"sets are not relaxed cousins"});
  } else {
    auto external = [&](Vertex s, std::span<const Vertex> other) {
      int count = g.degree(s);
      for (Vertex o : other) count -= g.has_edge(s, o) ? 1 : 0;
      return count;
    };
    std::vector<std::string> witnesses;
    const int reference = external(v1[0], v2);
    for (Vertex u : v1) {
      if (external(u, v2) != reference) {
        witnesses.push_back("|N(" + vname(u) + ") \\ V2| = " + std::to_string(external(u, v2)) +
                            " differs from " + std::to_string(reference));
      }
    }
    for (Vertex w : v2) {
      if (external(w, v1) != reference) {
        witnesses.push_back("|N(" + vname(w) + ") \\ V1| = " + std::to_string(external(w, v1)) +
                            " differs from " + std::to_string(reference));
      }
    }
    out.co_degree = make_result(std::move(witnesses));
  }

  if (!distances.connected()) {
    out.cousins = not_evaluable("graph is disconnected; distances are not all finite");
    out.co_transmission = not_evaluable("graph is disconnected; distances are not all finite");
    return out;
  }

  {
    std::vector<std::string> witnesses;
    auto dist = [&](Vertex s, Vertex x) { return distances.at(s, x); };
    uniform_over_set(v1, rest, dist, "distances", witnesses);
    uniform_over_set(v2, rest, dist, "distances", witnesses);
    out.cousins = make_result(std::move(witnesses));
  }

  if (!out.cousins.holds()) {
    out.co_transmission = make_result({"sets are not cousins"});
  } else {
    auto external_sum = [&](Vertex s) {
      long sum = 0;
      for (Vertex x : rest) sum += distances.at(s, x);
      return sum;
    };
    std::vector<std::string> witnesses;
    const long reference = external_sum(v1[0]);
    for (auto set : {v1, v2}) {
      for (Vertex s : set) {
        if (external_sum(s) != reference) {
          witnesses.push_back("external transmission of " + vname(s) + " is " +
                              std::to_string(external_sum(s)) + ", expected " +
                              std::to_string(reference));
        }
      }
    }
    out.co_transmission = make_result(std::move(witnesses));
  }
  return out;
}

std::vector<CousinPair> enumerate_cousin_pairs(const Graph& g, std::size_t m, CousinFlag require) {
  if (m == 0) throw InputError("cousin set size must be positive");
  if (m > kMaxCousinSetSize || g.order() > kMaxCousinSearchOrder) {
    throw PreconditionError("cousin search is limited to m <= " +
                            std::to_string(kMaxCousinSetSize) + " and n <= " +
                            std::to_string(kMaxCousinSearchOrder));
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<CousinPair> out;
  if (2 * m > n) return out;

  // All m-subsets in lexicographic order.
  std::vector<std::vector<Vertex>> subsets;
  std::vector<Vertex> current(m);
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    subsets.push_back(current);
    std::size_t i = m;
    while (i > 0 && static_cast<std::size_t>(current[i - 1]) == n - m + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < m; ++j) current[j] = current[j - 1] + 1;
  }

  const auto distances = all_pairs_distances(g);
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      const auto& s1 = subsets[a];
      const auto& s2 = subsets[b];
      bool disjoint = true;
      for (Vertex v : s1) {
        if (std::binary_search(s2.begin(), s2.end(), v)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      if (classify_pair(g, distances, s1, s2).flag(require).holds()) out.push_back({s1, s2});
    }
  }
  return out;
}

SetSwap::SetSwap(std::span<const Vertex> v1, std::span<const Vertex> v2,
                 std::span<const Vertex> v1_images)
    : v1_(v1.begin(), v1.end()), v2_(v2.begin(), v2.end()) {
  if (v1.size() != v2.size() || v1_images.size() != v1.size()) {
    throw InputError("swap involution needs |V1| = |V2| and one image per V1 vertex");
  }
  std::set<Vertex> targets(v2.begin(), v2.end());
  for (std::size_t i = 0; i < v1.size(); ++i) {
    const Vertex image = v1_images[i];
    if (targets.erase(image) == 0) {
      throw InputError("swap image " + vname(image) + " is not an unused vertex of V2");
    }
    map_[v1[i]] = image;
    if (!map_.emplace(image, v1[i]).second) {
      throw InputError("vertex " + vname(image) + " lies in both V1 and V2");
    }
  }
}

SetSwap SetSwap::from_pairs(std::span<const Vertex> v1, std::span<const Vertex> v2,
                            std::span<const std::pair<Vertex, Vertex>> pairs) {
  const std::set<Vertex> in1(v1.begin(), v1.end());
  const std::set<Vertex> in2(v2.begin(), v2.end());
  std::map<Vertex, Vertex> forward;
  for (const auto& [x, y] : pairs) {
    const bool x1 = in1.count(x) > 0;
    const bool x2 = in2.count(x) > 0;
    const bool y1 = in1.count(y) > 0;
    const bool y2 = in2.count(y) > 0;
    if (!((x1 && y2) || (x2 && y1))) {
      throw InputError("pair (" + vname(x) + ", " + vname(y) +
                       ") does not swap a V1 vertex with a V2 vertex");
    }
    const Vertex from = x1 ? x : y;
    const Vertex to = x1 ? y : x;
    const auto [it, inserted] = forward.emplace(from, to);
    if (!inserted && it->second != to) {
      throw InputError("vertex " + vname(from) + " is mapped twice; not an involution");
    }
  }
  std::vector<Vertex> images;
  images.reserve(v1.size());
  for (Vertex v : v1) {
    const auto it = forward.find(v);
    if (it == forward.end()) throw InputError("swap involution leaves " + vname(v) + " unmapped");
    images.push_back(it->second);
  }
  return SetSwap(v1, v2, images);
}

Vertex SetSwap::operator()(Vertex x) const {
  const auto it = map_.find(x);
  return it == map_.end() ? x : it->second;
}

Edge SetSwap::operator()(const Edge& e) const { return {(*this)(e.first), (*this)(e.second)}; }

std::optional<VertexMap> find_involution(const Graph& g, std::span<const Vertex> v1,
                                         std::span<const Vertex> v2) {
  validate_sets(g, v1, v2);
  for (auto set : {v1, v2}) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (g.has_edge(set[i], set[j])) {
          throw PreconditionError("induced subgraph on a swap set has edge {" + vname(set[i]) +
                                  "," + vname(set[j]) + "}");
        }
      }
    }
  }
  const std::size_t m = v1.size();
  std::vector<Edge> cross;  // (position in v1, position in v2)
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (g.has_edge(v1[i], v2[j])) cross.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }

  // offset[i] = t means σ(v1[i]) = v2[m-1-t]; offset = identity is the
  // anti-diagonal pairing.
  std::vector<std::size_t> offset(m);
  std::iota(offset.begin(), offset.end(), 0);
  std::vector<std::size_t> target(m);
  std::vector<std::size_t> inverse(m);
  do {
    for (std::size_t i = 0; i < m; ++i) {
      target[i] = m - 1 - offset[i];
      inverse[target[i]] = i;
    }
    // π maps the cross edge (v1[i], v2[j]) to (v1[σ⁻¹(j)], v2[σ(i)]).
    const bool automorphism = std::all_of(cross.begin(), cross.end(), [&](const Edge& e) {
      const auto i = static_cast<std::size_t>(e.first);
      const auto j = static_cast<std::size_t>(e.second);
      return g.has_edge(v1[inverse[j]], v2[target[i]]);
    });
    if (automorphism) {
      std::vector<Vertex> image(m);
      for (std::size_t i = 0; i < m; ++i) image[i] = v2[target[i]];
      return VertexMap(std::move(image));
    }
  } while (std::next_permutation(offset.begin(), offset.end()));
  return std::nullopt;
}

std::vector<Vertex> canonical_swap_order(std::span<const Vertex> v1, std::span<const Vertex> v2,
                                         const SetSwap& pi) {
  const std::set<Vertex> a(v1.begin(), v1.end());
  const std::set<Vertex> b(v2.begin(), v2.end());
  if (a.size() != v1.size() || b.size() != v2.size() || a.size() != b.size()) {
    throw InputError("swap sets must be duplicate-free and of equal size");
  }
  std::vector<Vertex> order(v1.begin(), v1.end());
  std::set<Vertex> used;
  for (std::size_t k = v1.size(); k-- > 0;) {
    const Vertex image = pi(v1[k]);
    if (b.count(image) == 0 || !used.insert(image).second || pi(image) != v1[k]) {
      throw InputError("π is not a set-swapping involution on V1 ∪ V2");
    }
    order.push_back(image);
  }
  return order;
}

}  // namespace cospec
