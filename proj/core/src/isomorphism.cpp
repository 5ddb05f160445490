#include "cospec/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

using Colouring = std::vector<int>;

// Joint colour refinement: both graphs share one signature dictionary so that
// colour values are comparable across them.
std::pair<Colouring, Colouring> refine(const Graph& a, const Graph& b) {
  const auto n = static_cast<std::size_t>(a.order());
  Colouring ca(n);
  Colouring cb(n);
  for (Vertex v = 0; v < a.order(); ++v) {
    ca[static_cast<std::size_t>(v)] = a.degree(v);
    cb[static_cast<std::size_t>(v)] = b.degree(v);
  }
  auto classes = [](const Colouring& c) {
    Colouring sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  };
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> dictionary;
    auto step = [&](const Graph& g, const Colouring& c) {
      Colouring next(n);
      for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> signature{c[static_cast<std::size_t>(v)]};
        for (Vertex w : g.neighbors(v)) signature.push_back(c[static_cast<std::size_t>(w)]);
        std::sort(signature.begin() + 1, signature.end());
        const auto [it, inserted] =
            dictionary.emplace(std::move(signature), static_cast<int>(dictionary.size()));
        next[static_cast<std::size_t>(v)] = it->second;
      }
      return next;
    };
    Colouring na = step(a, ca);
    Colouring nb = step(b, cb);
    const bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Colouring ca, Colouring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const auto n = static_cast<std::size_t>(a.order());
    map_.assign(n, -1);
    used_.assign(n, false);
    // Rarest colours first, then vertices adjacent to already-ordered ones.
    std::map<int, int> frequency;
    for (int c : ca_) ++frequency[c];
    std::vector<bool> placed(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      Vertex best = -1;
      std::pair<int, int> best_key{};
      for (Vertex v = 0; v < a.order(); ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (Vertex w : order_) links += a.has_edge(v, w) ? 1 : 0;
        const std::pair<int, int> key{-links, frequency[ca_[static_cast<std::size_t>(v)]]};
        if (best < 0 || key.second < best_key.second ||
            (key.second == best_key.second && key.first < best_key.first)) {
          best = v;
          best_key = key;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex t = 0; t < b_.order(); ++t) {
      if (used_[static_cast<std::size_t>(t)]) continue;
      if (cb_[static_cast<std::size_t>(t)] != ca_[static_cast<std::size_t>(v)]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex u = order_[k];
        consistent = a_.has_edge(u, v) == b_.has_edge(map_[static_cast<std::size_t>(u)], t);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(v)] = t;
      used_[static_cast<std::size_t>(t)] = true;
      if (search(depth + 1)) return true;
      used_[static_cast<std::size_t>(t)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const std::vector<Vertex>& mapping() const { return map_; }

 private:
  const Graph& a_;
  const Graph& b_;
  Colouring ca_;
  Colouring cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  const int largest = std::max(a.order(), b.order());
  if (largest > kMaxIsomorphismOrder) {
    throw PreconditionError("isomorphism search is limited to order " +
                            std::to_string(kMaxIsomorphismOrder) + ", got " +
                            std::to_string(largest));
  }
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;

  auto [ca, cb] = refine(a, b);
  Colouring ha = ca;
  Colouring hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;

  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.search(0)) return std::nullopt;
  return matcher.mapping();
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace cospec
