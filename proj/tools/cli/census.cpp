#include "census.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "cospec/construct.hpp"
#include "cospec/cousins.hpp"
#include "cospec/distance.hpp"
#include "cospec/errors.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/isomorphism.hpp"

namespace cospec::cli {
namespace {

struct Accepted {
  std::string graph6;
  Graph graph;
  std::string key;
};

// Next m-subset of 0..n-1 in lexicographic order; false when exhausted.
bool next_subset(std::vector<Vertex>& s, int n) {
  const int m = static_cast<int>(s.size());
  int i = m - 1;
  while (i >= 0 && s[static_cast<std::size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  ++s[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<Vertex> first_subset(std::size_t m) {
  std::vector<Vertex> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = static_cast<Vertex>(i);
  return s;
}

// Every σ: V1 → V2 whose swap preserves E(g[V1 ∪ V2]).
std::vector<std::vector<Vertex>> all_involutions(const Graph& g, const std::vector<Vertex>& v1,
                                                 const std::vector<Vertex>& v2) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> images = v2;
  std::sort(images.begin(), images.end());
  do {
    const SetSwap pi(v1, v2, images);
    bool ok = true;
    for (std::size_t i = 0; ok && i < v1.size(); ++i) {
      for (std::size_t j = 0; ok && j < v2.size(); ++j) {
        ok = g.has_edge(v1[i], v2[j]) == g.has_edge(pi(v1[i]), pi(v2[j]));
      }
    }
    if (ok) out.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Graph strip_inside(const Graph& g, const std::vector<Vertex>& set) {
  Graph out = g;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (out.has_edge(set[i], set[j])) out.remove_edge(set[i], set[j]);
    }
  }
  return out;
}

}  // namespace

bool swap_certificate(const Graph& x, const Graph& y, MatrixKind kind, std::size_t max_m) {
  const int n = x.order();
  if (n != y.order() || n > kMaxExplainOrder) return false;
  max_m = std::min(max_m, kMaxExplainSetSize);
  for (std::size_t m = 2; m <= max_m && 2 * m <= static_cast<std::size_t>(n); ++m) {
    for (auto v1 = first_subset(m);; ) {
      for (auto v2 = first_subset(m);; ) {
        const bool disjoint = std::none_of(v2.begin(), v2.end(), [&](Vertex v) {
          return std::find(v1.begin(), v1.end(), v) != v1.end();
        });
        // Each unordered pair once, and only pairs where something moves.
        if (disjoint && v1.front() < v2.front()) {
          SwapPlan plan;
          plan.base = strip_inside(strip_inside(x, v1), v2);
          plan.v1 = v1;
          plan.v2 = v2;
          plan.h1 = induced_subgraph(x, v1);
          plan.h2 = induced_subgraph(x, v2);
          plan.phi1 = VertexMap(v1);
          plan.phi2 = VertexMap(v2);
          // x itself plays G1, so the licence does not depend on π.
          if (plan.h1.size() + plan.h2.size() > 0 &&
              check_hypotheses(plan, x).licensed.contains(kind)) {
            for (const auto& images : all_involutions(plan.base, v1, v2)) {
              plan.pi = SetSwap(v1, v2, images);
              if (is_isomorphic(swap_construct(plan).second, y)) return true;
            }
          }
        }
        if (!next_subset(v2, n)) break;
      }
      if (!next_subset(v1, n)) break;
    }
  }
  return false;
}

CensusResult run_census(std::istream& in, const CensusOptions& options) {
  CensusResult result;
  auto& summary = result.summary;
  summary.explain = options.explain;
  std::vector<Accepted> accepted;

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    ++summary.lines;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& e) {
      ++summary.parse_errors;
      result.diagnostics.push_back("line " + std::to_string(number) + ": " + e.what());
      continue;
    }
    if (g.order() > options.max_n) {
      ++summary.oversize;
      result.diagnostics.push_back("line " + std::to_string(number) + ": order " +
                                   std::to_string(g.order()) + " exceeds --max-n");
      continue;
    }
    if (is_distance_kind(options.kind) && !is_connected(g)) {
      ++summary.disconnected_skipped;
      continue;
    }
    if (options.kind == MatrixKind::NormalizedLaplacian && has_isolated_vertex(g)) {
      ++summary.isolated_skipped;
      continue;
    }
    accepted.push_back({line, std::move(g), {}});
  }

  // Keys are independent per graph; workers take a fixed stride each.
  const unsigned jobs = std::max(1u, options.jobs);
  auto work = [&](unsigned start) {
    for (std::size_t i = start; i < accepted.size(); i += jobs) {
      accepted[i].key = spectral_key(accepted[i].graph, options.kind).to_string();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
  }
  summary.classified = accepted.size();

  std::map<std::string, std::vector<const Accepted*>> classes;
  for (const auto& a : accepted) classes[a.key].push_back(&a);
  summary.classes = classes.size();

  std::size_t next_id = 0;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(),
              [](const Accepted* a, const Accepted* b) { return a->graph6 < b->graph6; });
    const std::size_t id = next_id++;
    if (members.size() >= 2) ++summary.nontrivial_classes;
    if (members.size() < 2 && !options.all) continue;

    CensusRecord record;
    record.class_id = id;
    record.kind = options.kind;
    record.charpoly_key = key;
    for (const auto* a : members) record.members.push_back(a->graph6);
    if (options.explain) {
      bool found = false;
      for (std::size_t i = 0; !found && i < members.size(); ++i) {
        for (std::size_t j = 0; !found && j < members.size(); ++j) {
          if (i != j) {
            found = swap_certificate(members[i]->graph, members[j]->graph, options.kind,
                                     options.explain_max_m);
          }
        }
      }
      record.explained_by_swap = found;
      if (found) ++summary.explained_classes;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

void write_census_json(std::ostream& out, const CensusResult& result) {
  for (const auto& r : result.records) {
    nlohmann::ordered_json j;
    j["class_id"] = r.class_id;
    j["kind"] = std::string(name(r.kind));
    j["charpoly_key"] = r.charpoly_key;
    j["members"] = r.members;
    if (r.explained_by_swap) j["explained_by_swap"] = *r.explained_by_swap;
    out << j.dump() << '\n';
  }
  const auto& s = result.summary;
  nlohmann::ordered_json summary;
  summary["lines"] = s.lines;
  summary["classified"] = s.classified;
  summary["classes"] = s.classes;
  summary["nontrivial_classes"] = s.nontrivial_classes;
  summary["parse_errors"] = s.parse_errors;
  summary["oversize"] = s.oversize;
  summary["disconnected_skipped"] = s.disconnected_skipped;
  summary["isolated_skipped"] = s.isolated_skipped;
  if (s.explain) summary["explained_classes"] = s.explained_classes;
  out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
}

}  // namespace cospec::cli
