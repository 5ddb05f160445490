#include "cospec/plan_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "cospec/errors.hpp"
#include "cospec/graph_io.hpp"

namespace cospec {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("plan line " + std::to_string(line) + ": " + message);
}

int to_int(const Line& line, const std::string& tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    fail(line.number, "expected a nonnegative integer, got '" + tok + "'");
  }
  return value;
}

std::vector<Vertex> int_list(const Line& line, std::size_t first) {
  std::vector<Vertex> out;
  for (std::size_t i = first; i < line.tokens.size(); ++i) out.push_back(to_int(line, line.tokens[i]));
  return out;
}

bool is_edge_line(const Line& line) {
  return line.tokens.size() == 2 && !line.tokens[0].empty() &&
         std::isdigit(static_cast<unsigned char>(line.tokens[0][0]));
}

struct PendingGraph {
  int line = 0;
  std::optional<std::string> graph6;
  std::optional<int> order;  // BASE edges <n>
  std::vector<Edge> edges;
  bool from_edges = false;
};

Graph finish_graph(const PendingGraph& p, int implied_order, const char* label) {
  try {
    if (p.graph6) return parse_graph6(*p.graph6);
    return Graph::from_edges(p.order.value_or(implied_order), p.edges);
  } catch (const InputError& e) {
    fail(p.line, std::string(label) + ": " + e.what());
  }
}

}  // namespace

SwapPlan parse_plan(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<PendingGraph> base, h1, h2;
  std::optional<std::vector<Vertex>> v1, v2, phi1, phi2;
  std::optional<std::vector<std::pair<Vertex, Vertex>>> pi_pairs;
  int pi_line = 0;
  PendingGraph* collecting = nullptr;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    if (collecting && is_edge_line(line)) {
      collecting->edges.emplace_back(to_int(line, line.tokens[0]), to_int(line, line.tokens[1]));
      continue;
    }
    collecting = nullptr;
    const std::string& key = line.tokens[0];
    auto once = [&](bool already) {
      if (already) fail(line.number, "duplicate " + key + " directive");
    };

    if (key == "BASE" || key == "H1" || key == "H2") {
      auto& slot = key == "BASE" ? base : key == "H1" ? h1 : h2;
      once(slot.has_value());
      PendingGraph p;
      p.line = line.number;
      if (line.tokens.size() >= 2 && line.tokens[1] == "g6") {
        if (line.tokens.size() != 3) fail(line.number, key + " g6 takes one graph6 string");
        p.graph6 = line.tokens[2];
      } else if (line.tokens.size() >= 2 && line.tokens[1] == "edges") {
        p.from_edges = true;
        if (key == "BASE") {
          if (line.tokens.size() != 3) fail(line.number, "BASE edges takes the vertex count");
          p.order = to_int(line, line.tokens[2]);
        } else if (line.tokens.size() != 2) {
          fail(line.number, key + " edges takes no arguments; the order is |V|");
        }
      } else {
        fail(line.number, key + " must be followed by 'g6' or 'edges'");
      }
      slot = std::move(p);
      if (slot->from_edges) collecting = &*slot;
    } else if (key == "V1" || key == "V2" || key == "PHI1" || key == "PHI2") {
      auto& slot = key == "V1" ? v1 : key == "V2" ? v2 : key == "PHI1" ? phi1 : phi2;
      once(slot.has_value());
      slot = int_list(line, 1);
      if (slot->empty()) fail(line.number, key + " needs at least one vertex");
    } else if (key == "PI") {
      once(pi_pairs.has_value());
      const auto values = int_list(line, 1);
      if (values.empty() || values.size() % 2 != 0) fail(line.number, "PI takes pairs of vertices");
      pi_pairs.emplace();
      for (std::size_t i = 0; i < values.size(); i += 2) pi_pairs->emplace_back(values[i], values[i + 1]);
      pi_line = line.number;
    } else {
      fail(line.number, "unknown directive '" + key + "'");
    }
  }

  const int last = lines.empty() ? 1 : lines.back().number;
  if (!base) fail(last, "missing BASE");
  if (!v1 || !v2) fail(last, "missing V1 or V2");
  if (!h1 || !h2) fail(last, "missing H1 or H2");

  SwapPlan plan;
  plan.base = finish_graph(*base, 0, "BASE");
  plan.v1 = *v1;
  plan.v2 = *v2;
  const int m = static_cast<int>(v1->size());
  plan.h1 = finish_graph(*h1, m, "H1");
  plan.h2 = finish_graph(*h2, static_cast<int>(v2->size()), "H2");

  try {
    classify_pair(plan.base, plan.v1, plan.v2);  // set shape checks only
  } catch (const InputError& e) {
    fail(last, e.what());
  }

  if (pi_pairs) {
    try {
      plan.pi = SetSwap::from_pairs(plan.v1, plan.v2, *pi_pairs);
    } catch (const InputError& e) {
      fail(pi_line, e.what());
    }
  } else {
    std::optional<VertexMap> sigma;
    try {
      sigma = find_involution(plan.base, plan.v1, plan.v2);
    } catch (const Error& e) {
      throw InputError(std::string("plan: ") + e.what());
    }
    if (!sigma) throw InputError("plan: no set-swapping automorphism of G[V1 ∪ V2] exists");
    plan.pi = SetSwap(plan.v1, plan.v2, sigma->image());
  }
  plan.phi1 = VertexMap(phi1.value_or(plan.v1));
  plan.phi2 = VertexMap(phi2.value_or(plan.v2));
  validate_plan(plan);
  return plan;
}

std::string emit_plan(const SwapPlan& plan) {
  std::ostringstream out;
  auto list = [&](const char* key, const std::vector<Vertex>& values) {
    out << key;
    for (Vertex v : values) out << ' ' << v;
    out << '\n';
  };
  auto edges = [&](const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  };
  out << "BASE edges " << plan.base.order() << '\n';
  edges(plan.base);
  list("V1", plan.v1);
  list("V2", plan.v2);
  out << "PI";
  for (Vertex v : plan.v1) out << ' ' << v << ' ' << plan.pi(v);
  out << '\n';
  out << "H1 edges\n";
  edges(plan.h1);
  out << "H2 edges\n";
  edges(plan.h2);
  list("PHI1", plan.phi1.image());
  list("PHI2", plan.phi2.image());
  return out.str();
}

}  // namespace cospec
