#pragma once

#include <string>
#include <string_view>

#include "cospec/graph.hpp"

namespace cospec {

/// Largest order accepted by the graph6 reader and writer (single-byte header).
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// ">>graph6<<" header are ignored.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge-list text: first line is the vertex count, then one "u v" pair per
/// line. Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto picks the edge-list reader when the first non-blank, non-comment line
/// is a bare integer; otherwise graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

}  // namespace cospec
