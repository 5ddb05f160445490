#include "cospec/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxChar = 126;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool parse_int(std::string_view word, int& out) {
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InputError("graph6: empty input");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kGraph6Offset || c > kGraph6MaxChar) {
      throw InputError("graph6: character out of range at offset " + std::to_string(i));
    }
  }

  if (text.front() == '~') {
    if (text.size() < 4) throw InputError("graph6: truncated header");
    throw InputError("graph6: orders above " + std::to_string(kMaxGraph6Order) +
                     " are not supported");
  }

  const int n = static_cast<unsigned char>(text.front()) - kGraph6Offset;
  const std::string_view body = text.substr(1);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " data bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(body.size()));
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(body[k / 6]) - kGraph6Offset;
      if ((value >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  for (; k < expected * 6; ++k) {
    const int value = static_cast<unsigned char>(body[k / 6]) - kGraph6Offset;
    if ((value >> (5 - static_cast<int>(k % 6))) & 1) {
      throw InputError("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw InputError("graph6: orders above " + std::to_string(kMaxGraph6Order) +
                     " are not supported");
  }
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int value = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kGraph6Offset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kGraph6Offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t lineno = 0;
  int n = -1;
  Graph g;
  for (const auto raw : lines) {
    ++lineno;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    const auto words = split_words(line);
    const std::string where = "edge list line " + std::to_string(lineno) + ": ";
    if (n < 0) {
      if (words.size() != 1 || !parse_int(words[0], n) || n < 0) {
        throw InputError(where + "expected a vertex count");
      }
      g = Graph(n);
      continue;
    }
    int u = 0;
    int v = 0;
    if (words.size() != 2 || !parse_int(words[0], u) || !parse_int(words[1], v)) {
      throw InputError(where + "expected \"u v\"");
    }
    try {
      g.add_edge(u, v);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
  }
  if (n < 0) throw InputError("edge list: missing vertex count");
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Graph6;
    for (const auto raw : split_lines(text)) {
      const auto line = strip_comment(raw);
      if (line.empty()) continue;
      int n = 0;
      if (parse_int(line, n)) format = GraphFormat::EdgeList;
      break;
    }
  }
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  for (const auto raw : split_lines(text)) {
    const auto line = trim(raw);
    if (!line.empty()) return parse_graph6(line);
  }
  throw InputError("graph6: empty input");
}

}  // namespace cospec
