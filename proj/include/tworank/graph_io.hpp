#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tworank/errors.hpp"
#include "tworank/graph.hpp"

namespace tworank {

namespace detail {

// Splits one line into whitespace-separated non-negative integers.
inline std::vector<long long> parse_integers(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j)
      throw ParseError(lineno, "not an integer: '" + std::string(line.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  // A trailing newline yields one empty tail line; drop trailing blanks.
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos) lines.pop_back();
  return lines;
}

inline std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

// Edge-list format: "n m" then m lines "u v", 0 <= u, v < n.
inline Graph read_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  auto header = detail::parse_integers(lines[0], 1);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const long long n = header[0], m = header[1];
  if (n < 0 || m < 0) throw ParseError(1, "negative count in header");
  if (n > static_cast<long long>(kMaxVertices)) throw ParseError(1, "too many vertices");
  const auto found = static_cast<long long>(lines.size()) - 1;
  if (found < m)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(found));
  if (found > m) throw ParseError(static_cast<std::size_t>(m) + 2, "more edge lines than the header declares");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = detail::parse_integers(lines[i], i + 1);
    if (uv.size() != 2) throw ParseError(i + 1, "edge line must be 'u v'");
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n)
      throw ParseError(i + 1, "vertex out of range [0," + std::to_string(n) + ")");
    if (uv[0] == uv[1]) throw ParseError(i + 1, "self-loop at vertex " + std::to_string(uv[0]));
    Vertex u = static_cast<Vertex>(std::min(uv[0], uv[1])), v = static_cast<Vertex>(std::max(uv[0], uv[1]));
    auto& row = seen[u];
    if (std::find(row.begin(), row.end(), v) != row.end())
      throw ParseError(i + 1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    row.push_back(v);
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph read_graph_file(const std::string& file) { return read_graph(detail::read_file(file)); }

inline std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace tworank
