// Copyright 2026 The posiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSISO_EDGE_LIST_HPP
#define POSISO_EDGE_LIST_HPP

// Plain-text graph and mapping formats.
//
// Edge list: a header line "n m" followed by m lines "a b" with
// 1 <= a, b <= n. Lines starting with '#' and blank lines are skipped.
//
// Mapping: any number of lines "v u" pairing a vertex of the first graph with
// a vertex of the second, same comment rules.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posiso/graph.hpp"
#include "posiso/mapping.hpp"

namespace posiso {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

// Splits a line into exactly two unsigned integers.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
two_numbers(std::string_view line) {
  std::uint64_t out[2];
  std::size_t pos = 0;
  for (int k = 0; k < 2; ++k) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos)
      return std::nullopt;
    const char *begin = line.data() + pos;
    const char *end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, out[k]);
    if (ec != std::errc{} || ptr == begin)
      return std::nullopt;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line.find_first_of(" \t\r", pos) != pos)
      return std::nullopt;
  }
  if (line.find_first_not_of(" \t\r", pos) != std::string_view::npos)
    return std::nullopt;
  return std::pair{out[0], out[1]};
}

} // namespace detail

/// Parses the edge-list format. Errors carry the offending line number.
inline Graph parse_edge_list(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line))
      continue;
    auto nums = detail::two_numbers(line);
    if (!nums)
      throw ParseError(lineno, "expected two non-negative integers");
    if (!header) {
      if (nums->first > UINT32_MAX - 1)
        throw ParseError(lineno, "vertex count too large");
      header = nums;
      seen.resize(nums->first + 1);
      continue;
    }
    const auto [n, m] = *header;
    if (edges.size() == m)
      throw ParseError(lineno, "more edge lines than declared");
    const auto [a, b] = *nums;
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
    if (a == b)
      throw ParseError(lineno, "loop edge at vertex " + std::to_string(a));
    const auto lo = static_cast<std::uint32_t>(std::min(a, b));
    const auto hi = static_cast<std::uint32_t>(std::max(a, b));
    for (std::uint32_t x : seen[lo])
      if (x == hi)
        throw ParseError(lineno, "duplicate edge " + std::to_string(lo) + " " +
                                     std::to_string(hi));
    seen[lo].push_back(hi);
    edges.emplace_back(VertexId(lo), VertexId(hi));
  }
  if (!header)
    throw ParseError(lineno + 1, "missing \"n m\" header");
  if (edges.size() != header->second)
    throw ParseError(lineno + 1, "expected " + std::to_string(header->second) +
                                     " edges, found " +
                                     std::to_string(edges.size()));
  return Graph::with_vertices(header->first, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Canonical rendering: header, then edges in ascending order. Requires ids
/// to be exactly 1..n, which holds for every parsed or generated graph.
inline void render_edge_list(const Graph &g, std::ostream &out) {
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].index() != i + 1)
      throw GraphError("edge-list output needs contiguous ids 1..n");
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges())
    out << e.a << ' ' << e.b << '\n';
}

inline std::string render_edge_list(const Graph &g) {
  std::ostringstream out;
  render_edge_list(g, out);
  return out.str();
}

inline Mapping parse_mapping(std::istream &in) {
  Mapping p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line))
      continue;
    auto nums = detail::two_numbers(line);
    if (!nums || nums->first == 0 || nums->second == 0 ||
        nums->first > UINT32_MAX || nums->second > UINT32_MAX)
      throw ParseError(lineno, "expected a pair of positive vertex ids");
    p.add(VertexId(static_cast<std::uint32_t>(nums->first)),
          VertexId(static_cast<std::uint32_t>(nums->second)));
  }
  return p;
}

inline Mapping parse_mapping(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mapping(in);
}

inline void render_mapping(const Mapping &p, std::ostream &out) {
  for (const auto &[g, h] : p.pairs)
    out << g << ' ' << h << '\n';
}

} // namespace posiso

#endif // POSISO_EDGE_LIST_HPP
