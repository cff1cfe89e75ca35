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

#ifndef POSISO_AUX_DIGRAPH_HPP
#define POSISO_AUX_DIGRAPH_HPP

// Auxiliary digraph induced by a root vertex.
//
// Vertices are placed on "lines" by BFS distance from the root. An edge
// between lines k1 < k2 becomes one arc pointing away from the root; an edge
// inside a line becomes a pair of opposite arcs. Each vertex is then
// summarized by the sorted line numbers its arcs come from (input) and go to
// (output). Vertices in other components are UNREACHED: they carry no arcs
// and their characteristic is null.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "posiso/graph.hpp"

namespace posiso {

inline constexpr int kUnreached = -1;

/// BFS distance of every vertex from `root`, or kUnreached.
struct LevelAssignment {
  VertexId root;
  VertexMap<int> level;

  int operator[](VertexId v) const { return level[v]; }
  bool reached(VertexId v) const { return level[v] != kUnreached; }
};

struct Arc {
  VertexId from;
  VertexId to;

  friend constexpr auto operator<=>(const Arc &, const Arc &) = default;
};

struct AuxiliaryDigraph {
  VertexId root;
  LevelAssignment levels;
  /// lines[k] holds the vertices at distance k, ascending.
  std::vector<std::vector<VertexId>> lines;
  /// Live vertices outside the root's component, ascending.
  std::vector<VertexId> unreached;
  /// Sorted.
  std::vector<Arc> arcs;

  std::size_t id_bound() const { return levels.level.id_bound(); }
  int level(VertexId v) const { return levels[v]; }
};

/// Input/output line-number vectors of one vertex, both non-decreasing.
struct Characteristic {
  std::vector<int> input;
  std::vector<int> output;

  friend auto operator<=>(const Characteristic &,
                          const Characteristic &) = default;
  friend bool operator==(const Characteristic &,
                         const Characteristic &) = default;
};

/// A characteristic, or null for a vertex outside the root's component.
using Floor = std::optional<Characteristic>;

/// Neighbors are visited in ascending id order.
inline LevelAssignment bfs_levels(const Graph &g, VertexId root) {
  g.require(root);
  LevelAssignment out{root, VertexMap<int>(g.id_bound(), kUnreached)};
  std::deque<VertexId> queue{root};
  out.level[root] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (out.level[y] == kUnreached) {
        out.level[y] = out.level[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

inline AuxiliaryDigraph build(const Graph &g, VertexId root) {
  AuxiliaryDigraph d{root, bfs_levels(g, root), {}, {}, {}};
  for (VertexId v : g.vertices()) {
    const int k = d.levels[v];
    if (k == kUnreached) {
      d.unreached.push_back(v);
      continue;
    }
    if (static_cast<std::size_t>(k) >= d.lines.size())
      d.lines.resize(static_cast<std::size_t>(k) + 1);
    d.lines[static_cast<std::size_t>(k)].push_back(v);
  }
  for (const Edge &e : g.edges()) {
    const int ka = d.levels[e.a];
    const int kb = d.levels[e.b];
    if (ka == kUnreached)
      continue; // then kb is unreached too
    if (ka < kb) {
      d.arcs.push_back({e.a, e.b});
    } else if (kb < ka) {
      d.arcs.push_back({e.b, e.a});
    } else {
      d.arcs.push_back({e.a, e.b});
      d.arcs.push_back({e.b, e.a});
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

/// Characteristic of every vertex of `d`; null for unreached and non-live ids.
inline VertexMap<Floor> characteristics(const AuxiliaryDigraph &d) {
  VertexMap<Floor> out(d.id_bound());
  for (const auto &line : d.lines)
    for (VertexId v : line)
      out[v].emplace();
  for (const Arc &a : d.arcs) {
    out[a.to]->input.push_back(d.level(a.from));
    out[a.from]->output.push_back(d.level(a.to));
  }
  for (const auto &line : d.lines)
    for (VertexId v : line) {
      std::sort(out[v]->input.begin(), out[v]->input.end());
      std::sort(out[v]->output.begin(), out[v]->output.end());
    }
  return out;
}

inline void render_floor(const Floor &f, std::ostream &out) {
  if (!f) {
    out << "null";
    return;
  }
  auto vec = [&out](const std::vector<int> &xs) {
    out << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
      out << (i ? "," : "") << xs[i];
    out << ')';
  };
  out << "I=";
  vec(f->input);
  out << " O=";
  vec(f->output);
}

inline std::string to_string(const Floor &f) {
  std::ostringstream out;
  render_floor(f, out);
  return out.str();
}

/// Debug dump: one "k: members" line per level, an "unreached:" line when
/// needed, then the arc list.
inline void render_digraph(const AuxiliaryDigraph &d, std::ostream &out) {
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    out << k << ':';
    for (VertexId v : d.lines[k])
      out << ' ' << v;
    out << '\n';
  }
  if (!d.unreached.empty()) {
    out << "unreached:";
    for (VertexId v : d.unreached)
      out << ' ' << v;
    out << '\n';
  }
  out << "arcs:";
  for (const Arc &a : d.arcs)
    out << ' ' << a.from << "->" << a.to;
  out << '\n';
}

} // namespace posiso

#endif // POSISO_AUX_DIGRAPH_HPP
