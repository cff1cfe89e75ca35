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

#ifndef POSISO_MAPPING_HPP
#define POSISO_MAPPING_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "posiso/graph.hpp"

namespace posiso {

/// One correspondence: vertex `g` of the first graph to vertex `h` of the
/// second.
struct VertexPair {
  VertexId g;
  VertexId h;

  friend constexpr auto operator<=>(const VertexPair &,
                                    const VertexPair &) = default;
};

/// Ordered list of vertex pairs, in the order they were discovered.
struct Mapping {
  std::vector<VertexPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }

  void add(VertexId g, VertexId h) { pairs.push_back({g, h}); }

  /// Both projections injective.
  bool is_injective() const {
    std::vector<VertexId> left, right;
    left.reserve(pairs.size());
    right.reserve(pairs.size());
    for (const auto &p : pairs) {
      left.push_back(p.g);
      right.push_back(p.h);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return std::adjacent_find(left.begin(), left.end()) == left.end() &&
           std::adjacent_find(right.begin(), right.end()) == right.end();
  }

  /// Same pairs regardless of discovery order.
  Mapping sorted() const {
    Mapping out = *this;
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
  }

  friend bool operator==(const Mapping &, const Mapping &) = default;
};

/// True iff `p` is a bijection V(g) -> V(h) carrying every edge of g onto an
/// edge of h. With equal edge counts that also gives the converse direction.
inline bool verify_mapping(const Graph &g, const Graph &h, const Mapping &p) {
  if (g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count() || p.size() != g.vertex_count())
    return false;

  VertexMap<VertexId> image(g.id_bound());
  VertexMap<std::uint8_t> seen_g(g.id_bound(), 0);
  VertexMap<std::uint8_t> seen_h(h.id_bound(), 0);
  for (const auto &[a, b] : p.pairs) {
    if (!g.contains(a) || !h.contains(b) || seen_g[a] || seen_h[b])
      return false;
    seen_g[a] = 1;
    seen_h[b] = 1;
    image[a] = b;
  }
  for (const Edge &e : g.edges())
    if (!h.adjacent(image[e.a], image[e.b]))
      return false;
  return true;
}

} // namespace posiso

#endif // POSISO_MAPPING_HPP
