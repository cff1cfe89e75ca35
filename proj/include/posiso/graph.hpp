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

#ifndef POSISO_GRAPH_HPP
#define POSISO_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "posiso/vertex.hpp"

namespace posiso {

/// Raised for operations that name a vertex the graph does not have, or for
/// edge sets that would violate simplicity.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph with stable vertex ids.
///
/// Instances are immutable once built; every mutating operation
/// (`delete_vertices`, `permute`) returns a fresh graph. Neighbor lists are
/// kept sorted ascending so traversal order is deterministic.
class Graph {
public:
  Graph() = default;

  /// Builds a graph over `vertices` with `edges`. Rejects loops, duplicate
  /// edges, duplicate vertex ids and endpoints outside `vertices`.
  Graph(std::vector<VertexId> vertices, std::span<const Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) !=
        vertices.end())
      throw GraphError("duplicate vertex id");
    if (!vertices.empty() && vertices.front().value == 0)
      throw GraphError("vertex ids are 1-based");
    const std::size_t bound =
        vertices.empty() ? 1 : vertices.back().index() + 1;
    present_.assign(bound, false);
    adjacency_.assign(bound, {});
    for (VertexId v : vertices)
      present_[v.index()] = true;
    vertices_ = std::move(vertices);

    for (const Edge &e : edges) {
      if (e.a == e.b)
        throw GraphError("loop at vertex " + std::to_string(e.a.value));
      if (!contains(e.a) || !contains(e.b))
        throw GraphError("edge endpoint is not a vertex");
      adjacency_[e.a.index()].push_back(e.b);
      adjacency_[e.b.index()].push_back(e.a);
    }
    for (auto &row : adjacency_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw GraphError("duplicate edge");
    }
    edge_count_ = edges.size();
  }

  /// Graph on ids 1..n.
  static Graph with_vertices(std::size_t n, std::span<const Edge> edges = {}) {
    std::vector<VertexId> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
      ids.emplace_back(static_cast<std::uint32_t>(i));
    return Graph(std::move(ids), edges);
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return vertices_.empty(); }

  /// Live vertex ids, ascending.
  std::span<const VertexId> vertices() const { return vertices_; }

  /// One past the largest id that can occur; sizes `VertexMap`s.
  std::size_t id_bound() const { return present_.empty() ? 1 : present_.size(); }

  bool contains(VertexId v) const {
    return v.index() < present_.size() && present_[v.index()];
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    require(v);
    return adjacency_[v.index()];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool adjacent(VertexId a, VertexId b) const {
    if (!contains(a) || !contains(b))
      return false;
    const auto &row = adjacency_[a.index()];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// All edges in ascending (a, b) order with a < b.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId a : vertices_)
      for (VertexId b : adjacency_[a.index()])
        if (a < b)
          out.emplace_back(a, b);
    return out;
  }

  void require(VertexId v) const {
    if (!contains(v))
      throw GraphError("unknown vertex id " + std::to_string(v.value));
  }

  friend bool operator==(const Graph &x, const Graph &y) {
    return x.vertices_ == y.vertices_ && x.edges() == y.edges();
  }

private:
  std::vector<VertexId> vertices_;
  std::vector<bool> present_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

using DegreeVector = std::vector<std::size_t>;

/// Sorted (non-decreasing) multiset of vertex degrees.
inline DegreeVector degree_vector(const Graph &g) {
  DegreeVector out;
  out.reserve(g.vertex_count());
  for (VertexId v : g.vertices())
    out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Cheap necessary condition for isomorphism: equal n, m and degree vectors.
inline bool precheck(const Graph &g, const Graph &h) {
  return g.vertex_count() == h.vertex_count() &&
         g.edge_count() == h.edge_count() &&
         degree_vector(g) == degree_vector(h);
}

/// Removes `victims` and their incident edges. Survivor ids are unchanged.
inline Graph delete_vertices(const Graph &g, std::span<const VertexId> victims) {
  VertexMap<std::uint8_t> gone(g.id_bound(), 0);
  for (VertexId v : victims) {
    g.require(v);
    gone[v] = 1;
  }
  std::vector<VertexId> keep;
  keep.reserve(g.vertex_count());
  for (VertexId v : g.vertices())
    if (!gone[v])
      keep.push_back(v);
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (!gone[e.a] && !gone[e.b])
      edges.push_back(e);
  return Graph(std::move(keep), edges);
}

/// A relabeling of a graph's vertex set; `image[v]` is where v goes.
using Permutation = VertexMap<VertexId>;

/// Relabels `g` through `pi`. `pi` must be a bijection of g's vertex set onto
/// itself.
inline Graph permute(const Graph &g, const Permutation &pi) {
  if (pi.id_bound() < g.id_bound())
    throw GraphError("permutation does not cover the vertex set");
  VertexMap<std::uint8_t> hit(g.id_bound(), 0);
  for (VertexId v : g.vertices()) {
    const VertexId w = pi[v];
    if (!g.contains(w) || hit[w])
      throw GraphError("permutation is not a bijection on the vertex set");
    hit[w] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge &e : g.edges())
    edges.emplace_back(pi[e.a], pi[e.b]);
  return Graph(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()),
               edges);
}

inline Permutation identity_permutation(const Graph &g) {
  Permutation pi(g.id_bound());
  for (VertexId v : g.vertices())
    pi[v] = v;
  return pi;
}

} // namespace posiso

#endif // POSISO_GRAPH_HPP
