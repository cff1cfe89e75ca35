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

#ifndef POSISO_RANDOM_HPP
#define POSISO_RANDOM_HPP

// Seeded generators for test and benchmark corpora. Everything here draws
// from std::mt19937_64, whose output sequence is fixed by the standard, and
// avoids the library distributions (implementation-defined) so a seed yields
// the same graph on every toolchain.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posiso/graph.hpp"

namespace posiso {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream index into an independent seed.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). `bound` must be positive.
inline std::uint64_t uniform_index(Rng &rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Erdos-Renyi G(n, p) on ids 1..n.
inline Graph generate_random_graph(std::size_t n, double p, Rng &rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (std::uint32_t a = 1; a <= n; ++a)
    for (std::uint32_t b = a + 1; b <= n; ++b)
      if (uniform_unit(rng) < p)
        edges.emplace_back(VertexId(a), VertexId(b));
  return Graph::with_vertices(n, edges);
}

inline Graph generate_random_graph(std::size_t n, double p,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return generate_random_graph(n, p, rng);
}

/// Uniform random permutation of g's vertex set (Fisher-Yates).
inline Permutation random_permutation(const Graph &g, Rng &rng) {
  std::vector<VertexId> img(g.vertices().begin(), g.vertices().end());
  for (std::size_t i = img.size(); i > 1; --i)
    std::swap(img[i - 1], img[uniform_index(rng, i)]);
  Permutation pi(g.id_bound());
  std::size_t k = 0;
  for (VertexId v : g.vertices())
    pi[v] = img[k++];
  return pi;
}

/// Applies up to `swaps` successful double-edge switches
/// {a,b},{c,d} -> {a,d},{c,b}. Degrees are preserved, isomorphism type
/// usually is not.
inline Graph switch_edges(const Graph &g, std::size_t swaps, Rng &rng) {
  std::vector<Edge> edges = g.edges();
  if (edges.size() < 2)
    return g;
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  Graph cur = g;
  std::size_t done = 0;
  for (std::size_t attempt = 0; attempt < 20 * swaps + 20 && done < swaps;
       ++attempt) {
    const auto i = uniform_index(rng, edges.size());
    const auto j = uniform_index(rng, edges.size());
    if (i == j)
      continue;
    VertexId a = edges[i].a, b = edges[i].b;
    VertexId c = edges[j].a, d = edges[j].b;
    if (uniform_index(rng, 2) == 1)
      std::swap(c, d);
    if (a == d || c == b || a == c || b == d)
      continue;
    if (cur.adjacent(a, d) || cur.adjacent(c, b))
      continue;
    edges[i] = Edge(a, d);
    edges[j] = Edge(c, b);
    cur = Graph(ids, edges);
    ++done;
  }
  return cur;
}

/// Random d-regular simple graph on ids 1..n via the pairing model with
/// restarts. Returns nullopt if n*d is odd, d >= n, or no simple pairing
/// was found within the attempt budget.
inline std::optional<Graph> random_regular_graph(std::size_t n,
                                                 std::size_t d, Rng &rng,
                                                 int attempts = 1000) {
  if ((n * d) % 2 != 0 || (n > 0 && d >= n))
    return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    std::vector<std::uint32_t> points;
    points.reserve(n * d);
    for (std::uint32_t v = 1; v <= n; ++v)
      for (std::size_t k = 0; k < d; ++k)
        points.push_back(v);
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[uniform_index(rng, i)]);
    std::vector<Edge> edges;
    bool ok = true;
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      const auto a = points[i], b = points[i + 1];
      if (a == b || adj[a][b]) {
        ok = false;
        break;
      }
      adj[a][b] = adj[b][a] = true;
      edges.emplace_back(VertexId(a), VertexId(b));
    }
    if (ok)
      return Graph::with_vertices(n, edges);
  }
  return std::nullopt;
}

} // namespace posiso

#endif // POSISO_RANDOM_HPP
