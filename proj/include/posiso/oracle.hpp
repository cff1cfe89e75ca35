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

#ifndef POSISO_ORACLE_HPP
#define POSISO_ORACLE_HPP

// Exact isomorphism test by backtracking, for small graphs.
//
// G's vertices are assigned in descending degree order (ties by id). A
// candidate image must be unused, have the same degree, and agree on
// adjacency with every vertex already assigned. Nothing here looks at
// auxiliary digraphs or characteristics, so agreement with the matcher is
// independent evidence.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posiso/graph.hpp"
#include "posiso/mapping.hpp"

namespace posiso {

inline constexpr std::size_t kDefaultOracleCap = 12;

class OracleCapExceeded : public std::runtime_error {
public:
  explicit OracleCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("exact oracle refuses n=" + std::to_string(n) +
                           " (cap " + std::to_string(cap) + ")") {}
};

struct OracleResult {
  std::optional<Mapping> mapping;
  std::uint64_t nodes_explored = 0;

  bool isomorphic() const { return mapping.has_value(); }
};

namespace detail {

class Backtracker {
public:
  Backtracker(const Graph &g, const Graph &h)
      : n_(g.vertex_count()), gids_(g.vertices().begin(), g.vertices().end()),
        hids_(h.vertices().begin(), h.vertices().end()),
        gadj_(n_ * n_, 0), hadj_(n_ * n_, 0), gdeg_(n_), hdeg_(n_),
        image_(n_, kFree), used_(n_, false) {
    fill(g, gids_, gadj_, gdeg_);
    fill(h, hids_, hadj_, hdeg_);
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return gdeg_[a] > gdeg_[b];
                     });
  }

  bool search(std::size_t depth = 0) {
    ++nodes_;
    if (depth == n_)
      return true;
    const std::size_t v = order_[depth];
    for (std::size_t u = 0; u < n_; ++u) {
      if (used_[u] || hdeg_[u] != gdeg_[v] || !consistent(v, u, depth))
        continue;
      image_[v] = u;
      used_[u] = true;
      if (search(depth + 1))
        return true;
      image_[v] = kFree;
      used_[u] = false;
    }
    return false;
  }

  Mapping mapping() const {
    Mapping p;
    for (std::size_t i = 0; i < n_; ++i)
      p.add(gids_[i], hids_[image_[i]]);
    return p;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  static constexpr std::size_t kFree = SIZE_MAX;

  void fill(const Graph &x, const std::vector<VertexId> &ids,
            std::vector<std::uint8_t> &adj, std::vector<std::size_t> &deg) {
    VertexMap<std::size_t> idx(x.id_bound());
    for (std::size_t i = 0; i < ids.size(); ++i)
      idx[ids[i]] = i;
    for (const Edge &e : x.edges()) {
      const auto a = idx[e.a], b = idx[e.b];
      adj[a * n_ + b] = adj[b * n_ + a] = 1;
      ++deg[a];
      ++deg[b];
    }
  }

  bool consistent(std::size_t v, std::size_t u, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t w = order_[k];
      if (gadj_[v * n_ + w] != hadj_[u * n_ + image_[w]])
        return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<VertexId> gids_, hids_;
  std::vector<std::uint8_t> gadj_, hadj_;
  std::vector<std::size_t> gdeg_, hdeg_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Decides isomorphism exactly. Refuses graphs larger than `cap` vertices.
inline OracleResult exact_isomorphism(const Graph &g, const Graph &h,
                                      std::size_t cap = kDefaultOracleCap) {
  const std::size_t n = std::max(g.vertex_count(), h.vertex_count());
  if (n > cap)
    throw OracleCapExceeded(n, cap);
  OracleResult out;
  if (g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count() || degree_vector(g) != degree_vector(h))
    return out;
  detail::Backtracker bt(g, h);
  if (bt.search())
    out.mapping = bt.mapping();
  out.nodes_explored = bt.nodes();
  return out;
}

} // namespace posiso

#endif // POSISO_ORACLE_HPP
