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

#ifndef POSISO_VERTEX_HPP
#define POSISO_VERTEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

namespace posiso {

/// Original 1-based vertex label. Survives vertex deletion unchanged.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream &operator<<(std::ostream &os, VertexId v) {
  return os << v.value;
}

/// Undirected edge, stored with `a < b`.
struct Edge {
  VertexId a;
  VertexId b;

  constexpr Edge() = default;
  constexpr Edge(VertexId x, VertexId y)
      : a(x < y ? x : y), b(x < y ? y : x) {}

  friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Dense per-vertex storage indexed by `VertexId::value`. Slots for ids that
/// are not live in the owning graph simply hold a default value. Flags use
/// std::uint8_t so that operator[] can hand out references.
template <typename T>
class VertexMap {
  static_assert(!std::is_same_v<T, bool>, "use std::uint8_t for flags");

public:
  VertexMap() = default;
  explicit VertexMap(std::size_t id_bound, T init = T{})
      : data_(id_bound, std::move(init)) {}

  T &operator[](VertexId v) { return data_[v.index()]; }
  const T &operator[](VertexId v) const { return data_[v.index()]; }

  std::size_t id_bound() const { return data_.size(); }

  friend bool operator==(const VertexMap &, const VertexMap &) = default;

private:
  std::vector<T> data_;
};

} // namespace posiso

#endif // POSISO_VERTEX_HPP
