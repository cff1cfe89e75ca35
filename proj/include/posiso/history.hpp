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

#ifndef POSISO_HISTORY_HPP
#define POSISO_HISTORY_HPP

// Multi-floor characteristic histories.
//
// Every peeling round pushes one floor onto every live vertex. Two vertices
// compare equal only when all floors agree, newest (floor 0) first; a null
// floor equals only another null floor. Positional equivalence of two
// digraphs is then judged on these full histories, line by line.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "posiso/aux_digraph.hpp"

namespace posiso {

class CharacteristicHistory {
public:
  CharacteristicHistory() = default;

  std::size_t size() const { return oldest_first_.size(); }
  bool empty() const { return oldest_first_.empty(); }

  /// Floor k, where 0 is the newest.
  const Floor &floor(std::size_t k) const {
    return oldest_first_[oldest_first_.size() - 1 - k];
  }

  void push(Floor f) { oldest_first_.push_back(std::move(f)); }
  void clear() { oldest_first_.clear(); }

  friend bool operator==(const CharacteristicHistory &,
                         const CharacteristicHistory &) = default;

private:
  std::vector<Floor> oldest_first_;
};

using HistoryTable = VertexMap<CharacteristicHistory>;

inline CharacteristicHistory push_floor(CharacteristicHistory h, Floor f) {
  h.push(std::move(f));
  return h;
}

/// A committed history with an optional tentative floor stacked on top.
/// Lets a partner search try a candidate's floor without copying histories.
class HistoryRef {
public:
  HistoryRef(const CharacteristicHistory &base, const Floor *top = nullptr)
      : base_(&base), top_(top) {}

  std::size_t size() const { return base_->size() + (top_ ? 1 : 0); }

  const Floor &floor(std::size_t k) const {
    if (top_)
      return k == 0 ? *top_ : base_->floor(k - 1);
    return base_->floor(k);
  }

  /// Total order: floor count, then floors newest first. Stops at the first
  /// differing floor.
  friend std::strong_ordering operator<=>(const HistoryRef &x,
                                          const HistoryRef &y) {
    if (auto c = x.size() <=> y.size(); c != 0)
      return c;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const Floor &a = x.floor(k);
      const Floor &b = y.floor(k);
      if (a.has_value() != b.has_value())
        return a.has_value() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
      if (a) {
        if (auto c = a->input <=> b->input; c != 0)
          return c;
        if (auto c = a->output <=> b->output; c != 0)
          return c;
      }
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const HistoryRef &x, const HistoryRef &y) {
    return (x <=> y) == 0;
  }

private:
  const CharacteristicHistory *base_;
  const Floor *top_;
};

inline bool histories_equal(const CharacteristicHistory &a,
                            const CharacteristicHistory &b) {
  return HistoryRef(a) == HistoryRef(b);
}

namespace detail {

template <typename HistoryOf>
std::vector<HistoryRef> sorted_histories(std::span<const VertexId> vs,
                                         const HistoryOf &history_of) {
  std::vector<HistoryRef> out;
  out.reserve(vs.size());
  for (VertexId v : vs)
    out.push_back(history_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Positional equivalence with histories supplied by callables
/// `VertexId -> HistoryRef`.
///
/// Holds iff both digraphs have the same number of lines, each line has
/// the same multiset of histories on both sides, and the unreached vertices
/// carry the same multiset of histories too.
template <typename HistoryOfQ, typename HistoryOfS>
bool positionally_equivalent_by(const AuxiliaryDigraph &dq,
                                const AuxiliaryDigraph &ds,
                                const HistoryOfQ &hq, const HistoryOfS &hs) {
  if (dq.lines.size() != ds.lines.size() ||
      dq.unreached.size() != ds.unreached.size())
    return false;
  for (std::size_t k = 0; k < dq.lines.size(); ++k)
    if (dq.lines[k].size() != ds.lines[k].size())
      return false;
  for (std::size_t k = 0; k < dq.lines.size(); ++k)
    if (detail::sorted_histories(dq.lines[k], hq) !=
        detail::sorted_histories(ds.lines[k], hs))
      return false;
  return detail::sorted_histories(dq.unreached, hq) ==
         detail::sorted_histories(ds.unreached, hs);
}

/// `hq` and `hs` must already hold the current round's floor.
inline bool positionally_equivalent(const AuxiliaryDigraph &dq,
                                    const AuxiliaryDigraph &ds,
                                    const HistoryTable &hq,
                                    const HistoryTable &hs) {
  return positionally_equivalent_by(
      dq, ds, [&](VertexId v) { return HistoryRef(hq[v]); },
      [&](VertexId v) { return HistoryRef(hs[v]); });
}

/// All live vertices of a digraph: lines in order, then unreached.
inline std::vector<VertexId> members(const AuxiliaryDigraph &d) {
  std::vector<VertexId> out;
  for (const auto &line : d.lines)
    out.insert(out.end(), line.begin(), line.end());
  out.insert(out.end(), d.unreached.begin(), d.unreached.end());
  return out;
}

/// Vertices whose full history is shared by no other vertex of `d`,
/// ascending by id.
template <typename HistoryOf>
std::vector<VertexId> unique_vertices_by(const AuxiliaryDigraph &d,
                                         const HistoryOf &history_of) {
  std::vector<std::pair<HistoryRef, VertexId>> all;
  for (VertexId v : members(d))
    all.emplace_back(history_of(v), v);
  std::sort(all.begin(), all.end(), [](const auto &x, const auto &y) {
    return x.first < y.first;
  });
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].first == all[i].first)
      ++j;
    if (j - i == 1)
      out.push_back(all[i].second);
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexId> unique_vertices(const AuxiliaryDigraph &d,
                                             const HistoryTable &h) {
  return unique_vertices_by(d, [&](VertexId v) { return HistoryRef(h[v]); });
}

/// Single-floor histories taken straight from one digraph's characteristics.
inline HistoryTable single_floor_histories(const AuxiliaryDigraph &d) {
  const auto chars = characteristics(d);
  HistoryTable out(d.id_bound());
  for (VertexId v : members(d))
    out[v].push(chars[v]);
  return out;
}

} // namespace posiso

#endif // POSISO_HISTORY_HPP
