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

#ifndef POSISO_MATCHER_HPP
#define POSISO_MATCHER_HPP

// Peeling matcher.
//
// Each round picks a pivot v in the live remainder Q of G, builds its
// auxiliary digraph, and scans the live remainder S of H in ascending id
// order for a partner u whose digraph is positionally equivalent under full
// histories. The unique vertices of the two digraphs are paired, appended
// to the mapping and deleted; both sides then carry this round's floor into
// the next one. The loop ends when nothing is left or no partner exists.
//
// The final mapping is always re-checked edge by edge. A mapping that fails
// that check is reported as Unknown, never as Isomorphic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posiso/aux_digraph.hpp"
#include "posiso/graph.hpp"
#include "posiso/history.hpp"
#include "posiso/mapping.hpp"

namespace posiso {

/// What to do when no partner exists for the pivot.
enum class Mode {
  faithful, ///< Declare the graphs non-isomorphic.
  cautious, ///< Give up with Unknown.
  retry,    ///< Try every other live pivot this round, then Unknown.
};

inline constexpr Mode kAllModes[] = {Mode::faithful, Mode::cautious,
                                     Mode::retry};

inline std::string_view to_string(Mode m) {
  switch (m) {
  case Mode::faithful:
    return "faithful";
  case Mode::cautious:
    return "cautious";
  case Mode::retry:
    return "retry";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : kAllModes)
    if (to_string(m) == s)
      return m;
  return std::nullopt;
}

enum class Outcome { isomorphic, not_isomorphic, unknown };

inline std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::isomorphic:
    return "isomorphic";
  case Outcome::not_isomorphic:
    return "not-isomorphic";
  case Outcome::unknown:
    return "unknown";
  }
  return "?";
}

struct MatchState {
  Graph q;
  Graph s;
  HistoryTable hq;
  HistoryTable hs;
  Mapping p;

  MatchState(Graph g, Graph h)
      : q(std::move(g)), s(std::move(h)), hq(q.id_bound()), hs(s.id_bound()) {}

  std::size_t live() const { return q.vertex_count(); }
};

/// Smallest live id of Q.
inline VertexId choose_pivot(const MatchState &state) {
  if (state.q.empty())
    throw std::logic_error("choose_pivot on an exhausted state");
  return state.q.vertices().front();
}

/// An accepted pivot/partner pair together with the trial floors that made
/// them equivalent.
struct PartnerMatch {
  VertexId pivot;
  VertexId partner;
  AuxiliaryDigraph dq;
  AuxiliaryDigraph ds;
  VertexMap<Floor> cq;
  VertexMap<Floor> cs;

  auto history_q(const MatchState &st) const {
    return [&st, this](VertexId v) { return HistoryRef(st.hq[v], &cq[v]); };
  }
  auto history_s(const MatchState &st) const {
    return [&st, this](VertexId v) { return HistoryRef(st.hs[v], &cs[v]); };
  }
};

struct PartnerSearch {
  std::optional<PartnerMatch> match;
  /// Candidates tried and rejected before the match, ascending.
  std::vector<VertexId> rejected;
};

/// Scans live vertices of S in ascending order for the first one whose
/// digraph is positionally equivalent to Q's digraph at `v`, judging by
/// committed histories plus this round's tentative floor.
inline PartnerSearch find_partner(const MatchState &state, VertexId v) {
  PartnerSearch out;
  AuxiliaryDigraph dq = build(state.q, v);
  VertexMap<Floor> cq = characteristics(dq);
  auto hq = [&](VertexId x) { return HistoryRef(state.hq[x], &cq[x]); };
  for (VertexId u : state.s.vertices()) {
    AuxiliaryDigraph ds = build(state.s, u);
    VertexMap<Floor> cs = characteristics(ds);
    auto hs = [&](VertexId x) { return HistoryRef(state.hs[x], &cs[x]); };
    if (positionally_equivalent_by(dq, ds, hq, hs)) {
      out.match = PartnerMatch{v,          u,          std::move(dq),
                               std::move(ds), std::move(cq), std::move(cs)};
      return out;
    }
    out.rejected.push_back(u);
  }
  return out;
}

namespace detail {

template <typename HistoryOfQ, typename HistoryOfS>
std::vector<VertexPair> pair_unique(const AuxiliaryDigraph &dq,
                                    const AuxiliaryDigraph &ds,
                                    const HistoryOfQ &hq,
                                    const HistoryOfS &hs) {
  const auto uq = unique_vertices_by(dq, hq);
  const auto us = unique_vertices_by(ds, hs);
  if (uq.size() != us.size())
    throw std::logic_error("unique vertex sets differ in size; digraphs are "
                           "not positionally equivalent");
  std::vector<VertexPair> out;
  std::vector<bool> used(us.size(), false);
  for (VertexId x : uq) {
    bool found = false;
    for (std::size_t k = 0; k < us.size(); ++k) {
      if (used[k] || dq.level(x) != ds.level(us[k]) || hq(x) != hs(us[k]))
        continue;
      used[k] = true;
      out.push_back({x, us[k]});
      found = true;
      break;
    }
    if (!found)
      throw std::logic_error("unique vertex has no counterpart");
  }
  return out;
}

} // namespace detail

/// Pairs each unique vertex of `dq` with the unique vertex of `ds` that has
/// the same level and the same full history. Histories must include the
/// current floor. Always contains (dq.root, ds.root).
inline std::vector<VertexPair> extract_unique_pairs(const AuxiliaryDigraph &dq,
                                                    const AuxiliaryDigraph &ds,
                                                    const HistoryTable &hq,
                                                    const HistoryTable &hs) {
  return detail::pair_unique(
      dq, ds, [&](VertexId v) { return HistoryRef(hq[v]); },
      [&](VertexId v) { return HistoryRef(hs[v]); });
}

/// One class of the virtual bipartite graph: non-unique vertices sharing a
/// level and a full history, on each side.
struct CandidateGroup {
  int level = 0;
  std::vector<VertexId> q_side;
  std::vector<VertexId> s_side;

  friend bool operator==(const CandidateGroup &,
                         const CandidateGroup &) = default;
};

template <typename HistoryOfQ, typename HistoryOfS>
std::vector<CandidateGroup>
candidate_groups_by(const AuxiliaryDigraph &dq, const AuxiliaryDigraph &ds,
                    const HistoryOfQ &hq, const HistoryOfS &hs) {
  std::vector<CandidateGroup> out;
  std::vector<HistoryRef> keys;
  auto place = [&](VertexId v, int level, const HistoryRef &key, bool q_side) {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].level == level && keys[i] == key) {
        (q_side ? out[i].q_side : out[i].s_side).push_back(v);
        return;
      }
    CandidateGroup g;
    g.level = level;
    (q_side ? g.q_side : g.s_side).push_back(v);
    out.push_back(std::move(g));
    keys.push_back(key);
  };
  for (VertexId v : members(dq))
    place(v, dq.level(v), hq(v), true);
  for (VertexId u : members(ds))
    place(u, ds.level(u), hs(u), false);
  std::erase_if(out, [](const CandidateGroup &g) {
    return g.q_side.size() <= 1 && g.s_side.size() <= 1;
  });
  return out;
}

/// Diagnostic grouping of the non-unique vertices. Histories must include
/// the current floor.
inline std::vector<CandidateGroup>
candidate_groups(const AuxiliaryDigraph &dq, const AuxiliaryDigraph &ds,
                 const HistoryTable &hq, const HistoryTable &hs) {
  return candidate_groups_by(
      dq, ds, [&](VertexId v) { return HistoryRef(hq[v]); },
      [&](VertexId v) { return HistoryRef(hs[v]); });
}

/// One line of the verdict trace.
struct RoundTrace {
  std::size_t round = 0;
  VertexId pivot;
  std::optional<VertexId> partner;
  std::vector<VertexId> rejected;
  std::vector<VertexPair> pairs;
  std::size_t remaining = 0;
};

inline void render_round(const RoundTrace &r, std::ostream &out) {
  out << "round " << r.round << ": pivot " << r.pivot << " partner ";
  if (r.partner)
    out << *r.partner;
  else
    out << "FAIL";
  out << " rejected {";
  for (std::size_t i = 0; i < r.rejected.size(); ++i)
    out << (i ? "," : "") << r.rejected[i];
  out << "} pairs {";
  for (std::size_t i = 0; i < r.pairs.size(); ++i)
    out << (i ? "," : "") << '(' << r.pairs[i].g << ',' << r.pairs[i].h
        << ')';
  out << "} remaining " << r.remaining << '\n';
}

struct Verdict {
  Outcome outcome = Outcome::unknown;
  /// Set only for Isomorphic verdicts, and then verified.
  Mapping mapping;
  std::vector<RoundTrace> trace;
  /// Peeling completed but the mapping failed verification.
  bool counterexample = false;
  /// Which rule decided the verdict.
  std::string reason;

  std::size_t rounds() const {
    std::size_t r = 0;
    for (const auto &t : trace)
      r = std::max(r, t.round);
    return r;
  }
};

inline void render_trace(const Verdict &v, std::ostream &out) {
  for (const auto &r : v.trace)
    render_round(r, out);
  out << "verdict " << to_string(v.outcome) << ": " << v.reason << '\n';
}

/// Commits an accepted round: pushes this round's floors onto every live
/// vertex, records the unique pairs and deletes them from both sides.
inline std::vector<VertexPair> commit_round(MatchState &state,
                                            const PartnerMatch &m) {
  auto pairs = detail::pair_unique(m.dq, m.ds, m.history_q(state),
                                   m.history_s(state));
  for (VertexId v : state.q.vertices())
    state.hq[v].push(m.cq[v]);
  for (VertexId u : state.s.vertices())
    state.hs[u].push(m.cs[u]);

  std::vector<VertexId> gone_q, gone_s;
  for (const auto &pr : pairs) {
    state.p.add(pr.g, pr.h);
    gone_q.push_back(pr.g);
    gone_s.push_back(pr.h);
    state.hq[pr.g].clear();
    state.hs[pr.h].clear();
  }
  state.q = delete_vertices(state.q, gone_q);
  state.s = delete_vertices(state.s, gone_s);
  return pairs;
}

inline Verdict run(const Graph &g, const Graph &h, Mode mode) {
  Verdict out;
  if (!precheck(g, h)) {
    out.outcome = Outcome::not_isomorphic;
    out.reason = "precheck: vertex count, edge count or degree vector differ";
    return out;
  }

  MatchState state(g, h);
  for (std::size_t round = 1; state.live() > 0; ++round) {
    std::vector<VertexId> pivots;
    if (mode == Mode::retry)
      pivots.assign(state.q.vertices().begin(), state.q.vertices().end());
    else
      pivots.push_back(choose_pivot(state));

    bool advanced = false;
    for (VertexId v : pivots) {
      PartnerSearch search = find_partner(state, v);
      RoundTrace line{round, v, std::nullopt, std::move(search.rejected), {},
                      state.live()};
      if (search.match) {
        line.partner = search.match->partner;
        line.pairs = commit_round(state, *search.match);
        line.remaining = state.live();
        out.trace.push_back(std::move(line));
        advanced = true;
        break;
      }
      out.trace.push_back(std::move(line));
    }

    if (!advanced) {
      std::ostringstream why;
      why << "no positionally equivalent partner in round " << round;
      if (mode == Mode::faithful) {
        out.outcome = Outcome::not_isomorphic;
        why << " (partner search exhausted)";
      } else {
        out.outcome = Outcome::unknown;
        why << (mode == Mode::retry ? " for any pivot; gave up"
                                    : "; gave up");
      }
      out.reason = why.str();
      return out;
    }
  }

  if (verify_mapping(g, h, state.p)) {
    out.outcome = Outcome::isomorphic;
    out.mapping = std::move(state.p);
    out.reason = "all vertices paired; mapping verified";
  } else {
    out.outcome = Outcome::unknown;
    out.counterexample = true;
    out.reason = "all vertices paired but the mapping breaks an edge";
  }
  return out;
}

} // namespace posiso

#endif // POSISO_MATCHER_HPP
