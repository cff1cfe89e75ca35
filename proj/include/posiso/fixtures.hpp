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

#ifndef POSISO_FIXTURES_HPP
#define POSISO_FIXTURES_HPP

// Named graphs: the worked examples (fig1/fig2, the history example
// b1-g/b1-h, the appendix-g/appendix-h pair), small equal-degree negatives
// and a strongly regular pair.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posiso/edge_list.hpp"
#include "posiso/graph.hpp"
#include "posiso/random.hpp"

namespace posiso::fixtures {

inline constexpr std::string_view kFig1 = R"(# 4-regular graph G, 7 vertices
7 14
1 2
1 3
1 6
1 7
2 3
2 4
2 7
3 4
3 5
4 5
4 6
5 6
5 7
6 7
)";

inline constexpr std::string_view kFig2 = R"(# 4-regular graph H, isomorphic to fig1
7 14
1 2
1 4
1 5
1 7
2 3
2 5
2 6
3 4
3 6
3 7
4 5
4 7
5 6
6 7
)";

inline constexpr std::string_view kFigPhi = R"(# verified fig1 -> fig2 correspondence
1 1
2 4
3 7
4 3
5 6
6 2
7 5
)";

// Two triangles hanging off a path through the root; the history example.
inline constexpr std::string_view kB1G = R"(7 8
1 2
1 3
2 4
2 5
3 6
3 7
4 5
6 7
)";

inline constexpr std::string_view kB1H = R"(7 8
1 2
1 3
2 3
3 4
4 5
5 6
5 7
6 7
)";

// Octahedron K(2,2,2) in two labelings.
inline constexpr std::string_view kAppendixG = R"(6 12
1 2
1 3
1 5
1 6
2 3
2 4
2 6
3 4
3 5
4 5
4 6
5 6
)";

inline constexpr std::string_view kAppendixH = R"(6 12
1 2
1 3
1 4
1 6
2 3
2 4
2 5
3 5
3 6
4 5
4 6
5 6
)";

inline constexpr std::string_view kAppendixPhi = R"(# verified appendix-g -> appendix-h correspondence
1 1
2 2
3 3
4 5
5 6
6 4
)";

inline constexpr std::string_view kC6 = R"(6 6
1 2
1 6
2 3
3 4
4 5
5 6
)";

inline constexpr std::string_view kTwoC3 = R"(# two disjoint triangles; same n, m and degrees as c6
6 6
1 2
1 3
2 3
4 5
4 6
5 6
)";

/// Triangular prism, 3-regular on 6 vertices.
inline constexpr std::string_view kPrism = R"(6 9
1 2
1 3
1 4
2 3
2 5
3 6
4 5
4 6
5 6
)";

/// K(3,3), 3-regular on 6 vertices, triangle-free.
inline constexpr std::string_view kK33 = R"(6 9
1 4
1 5
1 6
2 4
2 5
2 6
3 4
3 5
3 6
)";

/// Shrikhande graph: Z4 x Z4, (a,b) ~ (c,d) iff the difference is one of
/// +-(0,1), +-(1,0), +-(1,1). Strongly regular (16,6,2,2).
inline Graph shrikhande() {
  std::vector<Edge> edges;
  auto id = [](int a, int b) {
    return VertexId(static_cast<std::uint32_t>(4 * ((a + 4) % 4) +
                                               (b + 4) % 4 + 1));
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto [da, db] : {std::pair{0, 1}, {1, 0}, {1, 1}})
        edges.emplace_back(id(a, b), id(a + da, b + db));
  return Graph::with_vertices(16, edges);
}

/// 4x4 rook's graph (line graph of K(4,4)): same row or same column. Also
/// strongly regular (16,6,2,2).
inline Graph rook4x4() {
  std::vector<Edge> edges;
  auto id = [](int r, int c) {
    return VertexId(static_cast<std::uint32_t>(4 * r + c + 1));
  };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) {
        if (k > c)
          edges.emplace_back(id(r, c), id(r, k));
        if (k > r)
          edges.emplace_back(id(r, c), id(k, c));
      }
  return Graph::with_vertices(16, edges);
}

/// Number of 4-cliques. Distinguishes the Shrikhande graph (0) from the
/// rook's graph (8: its rows and columns), which share every parameter the
/// degree precheck and characteristics can see.
inline std::size_t count_k4(const Graph &g) {
  const auto vs = g.vertices();
  std::size_t count = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!g.adjacent(vs[a], vs[b]))
        continue;
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        if (!g.adjacent(vs[a], vs[c]) || !g.adjacent(vs[b], vs[c]))
          continue;
        for (std::size_t d = c + 1; d < vs.size(); ++d)
          if (g.adjacent(vs[a], vs[d]) && g.adjacent(vs[b], vs[d]) &&
              g.adjacent(vs[c], vs[d]))
            ++count;
      }
    }
  return count;
}

inline std::vector<std::string_view> graph_names() {
  return {"fig1",  "fig2", "b1-g",  "b1-h", "appendix-g", "appendix-h",
          "c6",    "2c3",  "prism", "k33",  "shrikhande", "rook4x4"};
}

inline std::optional<Graph> named_graph(std::string_view name) {
  if (name == "shrikhande")
    return shrikhande();
  if (name == "rook4x4")
    return rook4x4();
  const std::pair<std::string_view, std::string_view> table[] = {
      {"fig1", kFig1},         {"fig2", kFig2},
      {"b1-g", kB1G},          {"b1-h", kB1H},
      {"appendix-g", kAppendixG}, {"appendix-h", kAppendixH},
      {"c6", kC6},             {"2c3", kTwoC3},
      {"prism", kPrism},       {"k33", kK33}};
  for (const auto &[key, text] : table)
    if (key == name)
      return parse_edge_list(text);
  return std::nullopt;
}

inline std::optional<Mapping> named_mapping(std::string_view name) {
  if (name == "fig-phi")
    return parse_mapping(kFigPhi);
  if (name == "appendix-phi")
    return parse_mapping(kAppendixPhi);
  return std::nullopt;
}

/// A pair with ground truth that does not come from the matcher.
struct FixturePair {
  std::string name;
  Graph g;
  Graph h;
  bool isomorphic;
  /// How the ground truth was established.
  std::string ground_truth;
};

/// Equal-degree pairs that stress the refinement. Ground truth for the n=16
/// pairs comes from construction (relabelings) or the K4 count, since they
/// exceed the default oracle cap.
inline std::vector<FixturePair> regular_pairs(std::uint64_t seed = 1) {
  Rng rng(seed);
  std::vector<FixturePair> out;
  out.push_back({"c6~2c3", *named_graph("c6"), *named_graph("2c3"), false,
                 "oracle"});
  out.push_back({"prism~k33", *named_graph("prism"), *named_graph("k33"),
                 false, "oracle"});
  const Graph shr = shrikhande();
  const Graph rook = rook4x4();
  out.push_back({"shrikhande~rook4x4", shr, rook, false,
                 "k4 count " + std::to_string(count_k4(shr)) + " vs " +
                     std::to_string(count_k4(rook))});
  out.push_back({"shrikhande~relabeled", shr,
                 permute(shr, random_permutation(shr, rng)), true,
                 "relabeling"});
  out.push_back({"rook4x4~relabeled", rook,
                 permute(rook, random_permutation(rook, rng)), true,
                 "relabeling"});
  return out;
}

} // namespace posiso::fixtures

#endif // POSISO_FIXTURES_HPP
