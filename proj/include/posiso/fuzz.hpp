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

#ifndef POSISO_FUZZ_HPP
#define POSISO_FUZZ_HPP

// Differential fuzzing of the matcher against the exact oracle.
//
// Even trials pair a random graph with a relabeling of itself. Odd trials
// look for an equal-degree partner: a few independent samples first, then a
// degree-preserving edge switch of the original. Every pair is run through
// all three matcher modes and the oracle.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "posiso/edge_list.hpp"
#include "posiso/fixtures.hpp"
#include "posiso/matcher.hpp"
#include "posiso/oracle.hpp"
#include "posiso/random.hpp"

namespace posiso {

struct FuzzConfig {
  std::size_t trials = 100;
  std::size_t n = 6;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = kDefaultOracleCap;
};

struct ModeResult {
  Outcome outcome = Outcome::unknown;
  bool verified = false;
  std::size_t rounds = 0;
  bool counterexample = false;
};

struct FuzzRow {
  std::string label;
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  bool truth_isomorphic = false;
  std::string truth_source;
  std::array<ModeResult, 3> modes;
};

struct ModeTally {
  std::size_t true_positives = 0;      // verified Isomorphic, truth isomorphic
  std::size_t false_negatives = 0;     // truth isomorphic, no verified mapping
  std::size_t missed_as_negative = 0;  // ... of which NotIsomorphic
  std::size_t true_negatives = 0;      // truth non-isomorphic, NotIsomorphic
  std::size_t unknown_on_negative = 0; // truth non-isomorphic, Unknown
  std::size_t soundness_violations = 0;

  friend bool operator==(const ModeTally &, const ModeTally &) = default;
};

struct Counterexample {
  std::string label;
  std::vector<Mode> modes;
  Graph g;
  Graph h;
};

struct FuzzReport {
  std::vector<FuzzRow> rows;
  std::array<ModeTally, 3> tallies{};
  std::vector<Counterexample> counterexamples;

  std::size_t soundness_violations() const {
    std::size_t s = 0;
    for (const auto &t : tallies)
      s += t.soundness_violations;
    return s;
  }
  std::size_t false_negatives(Mode m) const {
    return tallies[static_cast<std::size_t>(m)].false_negatives;
  }
};

/// Runs every mode on one pair, tallies it against the ground truth and
/// records a counterexample if any mode missed an isomorphism or broke
/// soundness.
inline void score_pair(FuzzReport &report, std::string label, std::string kind,
                       const Graph &g, const Graph &h, bool truth,
                       std::string truth_source) {
  FuzzRow row{std::move(label), std::move(kind), g.vertex_count(),
              g.edge_count(), truth, std::move(truth_source), {}};
  Counterexample cx{row.label, {}, g, h};
  for (Mode mode : kAllModes) {
    const auto i = static_cast<std::size_t>(mode);
    const Verdict v = run(g, h, mode);
    ModeResult &r = row.modes[i];
    r.outcome = v.outcome;
    r.verified = v.outcome == Outcome::isomorphic && verify_mapping(g, h, v.mapping);
    r.rounds = v.rounds();
    r.counterexample = v.counterexample;

    ModeTally &t = report.tallies[i];
    const bool unsound =
        v.outcome == Outcome::isomorphic && (!r.verified || !truth);
    if (unsound) {
      ++t.soundness_violations;
      cx.modes.push_back(mode);
    } else if (truth) {
      if (r.verified) {
        ++t.true_positives;
      } else {
        ++t.false_negatives;
        if (v.outcome == Outcome::not_isomorphic)
          ++t.missed_as_negative;
        cx.modes.push_back(mode);
      }
    } else if (v.outcome == Outcome::not_isomorphic) {
      ++t.true_negatives;
    } else {
      ++t.unknown_on_negative;
    }
  }
  if (!cx.modes.empty())
    report.counterexamples.push_back(std::move(cx));
  report.rows.push_back(std::move(row));
}

inline std::string hex_seed(std::uint64_t s) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << s;
  return out.str();
}

inline FuzzReport fuzz_agreement(const FuzzConfig &cfg) {
  if (cfg.n > cfg.oracle_cap)
    throw OracleCapExceeded(cfg.n, cfg.oracle_cap);
  FuzzReport report;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_seed = split_seed(cfg.seed, trial);
    Rng rng(trial_seed);
    const Graph g = generate_random_graph(cfg.n, cfg.p, rng);
    Graph h;
    std::string kind;
    if (trial % 2 == 0) {
      h = permute(g, random_permutation(g, rng));
      kind = "relabeled";
    } else {
      for (int attempt = 0; attempt < 8 && kind.empty(); ++attempt) {
        Graph cand = generate_random_graph(cfg.n, cfg.p, rng);
        if (precheck(g, cand)) {
          h = std::move(cand);
          kind = "independent";
        }
      }
      if (kind.empty()) {
        const Graph sw = switch_edges(g, std::max<std::size_t>(1, g.edge_count()), rng);
        h = permute(sw, random_permutation(sw, rng));
        kind = "switched";
      }
    }
    const bool truth = exact_isomorphism(g, h, cfg.oracle_cap).isomorphic();
    score_pair(report, hex_seed(trial_seed), kind, g, h, truth, "oracle");
  }
  return report;
}

/// Scores hand-built pairs whose ground truth is known independently. Pairs
/// small enough for the oracle are cross-checked against it.
inline FuzzReport
fixture_agreement(const std::vector<fixtures::FixturePair> &pairs,
                  std::size_t oracle_cap = kDefaultOracleCap) {
  FuzzReport report;
  for (const auto &fp : pairs) {
    bool truth = fp.isomorphic;
    std::string source = fp.ground_truth;
    if (fp.g.vertex_count() <= oracle_cap) {
      const bool oracle = exact_isomorphism(fp.g, fp.h, oracle_cap).isomorphic();
      if (oracle != truth)
        throw std::logic_error("fixture " + fp.name +
                               " disagrees with the exact oracle");
      source = "oracle";
    }
    score_pair(report, fp.name, "fixture", fp.g, fp.h, truth, source);
  }
  return report;
}

inline void render_fuzz_report(const FuzzReport &report, std::ostream &out) {
  auto verdict = [](Outcome o) {
    switch (o) {
    case Outcome::isomorphic:
      return "ISO";
    case Outcome::not_isomorphic:
      return "NON";
    case Outcome::unknown:
      return "UNK";
    }
    return "?";
  };
  out << std::left << std::setw(20) << "# trial" << std::setw(12) << "kind"
      << std::setw(4) << "n" << std::setw(5) << "m" << std::setw(8)
      << "oracle" << std::setw(10) << "faithful" << std::setw(10)
      << "cautious" << std::setw(8) << "retry" << std::setw(10) << "verified"
      << "rounds\n";
  for (const auto &r : report.rows) {
    std::string verified, rounds;
    for (std::size_t i = 0; i < 3; ++i) {
      verified += r.modes[i].verified ? 'Y' : 'N';
      rounds += (i ? "/" : "") + std::to_string(r.modes[i].rounds);
    }
    out << std::left << std::setw(20) << r.label << std::setw(12) << r.kind
        << std::setw(4) << r.n << std::setw(5) << r.m << std::setw(8)
        << (r.truth_isomorphic ? "ISO" : "NON") << std::setw(10)
        << verdict(r.modes[0].outcome) << std::setw(10)
        << verdict(r.modes[1].outcome) << std::setw(8)
        << verdict(r.modes[2].outcome) << std::setw(10) << verified << rounds
        << '\n';
  }
  out << "# summary: " << report.rows.size() << " pairs\n";
  for (Mode m : kAllModes) {
    const ModeTally &t = report.tallies[static_cast<std::size_t>(m)];
    out << "# " << std::setw(9) << to_string(m)
        << " true-positives " << t.true_positives << " false-negatives "
        << t.false_negatives << " (as non-isomorphic " << t.missed_as_negative
        << ") true-negatives " << t.true_negatives << " unknown-on-negative "
        << t.unknown_on_negative << " soundness-violations "
        << t.soundness_violations << '\n';
  }
  out << "# counterexamples " << report.counterexamples.size() << '\n';
  for (const auto &cx : report.counterexamples) {
    out << "#   " << cx.label << " modes";
    for (Mode m : cx.modes)
      out << ' ' << to_string(m);
    out << '\n';
  }
}

/// Writes each counterexample as <label>-g.el / <label>-h.el under `dir`.
inline std::vector<std::filesystem::path>
dump_counterexamples(const FuzzReport &report,
                     const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto &cx : report.counterexamples) {
    for (auto [suffix, graph] : {std::pair{"-g.el", &cx.g}, {"-h.el", &cx.h}}) {
      auto path = dir / (cx.label + suffix);
      std::ofstream f(path);
      f << "# counterexample " << cx.label << " modes";
      for (Mode m : cx.modes)
        f << ' ' << to_string(m);
      f << '\n';
      render_edge_list(*graph, f);
      written.push_back(std::move(path));
    }
  }
  return written;
}

} // namespace posiso

#endif // POSISO_FUZZ_HPP
