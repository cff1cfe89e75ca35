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

#ifndef POSISO_CLI_HPP
#define POSISO_CLI_HPP

// Subcommand bodies for the `posiso` tool. They take already-parsed options
// and write to the given streams so tests can drive them without a process.
//
// Exit status: 0 isomorphic (verified mapping printed), 1 not isomorphic,
// 2 unknown, 3 usage or input error.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "posiso/bench.hpp"
#include "posiso/edge_list.hpp"
#include "posiso/fixtures.hpp"
#include "posiso/fuzz.hpp"
#include "posiso/matcher.hpp"
#include "posiso/oracle.hpp"
#include "posiso/random.hpp"

namespace posiso::cli {

enum ExitStatus : int {
  kIsomorphic = 0,
  kNotIsomorphic = 1,
  kUnknown = 2,
  kUsageError = 3,
};

inline int exit_status(Outcome o) {
  switch (o) {
  case Outcome::isomorphic:
    return kIsomorphic;
  case Outcome::not_isomorphic:
    return kNotIsomorphic;
  case Outcome::unknown:
    return kUnknown;
  }
  return kUnknown;
}

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Graph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path + ": cannot open");
  try {
    return parse_edge_list(in);
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Mapping load_mapping(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path + ": cannot open");
  try {
    return parse_mapping(in);
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
}

struct CheckOptions {
  std::string graph_g;
  std::string graph_h;
  Mode mode = Mode::faithful;
  bool trace = false;
  /// Print only the mapping lines (the `map` subcommand).
  bool mapping_only = false;
  /// Also consult the exact oracle when n <= oracle_cap.
  bool cross_check = false;
  std::size_t oracle_cap = kDefaultOracleCap;
};

inline int cmd_check(const CheckOptions &opt, std::ostream &out,
                     std::ostream &err) {
  Graph g, h;
  try {
    g = load_graph(opt.graph_g);
    h = load_graph(opt.graph_h);
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const Verdict v = run(g, h, opt.mode);
  if (opt.trace)
    render_trace(v, err);
  if (!opt.mapping_only)
    out << to_string(v.outcome) << " (" << to_string(opt.mode) << "): "
        << v.reason << '\n';
  if (v.outcome == Outcome::isomorphic)
    render_mapping(v.mapping.sorted(), out);
  if (opt.cross_check && !opt.mapping_only) {
    if (g.vertex_count() <= opt.oracle_cap) {
      const auto o = exact_isomorphism(g, h, opt.oracle_cap);
      out << "oracle: " << (o.isomorphic() ? "isomorphic" : "not-isomorphic")
          << " after " << o.nodes_explored << " nodes\n";
    } else {
      out << "oracle: skipped, n=" << g.vertex_count() << " exceeds cap "
          << opt.oracle_cap << '\n';
    }
  }
  return exit_status(v.outcome);
}

struct VerifyOptions {
  std::string graph_g;
  std::string graph_h;
  std::string mapping;
};

inline int cmd_verify(const VerifyOptions &opt, std::ostream &out,
                      std::ostream &err) {
  try {
    const Graph g = load_graph(opt.graph_g);
    const Graph h = load_graph(opt.graph_h);
    const Mapping p = load_mapping(opt.mapping);
    if (verify_mapping(g, h, p)) {
      out << "mapping verified: " << p.size() << " pairs, " << g.edge_count()
          << " edges preserved\n";
      return kIsomorphic;
    }
    out << "mapping rejected\n";
    return kNotIsomorphic;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct FuzzOptions {
  FuzzConfig config;
  std::optional<std::string> dump_dir;
  /// Append the regular-pair fixtures to the report.
  bool fixtures = false;
};

/// Returns 0 unless a soundness violation was observed.
inline int cmd_fuzz(const FuzzOptions &opt, std::ostream &out,
                    std::ostream &err) {
  FuzzReport report;
  try {
    report = fuzz_agreement(opt.config);
  } catch (const OracleCapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out << "# fuzz trials " << opt.config.trials << " n " << opt.config.n
      << " p " << opt.config.p << " seed " << opt.config.seed << '\n';
  render_fuzz_report(report, out);
  std::size_t violations = report.soundness_violations();
  if (opt.fixtures) {
    const FuzzReport fx =
        fixture_agreement(fixtures::regular_pairs(opt.config.seed),
                          opt.config.oracle_cap);
    out << "# fixture pairs\n";
    render_fuzz_report(fx, out);
    violations += fx.soundness_violations();
    if (opt.dump_dir)
      dump_counterexamples(fx, *opt.dump_dir);
  }
  if (opt.dump_dir)
    dump_counterexamples(report, *opt.dump_dir);
  return violations == 0 ? 0 : kUnknown;
}

struct BenchOptions {
  BenchConfig config;
  std::optional<double> max_slope;
};

/// Returns 1 when the fitted slope exceeds `max_slope`.
inline int cmd_bench(const BenchOptions &opt, std::ostream &out,
                     std::ostream &err) {
  BenchReport r;
  try {
    r = run_bench(opt.config);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  render_bench(r, out);
  if (opt.max_slope && r.slope && *r.slope > *opt.max_slope) {
    out << "# slope exceeds ceiling " << *opt.max_slope << '\n';
    return 1;
  }
  return 0;
}

struct GenOptions {
  std::string kind;
  std::string name;
  std::size_t n = 8;
  double p = 0.5;
  std::size_t degree = 3;
  std::uint64_t seed = 1;
  std::optional<std::string> out_g;
  std::optional<std::string> out_h;
};

namespace detail {

inline bool write_graph(const Graph &g, const std::optional<std::string> &path,
                        std::ostream &out, std::ostream &err) {
  if (!path) {
    render_edge_list(g, out);
    return true;
  }
  std::ofstream f(*path);
  if (!f) {
    err << "error: " << *path << ": cannot write\n";
    return false;
  }
  render_edge_list(g, f);
  return true;
}

} // namespace detail

/// kinds: fixture (--name), random, iso-pair, regular-pair.
inline int cmd_gen(const GenOptions &opt, std::ostream &out,
                   std::ostream &err) {
  Rng rng(opt.seed);
  if (opt.kind == "fixture") {
    if (auto g = fixtures::named_graph(opt.name))
      return detail::write_graph(*g, opt.out_g, out, err) ? 0 : kUsageError;
    if (auto p = fixtures::named_mapping(opt.name)) {
      render_mapping(*p, out);
      return 0;
    }
    err << "error: unknown fixture '" << opt.name << "'; known:";
    for (auto n : fixtures::graph_names())
      err << ' ' << n;
    err << " fig-phi appendix-phi\n";
    return kUsageError;
  }
  if (opt.p < 0.0 || opt.p > 1.0) {
    err << "error: --p must lie in [0, 1]\n";
    return kUsageError;
  }
  if (opt.kind == "random") {
    return detail::write_graph(generate_random_graph(opt.n, opt.p, rng),
                               opt.out_g, out, err)
               ? 0
               : kUsageError;
  }
  if (opt.kind == "iso-pair" || opt.kind == "regular-pair") {
    if (!opt.out_g || !opt.out_h) {
      err << "error: " << opt.kind << " needs --out-g and --out-h\n";
      return kUsageError;
    }
    Graph g, h;
    if (opt.kind == "iso-pair") {
      g = generate_random_graph(opt.n, opt.p, rng);
      const Permutation pi = random_permutation(g, rng);
      h = permute(g, pi);
      out << "# permutation (g -> h)\n";
      for (VertexId v : g.vertices())
        out << v << ' ' << pi[v] << '\n';
    } else {
      auto r = random_regular_graph(opt.n, opt.degree, rng);
      if (!r) {
        err << "error: no simple " << opt.degree << "-regular graph on "
            << opt.n << " vertices\n";
        return kUsageError;
      }
      g = std::move(*r);
      const Graph sw = switch_edges(g, g.edge_count(), rng);
      h = permute(sw, random_permutation(sw, rng));
      out << "# " << opt.degree << "-regular pair; h is an edge-switched "
          << "relabeling of g, isomorphism not implied\n";
    }
    const bool ok = detail::write_graph(g, opt.out_g, out, err) &&
                    detail::write_graph(h, opt.out_h, out, err);
    return ok ? 0 : kUsageError;
  }
  err << "error: unsupported kind '" << opt.kind
      << "' (fixture, random, iso-pair, regular-pair)\n";
  return kUsageError;
}

} // namespace posiso::cli

#endif // POSISO_CLI_HPP
