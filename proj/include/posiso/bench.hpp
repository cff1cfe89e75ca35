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

#ifndef POSISO_BENCH_HPP
#define POSISO_BENCH_HPP

// Wall-clock scaling of the matcher on random relabeled pairs, with a
// least-squares slope of log(median time) against log(n).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "posiso/matcher.hpp"
#include "posiso/random.hpp"

namespace posiso {

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t samples = 3;
  std::uint64_t seed = 1;
  double p = 0.3;
  Mode mode = Mode::faithful;
};

struct BenchRow {
  std::size_t n = 0;
  double mean_edges = 0;
  double median_seconds = 0;
  std::size_t verified = 0;
  std::size_t samples = 0;
  std::size_t max_rounds = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Absent with fewer than two sizes.
  std::optional<double> slope;
};

/// Least-squares slope of log(y) on log(x).
inline std::optional<double> loglog_slope(const std::vector<double> &x,
                                          const std::vector<double> &y) {
  if (x.size() < 2 || x.size() != y.size())
    return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = k * sxx - sx * sx;
  if (den == 0)
    return std::nullopt;
  return (k * sxy - sx * sy) / den;
}

inline BenchReport run_bench(const BenchConfig &cfg) {
  if (cfg.samples == 0)
    throw std::invalid_argument("bench needs at least one sample per size");
  if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()))
    throw std::invalid_argument("bench sizes must be ascending");
  BenchReport report;
  std::vector<double> xs, ys;
  for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
    const std::size_t n = cfg.sizes[si];
    BenchRow row;
    row.n = n;
    row.samples = cfg.samples;
    std::vector<double> times;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      Rng rng(split_seed(cfg.seed, si * 1000003 + s));
      const Graph g = generate_random_graph(n, cfg.p, rng);
      const Graph h = permute(g, random_permutation(g, rng));
      row.mean_edges += static_cast<double>(g.edge_count());
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = run(g, h, cfg.mode);
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
      if (v.outcome == Outcome::isomorphic)
        ++row.verified;
      row.max_rounds = std::max(row.max_rounds, v.rounds());
    }
    row.mean_edges /= static_cast<double>(cfg.samples);
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    row.median_seconds = times.size() % 2
                             ? times[mid]
                             : 0.5 * (times[mid - 1] + times[mid]);
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(row.median_seconds, 1e-9));
    report.rows.push_back(row);
  }
  report.slope = loglog_slope(xs, ys);
  return report;
}

inline void render_bench(const BenchReport &r, std::ostream &out) {
  out << std::left << std::setw(8) << "# n" << std::setw(12) << "mean-m"
      << std::setw(16) << "median-seconds" << std::setw(10) << "verified"
      << "max-rounds\n";
  for (const auto &row : r.rows) {
    out << std::left << std::setw(8) << row.n << std::setw(12) << std::fixed
        << std::setprecision(1) << row.mean_edges << std::setw(16)
        << std::scientific << std::setprecision(4) << row.median_seconds
        << std::setw(10) << (std::to_string(row.verified) + "/" +
                             std::to_string(row.samples))
        << row.max_rounds << '\n';
  }
  out << std::defaultfloat;
  if (r.slope)
    out << "# log-log slope " << std::fixed << std::setprecision(3) << *r.slope
        << std::defaultfloat << '\n';
}

} // namespace posiso

#endif // POSISO_BENCH_HPP
