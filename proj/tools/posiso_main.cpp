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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posiso/cli.hpp"

namespace {

void add_mode(CLI::App *cmd, posiso::Mode &mode) {
  cmd->add_option_function<std::string>(
         "--mode",
         [&mode](const std::string &s) { mode = *posiso::parse_mode(s); },
         "failure handling: faithful (default), cautious, retry")
      ->check(CLI::IsMember({"faithful", "cautious", "retry"}));
}

} // namespace

int main(int argc, char **argv) {
  using namespace posiso;

  CLI::App app{"posiso: graph isomorphism by auxiliary-digraph peeling"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::size_t oracle_cap = kDefaultOracleCap;
  app.add_option("--seed", seed, "seed for every random choice")
      ->capture_default_str();
  app.add_option("--oracle-cap", oracle_cap,
                 "largest n the exact oracle will attempt")
      ->capture_default_str();

  cli::CheckOptions check;
  auto *check_cmd = app.add_subcommand("check", "decide isomorphism of two edge-list files");
  check_cmd->add_option("graph-g", check.graph_g, "edge-list file for G")->required();
  check_cmd->add_option("graph-h", check.graph_h, "edge-list file for H")->required();
  add_mode(check_cmd, check.mode);
  check_cmd->add_flag("--trace", check.trace, "print the round trace to stderr");
  check_cmd->add_flag("--cross-check", check.cross_check,
                      "also run the exact oracle");

  cli::CheckOptions map;
  map.mapping_only = true;
  auto *map_cmd = app.add_subcommand("map", "print only the mapping lines");
  map_cmd->add_option("graph-g", map.graph_g, "edge-list file for G")->required();
  map_cmd->add_option("graph-h", map.graph_h, "edge-list file for H")->required();
  add_mode(map_cmd, map.mode);
  map_cmd->add_flag("--trace", map.trace, "print the round trace to stderr");

  cli::VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "check a mapping file");
  verify_cmd->add_option("graph-g", verify.graph_g, "edge-list file for G")->required();
  verify_cmd->add_option("graph-h", verify.graph_h, "edge-list file for H")->required();
  verify_cmd->add_option("mapping", verify.mapping)->required();

  cli::FuzzOptions fuzz;
  std::string dump_dir;
  auto *fuzz_cmd = app.add_subcommand("fuzz", "differential test against the exact oracle");
  fuzz_cmd->add_option("--trials", fuzz.config.trials)->capture_default_str();
  fuzz_cmd->add_option("--n", fuzz.config.n)->capture_default_str();
  fuzz_cmd->add_option("--p", fuzz.config.p)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  fuzz_cmd->add_option("--dump-dir", dump_dir,
                       "write counterexample pairs here as edge lists");
  fuzz_cmd->add_flag("--fixtures", fuzz.fixtures,
                     "also score the regular-pair fixtures");

  cli::BenchOptions bench;
  bench.config.sizes = {50, 100, 200};
  double max_slope = 0;
  auto *bench_cmd = app.add_subcommand("bench", "time the matcher across sizes");
  bench_cmd->add_option("--sizes", bench.config.sizes)
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--samples", bench.config.samples)->capture_default_str();
  bench_cmd->add_option("--p", bench.config.p)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_mode(bench_cmd, bench.config.mode);
  auto *max_slope_opt = bench_cmd->add_option(
      "--max-slope", max_slope, "exit 1 if the log-log slope exceeds this");

  cli::GenOptions gen;
  std::string out_g, out_h;
  auto *gen_cmd = app.add_subcommand("gen", "write fixture or random graphs");
  gen_cmd->add_option("kind", gen.kind, "fixture, random, iso-pair, regular-pair")
      ->required();
  gen_cmd->add_option("--name", gen.name, "fixture name");
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--p", gen.p)->capture_default_str();
  gen_cmd->add_option("--degree", gen.degree)->capture_default_str();
  auto *out_g_opt = gen_cmd->add_option("--out-g", out_g);
  auto *out_h_opt = gen_cmd->add_option("--out-h", out_h);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }

  if (*check_cmd)
    return cli::cmd_check(check, std::cout, std::cerr);
  if (*map_cmd)
    return cli::cmd_check(map, std::cout, std::cerr);
  if (*verify_cmd)
    return cli::cmd_verify(verify, std::cout, std::cerr);
  if (*fuzz_cmd) {
    fuzz.config.seed = seed;
    fuzz.config.oracle_cap = oracle_cap;
    if (!dump_dir.empty())
      fuzz.dump_dir = dump_dir;
    return cli::cmd_fuzz(fuzz, std::cout, std::cerr);
  }
  if (*bench_cmd) {
    bench.config.seed = seed;
    if (*max_slope_opt)
      bench.max_slope = max_slope;
    return cli::cmd_bench(bench, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    gen.seed = seed;
    if (*out_g_opt)
      gen.out_g = out_g;
    if (*out_h_opt)
      gen.out_h = out_h;
    return cli::cmd_gen(gen, std::cout, std::cerr);
  }
  return cli::kUsageError;
}
