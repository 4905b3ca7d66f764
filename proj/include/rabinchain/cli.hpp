/*
 * Copyright 2026 The rabinchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rabinchain/reductions.hpp"
#include "rabinchain/solvers.hpp"

namespace rc {

namespace exit_code {
constexpr int success = 0;
constexpr int usage = 1;
constexpr int input = 2;
constexpr int resource = 3;
constexpr int disagreement = 4;
constexpr int steven = 10; // also: satisfiable / clique exists
constexpr int audrey = 20; // also: unsatisfiable / no clique
} // namespace exit_code

/// Verdicts of the three solvers along clique -> permutation SAT -> Rabin game.
struct ChainReport
{
    bool clique;
    bool satisfiable;
    bool steven_wins;
    /// Decoded clique of the SAT witness is a one-per-row clique (true when
    /// there is no witness to check).
    bool witness_ok;

    bool agree() const { return clique == satisfiable && satisfiable == steven_wins && witness_ok; }
};

ChainReport check_chain(const CliqueInstance &instance, RabinMethod method = RabinMethod::automatic,
                        const SolverLimits &limits = {});

/// Unsatisfiable binary formula on k variables used for timing: random
/// clauses followed by the contradiction (x_1<x_2), (x_2<x_1), so that the
/// permutation brute force has to try all k! orders.
Formula bench_formula(int k, std::uint64_t seed);

struct BenchRow
{
    int k;
    std::string method;
    int runs;
    double mean_seconds;
    double median_seconds;
    bool skipped; // over the solver's limits
};

std::vector<BenchRow> run_bench(int k_min, int k_max, int runs, std::uint64_t seed, const SolverLimits &limits = {});

std::string bench_csv(const std::vector<BenchRow> &rows);

/// Entry point of the command line tool; returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rc
