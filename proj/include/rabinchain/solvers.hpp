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
#include <optional>
#include <string>
#include <vector>

#include "rabinchain/arena.hpp"
#include "rabinchain/reductions.hpp"

namespace rc {

struct SolverLimits
{
    /// Product of Steven out-degrees the Rabin brute force may enumerate.
    std::uint64_t max_strategies = 1'000'000;
    /// States (vertex x record) in an appearance-record product.
    std::uint64_t max_product_states = 10'000'000;
    int max_muller_colours = 8;
    /// k^k column choices for the clique brute force.
    std::uint64_t max_clique_choices = 10'000'000;
    /// Worker threads for strategy enumeration. The answer does not depend on it.
    unsigned jobs = 1;
};

/// Outcome from the initial vertex. When Steven wins, `strategy` may hold a
/// positional winning strategy; when Audrey wins, `counter_play` may hold a
/// play she can force against the strategy the solver examined last.
struct SolveResult
{
    Player winner;
    std::optional<PositionalStrategy> strategy;
    std::optional<Lasso> counter_play;
};

/// Given Steven's positional strategy, looks for a play Audrey can force
/// that violates every Rabin pair: a reachable strongly connected set that,
/// for each pair, avoids G or meets B. Returns the play, or nothing when the
/// strategy is winning.
std::optional<Lasso> audrey_counter_check(const Arena &arena, const RabinObjective &objective,
                                          const PositionalStrategy &strategy);

/// Tries every positional Steven strategy in lexicographic order (vertex 0's
/// choice most significant) and keeps the first winning one.
SolveResult solve_rabin_bruteforce(const Arena &arena, const RabinObjective &objective, const SolverLimits &limits = {});

/// Index-appearance-record product solved as a parity game.
SolveResult solve_rabin_iar(const Arena &arena, const RabinObjective &objective, const SolverLimits &limits = {});

enum class RabinMethod { automatic, bruteforce, iar };

/// Dispatches on `method`; `automatic` picks whichever of the two is
/// estimated cheaper among those within limits.
SolveResult solve_rabin(const Arena &arena, const RabinObjective &objective, RabinMethod method,
                        const SolverLimits &limits = {});

SolveResult solve_parity_zielonka(const Arena &arena, const ParityObjective &objective);

/// Latest-appearance-record product solved as a parity game.
SolveResult solve_muller_lar(const Arena &arena, const MullerObjective &objective, const SolverLimits &limits = {});

/// Through the Rabin encoding of the objective.
SolveResult solve_genparity(const Arena &arena, const GenParityObjective &objective, const SolverLimits &limits = {});

/// One column per row, rows in order, columns tried in increasing order.
std::optional<std::vector<Cell>> solve_clique_bruteforce(const CliqueInstance &instance,
                                                         const SolverLimits &limits = {});

/// Number of positional Steven strategies, saturating at UINT64_MAX.
std::uint64_t strategy_count(const Arena &arena);

// Parity game engine shared by the record-product solvers.

/// Max-parity game; player 0 (Steven) wins plays whose largest priority seen
/// infinitely often is even.
struct ParityGame
{
    std::vector<std::uint8_t> owner; // 0 Steven, 1 Audrey
    std::vector<int> priority;
    std::vector<int> offset; // CSR successors
    std::vector<int> succ;

    int size() const { return static_cast<int>(owner.size()); }
};

struct ParitySolution
{
    std::vector<std::uint8_t> winner;
    /// For each vertex won by its owner, a successor that keeps it winning; -1 elsewhere.
    std::vector<int> strategy;
};

/// Recursive attractor decomposition (Zielonka).
ParitySolution solve_parity_game(const ParityGame &game);

/// Appearance-record product of an arena, with the projection of each
/// product state back to its arena vertex and record.
struct RecordProduct
{
    ParityGame game;
    std::vector<int> vertex;
    std::vector<int> record; // lexicographic rank of the permutation
    int initial;
};

/// Index appearance records over the k Rabin pairs. With `reachable_only`
/// false, every (vertex, record) combination is built; otherwise only what
/// is reachable from (initial vertex, identity record).
RecordProduct iar_product(const Arena &arena, const RabinObjective &objective, bool reachable_only,
                          const SolverLimits &limits = {});

/// Latest appearance records over the Muller colours.
RecordProduct lar_product(const Arena &arena, const MullerObjective &objective, bool reachable_only,
                          const SolverLimits &limits = {});

} // namespace rc
