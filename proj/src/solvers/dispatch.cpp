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

#include <limits>

#include "rabinchain/error.hpp"
#include "rabinchain/solvers.hpp"

namespace rc {
namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t
mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a) return saturated;
    return a * b;
}

std::uint64_t
record_count(int items)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= items; i++) f = mul(f, i);
    return f;
}

} // namespace

SolveResult
solve_rabin(const Arena &arena, const RabinObjective &objective, RabinMethod method, const SolverLimits &limits)
{
    switch (method) {
    case RabinMethod::bruteforce:
        return solve_rabin_bruteforce(arena, objective, limits);
    case RabinMethod::iar:
        return solve_rabin_iar(arena, objective, limits);
    case RabinMethod::automatic:
        break;
    }

    const std::uint64_t n = arena.vertex_count();
    const std::uint64_t work_per_pass = n + arena.edge_count();
    const std::uint64_t strategies = strategy_count(arena);
    const std::uint64_t states = mul(record_count(objective.degree()), n);

    const bool brute_ok = strategies <= limits.max_strategies;
    const bool iar_ok = states <= limits.max_product_states;
    if (!brute_ok && !iar_ok)
        throw resource_error("Rabin game too large for both brute force (" + std::to_string(strategies) +
                             " strategies) and the record product");
    // Zielonka revisits the product roughly once per priority level.
    const std::uint64_t brute_cost = mul(strategies, work_per_pass);
    const std::uint64_t iar_cost =
        mul(mul(states, (arena.edge_count() + n - 1) / n + objective.degree()), 2 * objective.degree() + 1);
    if (brute_ok && (!iar_ok || brute_cost <= iar_cost)) return solve_rabin_bruteforce(arena, objective, limits);
    return solve_rabin_iar(arena, objective, limits);
}

SolveResult
solve_genparity(const Arena &arena, const GenParityObjective &objective, const SolverLimits &limits)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
    return solve_rabin(arena, genparity_to_rabin(objective), RabinMethod::automatic, limits);
}

std::optional<std::vector<Cell>>
solve_clique_bruteforce(const CliqueInstance &instance, const SolverLimits &limits)
{
    const int k = instance.size();
    std::uint64_t choices = 1;
    for (int i = 0; i < k; i++) choices = mul(choices, k);
    if (choices > limits.max_clique_choices)
        throw resource_error("clique brute force would try " + std::to_string(k) + "^" + std::to_string(k) +
                             " column choices (limit " + std::to_string(limits.max_clique_choices) + ")");

    // Rows are filled in order and a row's column is rejected as soon as it
    // misses an earlier row's pick, which visits choices lexicographically.
    std::vector<Cell> picked;
    picked.reserve(k);
    auto extend = [&](auto &self, int row) -> bool {
        if (row == k) return true;
        for (int col = 0; col < k; col++) {
            const Cell c{row, col};
            bool ok = true;
            for (const Cell &p : picked)
                if (!instance.adjacent(p, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(c);
            if (self(self, row + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    if (extend(extend, 0)) return picked;
    return std::nullopt;
}

} // namespace rc
