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

// Test-only oracles and helpers. Nothing here calls into the solvers, so
// the checks built on it stay independent of the code under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "rabinchain/arena.hpp"
#include "rabinchain/permsat.hpp"

namespace rc::test {

/// Evaluates a formula on an order given as variables listed bottom-up,
/// without going through Assignment or literal_holds.
inline bool
order_satisfies(const Formula &f, const std::vector<int> &order)
{
    std::vector<int> where(order.size());
    for (std::size_t i = 0; i < order.size(); i++) where[order[i]] = static_cast<int>(i);
    for (const auto &clause : f.clauses()) {
        bool any = false;
        for (const auto &lit : clause) {
            bool chain = true;
            for (std::size_t i = 0; i + 1 < lit.size(); i++) chain = chain && where[lit[i]] < where[lit[i + 1]];
            any = any || chain;
        }
        if (!any) return false;
    }
    return true;
}

/// Exhaustive satisfiability over all k! orders.
inline bool
satisfiable_by_enumeration(const Formula &f)
{
    std::vector<int> order(f.variable_count());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order_satisfies(f, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// The unique play where both players follow fixed positional choices.
inline Lasso
play_of(const Arena &arena, const std::vector<int> &move)
{
    std::vector<int> walk;
    std::vector<int> first(arena.vertex_count(), -1);
    int v = arena.initial();
    while (first[v] < 0) {
        first[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        v = move[v];
    }
    Lasso l;
    l.prefix.assign(walk.begin(), walk.begin() + first[v]);
    l.cycle.assign(walk.begin() + first[v], walk.end());
    return l;
}

/// Calls f(move) for every combination of one successor per vertex in
/// `players` (others keep move[v]).
template <class F>
bool
any_positional(const Arena &arena, Player who, std::vector<int> &move, F &&f, int from = 0)
{
    if (from == arena.vertex_count()) return f(move);
    if (arena.owner(from) != who) return any_positional(arena, who, move, f, from + 1);
    for (int w : arena.successors(from)) {
        move[from] = w;
        if (any_positional(arena, who, move, f, from + 1)) return true;
    }
    return false;
}

/// Winner of a positionally determined game (parity) by enumerating both
/// players' positional strategies: Steven wins iff some strategy of his
/// beats every strategy of Audrey.
inline Player
winner_by_double_enumeration(const Arena &arena, const Objective &objective)
{
    std::vector<int> move(arena.vertex_count(), -1);
    const bool steven = any_positional(arena, Player::steven, move, [&](std::vector<int> &m1) {
        std::vector<int> m2 = m1;
        const bool audrey_beats = any_positional(arena, Player::audrey, m2, [&](std::vector<int> &full) {
            return evaluate_lasso(arena, objective, play_of(arena, full)) == Player::audrey;
        });
        return !audrey_beats;
    });
    return steven ? Player::steven : Player::audrey;
}

/// Random lasso: a random walk from the initial vertex, closed by a back
/// edge to a random earlier position once one exists. Cycles may revisit
/// vertices.
inline Lasso
random_lasso(const Arena &arena, std::mt19937_64 &rng)
{
    std::vector<int> walk{arena.initial()};
    const std::size_t min_len = 1 + rng() % 8;
    while (true) {
        const int last = walk.back();
        if (walk.size() >= min_len) {
            std::vector<std::size_t> back;
            for (std::size_t j = 0; j < walk.size(); j++)
                if (arena.has_edge(last, walk[j])) back.push_back(j);
            if (!back.empty()) {
                const std::size_t j = back[rng() % back.size()];
                return Lasso{{walk.begin(), walk.begin() + j}, {walk.begin() + j, walk.end()}};
            }
        }
        auto s = arena.successors(last);
        walk.push_back(s[rng() % s.size()]);
    }
}

inline std::filesystem::path
scratch_dir(const std::string &tag)
{
    auto dir = std::filesystem::temp_directory_path() / ("rabinchain-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace rc::test
