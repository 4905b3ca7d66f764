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

#include <algorithm>
#include <limits>

#include "rabinchain/error.hpp"
#include "rabinchain/solvers.hpp"

namespace rc {
namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t
saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a) return saturated;
    return a * b;
}

std::uint64_t
factorial(int m)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= m; i++) f = saturating_mul(f, i);
    return f;
}

// Lexicographic rank of a permutation of 0..m-1.
int
rank_of(const std::vector<int> &perm)
{
    const int m = static_cast<int>(perm.size());
    int r = 0;
    for (int i = 0; i < m; i++) {
        int smaller = 0;
        for (int j = i + 1; j < m; j++)
            if (perm[j] < perm[i]) smaller++;
        r = r * (m - i) + smaller;
    }
    return r;
}

void
unrank(int r, int m, std::vector<int> &perm)
{
    std::vector<int> digits(m);
    for (int i = m - 1; i >= 0; i--) {
        const int base = m - i;
        digits[i] = r % base;
        r /= base;
    }
    std::vector<int> pool(m);
    for (int i = 0; i < m; i++) pool[i] = i;
    perm.resize(m);
    for (int i = 0; i < m; i++) {
        perm[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
}

// Moves the items whose bit is set in `hit` to the front, keeping the
// relative order within both groups.
void
move_to_front(const std::vector<int> &perm, std::uint64_t hit, std::vector<int> &out)
{
    out.clear();
    for (int x : perm)
        if (hit >> x & 1) out.push_back(x);
    for (int x : perm)
        if (!(hit >> x & 1)) out.push_back(x);
}

template <class Hit, class Priority>
RecordProduct
build_product(const Arena &arena, int items, bool reachable_only, const SolverLimits &limits, Hit hit,
              Priority priority)
{
    const int n = arena.vertex_count();
    const std::uint64_t records = factorial(items);
    const std::uint64_t total = saturating_mul(records, n);
    if (total > limits.max_product_states)
        throw resource_error("appearance-record product would have " +
                             (total == saturated ? std::string("more than 2^64") : std::to_string(total)) +
                             " states (limit " + std::to_string(limits.max_product_states) + ")");
    const int per = static_cast<int>(records);

    RecordProduct prod;
    std::vector<int> id(static_cast<std::size_t>(total), -1);
    auto intern = [&](int v, int r) {
        int &slot = id[static_cast<std::size_t>(v) * per + r];
        if (slot < 0) {
            slot = static_cast<int>(prod.vertex.size());
            prod.vertex.push_back(v);
            prod.record.push_back(r);
        }
        return slot;
    };

    if (!reachable_only)
        for (int v = 0; v < n; v++)
            for (int r = 0; r < per; r++) intern(v, r);
    prod.initial = intern(arena.initial(), 0);

    std::vector<int> perm, next;
    auto &g = prod.game;
    g.offset.push_back(0);
    for (std::size_t s = 0; s < prod.vertex.size(); s++) {
        const int v = prod.vertex[s];
        unrank(prod.record[s], items, perm);
        g.owner.push_back(arena.owner(v) == Player::steven ? 0 : 1);
        g.priority.push_back(priority(v, perm));
        move_to_front(perm, hit(v), next);
        const int r = rank_of(next);
        for (int w : arena.successors(v)) g.succ.push_back(intern(w, r));
        g.offset.push_back(static_cast<int>(g.succ.size()));
    }
    return prod;
}

} // namespace

// Record = order of pair indices, most recently B-visited first. Visiting v
// yields f = deepest position of a pair with v in B, g = deepest position of
// a pair with v in G (1-based, 0 if none), and priority max(2f+1, 2g). Pairs
// whose B recurs end up cycling in the front; a pair with G recurring and B
// finite settles behind them, so its G visits produce the top priority.
RecordProduct
iar_product(const Arena &arena, const RabinObjective &objective, bool reachable_only, const SolverLimits &limits)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
    return build_product(
        arena, objective.degree(), reachable_only, limits, [&](int v) { return objective.bad_mask(v); },
        [&](int v, const std::vector<int> &perm) {
            int f = 0, g = 0;
            for (int pos = 0; pos < static_cast<int>(perm.size()); pos++) {
                if (objective.bad_mask(v) >> perm[pos] & 1) f = pos + 1;
                if (objective.good_mask(v) >> perm[pos] & 1) g = pos + 1;
            }
            return std::max(2 * f + 1, 2 * g);
        });
}

// Record = order of colours, most recently seen first. Visiting v yields
// h = deepest position of a colour of v; the first h record entries then
// form the candidate infinity set, and the priority is 2h+2 if the family
// accepts that set and 2h+3 otherwise.
RecordProduct
lar_product(const Arena &arena, const MullerObjective &objective, bool reachable_only, const SolverLimits &limits)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
    if (objective.colour_count() > limits.max_muller_colours)
        throw resource_error("Muller objective has " + std::to_string(objective.colour_count()) +
                             " colours (limit " + std::to_string(limits.max_muller_colours) + ")");
    return build_product(
        arena, objective.colour_count(), reachable_only, limits, [&](int v) { return std::uint64_t{objective.colours(v)}; },
        [&](int v, const std::vector<int> &perm) {
            int h = 0;
            for (int pos = 0; pos < static_cast<int>(perm.size()); pos++)
                if (objective.colours(v) >> perm[pos] & 1) h = pos + 1;
            ColourSet seen = 0;
            for (int pos = 0; pos < h; pos++) seen |= ColourSet{1} << perm[pos];
            return objective.accepts(seen) ? 2 * h + 2 : 2 * h + 3;
        });
}

SolveResult
solve_rabin_iar(const Arena &arena, const RabinObjective &objective, const SolverLimits &limits)
{
    const auto prod = iar_product(arena, objective, true, limits);
    const auto sol = solve_parity_game(prod.game);
    return {sol.winner[prod.initial] == 0 ? Player::steven : Player::audrey, std::nullopt, std::nullopt};
}

SolveResult
solve_muller_lar(const Arena &arena, const MullerObjective &objective, const SolverLimits &limits)
{
    const auto prod = lar_product(arena, objective, true, limits);
    const auto sol = solve_parity_game(prod.game);
    return {sol.winner[prod.initial] == 0 ? Player::steven : Player::audrey, std::nullopt, std::nullopt};
}

} // namespace rc
