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
#include <atomic>
#include <deque>
#include <limits>
#include <thread>

#include "internal.hpp"
#include "rabinchain/error.hpp"
#include "rabinchain/solvers.hpp"

namespace rc {
namespace detail {

BadCycleFinder::BadCycleFinder(const Arena &arena, const RabinObjective &objective)
    : arena_(arena), objective_(objective), member_(arena.vertex_count(), 0), index_(arena.vertex_count(), -1),
      low_(arena.vertex_count(), 0), on_stack_(arena.vertex_count(), 0)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
}

void
BadCycleFinder::reachable(const std::vector<int> *choice)
{
    reach_.clear();
    std::fill(member_.begin(), member_.end(), 0);
    reach_.push_back(arena_.initial());
    member_[arena_.initial()] = 1;
    for (std::size_t i = 0; i < reach_.size(); i++) {
        for (int w : successors(reach_[i], choice)) {
            if (!member_[w]) {
                member_[w] = 1;
                reach_.push_back(w);
            }
        }
    }
}

// Tarjan on the subgraph induced by `members`; only components that contain
// a cycle are reported.
void
BadCycleFinder::components(const std::vector<int> &members, const std::vector<int> *choice,
                           std::vector<std::vector<int>> &out)
{
    for (int v : members) {
        member_[v] = 1;
        index_[v] = -1;
        on_stack_[v] = 0;
    }
    int counter = 0;
    std::vector<int> stack;
    std::vector<std::pair<int, int>> dfs; // vertex, next successor position

    for (int root : members) {
        if (index_[root] != -1) continue;
        dfs.emplace_back(root, 0);
        index_[root] = low_[root] = counter++;
        stack.push_back(root);
        on_stack_[root] = 1;
        while (!dfs.empty()) {
            auto &[v, pos] = dfs.back();
            auto succ = successors(v, choice);
            if (pos < static_cast<int>(succ.size())) {
                int w = succ[pos++];
                if (!member_[w]) continue;
                if (index_[w] == -1) {
                    index_[w] = low_[w] = counter++;
                    stack.push_back(w);
                    on_stack_[w] = 1;
                    dfs.emplace_back(w, 0);
                } else if (on_stack_[w]) {
                    low_[v] = std::min(low_[v], index_[w]);
                }
                continue;
            }
            const int done = v;
            dfs.pop_back();
            if (!dfs.empty()) low_[dfs.back().first] = std::min(low_[dfs.back().first], low_[done]);
            if (low_[done] != index_[done]) continue;

            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack_[w] = 0;
                comp.push_back(w);
            } while (w != done);
            bool cyclic = comp.size() > 1;
            if (!cyclic)
                for (int x : successors(done, choice))
                    if (x == done) cyclic = true;
            if (cyclic) {
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    for (int v : members) member_[v] = 0;
}

std::optional<std::vector<int>>
BadCycleFinder::find(const std::vector<int> *choice)
{
    reachable(choice);
    std::fill(member_.begin(), member_.end(), 0);

    std::vector<std::vector<int>> work{reach_};
    std::vector<std::vector<int>> comps;
    while (!work.empty()) {
        std::vector<int> members = std::move(work.back());
        work.pop_back();
        comps.clear();
        components(members, choice, comps);
        // process in discovery order for determinism
        for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
            std::uint64_t good = 0, bad = 0;
            for (int v : *it) {
                good |= objective_.good_mask(v);
                bad |= objective_.bad_mask(v);
            }
            const std::uint64_t violated = good & ~bad;
            if (violated == 0) return std::move(*it);
            // No play confined to this component may keep a G vertex of a
            // pair whose B side is absent here.
            std::vector<int> rest;
            for (int v : *it)
                if (!(objective_.good_mask(v) & violated)) rest.push_back(v);
            if (!rest.empty()) work.push_back(std::move(rest));
        }
    }
    return std::nullopt;
}

std::vector<int>
BadCycleFinder::path_within(int from, int to, const std::vector<int> *choice, const std::vector<char> &allowed)
{
    // BFS; returns from, ..., to (at least one edge when from == to)
    const int n = arena_.vertex_count();
    std::vector<int> parent(n, -1);
    std::deque<int> queue;
    std::vector<char> seen(n, 0);
    for (int w : successors(from, choice)) {
        if (!allowed[w] || seen[w]) continue;
        seen[w] = 1;
        parent[w] = from;
        queue.push_back(w);
    }
    while (!queue.empty() && !seen[to]) {
        int u = queue.front();
        queue.pop_front();
        for (int w : successors(u, choice)) {
            if (!allowed[w] || seen[w]) continue;
            seen[w] = 1;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if (!seen[to]) throw error("internal: component is not strongly connected");
    std::vector<int> path{to};
    int cur = to;
    do {
        cur = parent[cur];
        path.push_back(cur);
    } while (cur != from);
    std::reverse(path.begin(), path.end());
    return path;
}

Lasso
BadCycleFinder::to_lasso(const std::vector<int> *choice, const std::vector<int> &component)
{
    const int n = arena_.vertex_count();
    std::vector<char> everywhere(n, 1);
    std::vector<char> inside(n, 0);
    for (int v : component) inside[v] = 1;

    Lasso lasso;
    int entry = arena_.initial();
    if (!inside[entry]) {
        // shortest path from the initial vertex into the component
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0);
        std::deque<int> queue{entry};
        seen[entry] = 1;
        int hit = -1;
        while (!queue.empty() && hit < 0) {
            int u = queue.front();
            queue.pop_front();
            for (int w : successors(u, choice)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = u;
                if (inside[w]) {
                    hit = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (hit < 0) throw error("internal: component is unreachable");
        for (int cur = parent[hit]; cur != -1; cur = parent[cur]) lasso.prefix.push_back(cur);
        std::reverse(lasso.prefix.begin(), lasso.prefix.end());
        entry = hit;
    }

    // closed walk from `entry` through every vertex of the component
    std::vector<char> visited(n, 0);
    std::size_t remaining = component.size() - 1;
    visited[entry] = 1;
    lasso.cycle.push_back(entry);
    int cur = entry;
    while (remaining > 0) {
        int target = -1;
        for (int v : component)
            if (!visited[v]) {
                target = v;
                break;
            }
        auto path = path_within(cur, target, choice, inside);
        for (std::size_t i = 1; i < path.size(); i++) {
            lasso.cycle.push_back(path[i]);
            if (!visited[path[i]]) {
                visited[path[i]] = 1;
                remaining--;
            }
        }
        cur = target;
    }
    auto back = path_within(cur, entry, choice, inside);
    for (std::size_t i = 1; i + 1 < back.size(); i++) lasso.cycle.push_back(back[i]);
    return lasso;
}

} // namespace detail

std::optional<Lasso>
audrey_counter_check(const Arena &arena, const RabinObjective &objective, const PositionalStrategy &strategy)
{
    const Arena restricted = restrict(arena, strategy);
    detail::BadCycleFinder finder(restricted, objective);
    auto comp = finder.find(nullptr);
    if (!comp) return std::nullopt;
    return finder.to_lasso(nullptr, *comp);
}

std::uint64_t
strategy_count(const Arena &arena)
{
    std::uint64_t total = 1;
    for (int v = 0; v < arena.vertex_count(); v++) {
        if (arena.owner(v) != Player::steven) continue;
        const auto d = static_cast<std::uint64_t>(arena.out_degree(v));
        if (total > std::numeric_limits<std::uint64_t>::max() / d) return std::numeric_limits<std::uint64_t>::max();
        total *= d;
    }
    return total;
}

namespace {

struct Enumeration
{
    const Arena &arena;
    std::vector<int> steven; // Steven vertices, most significant first
    std::uint64_t total;

    // Digits of `index` in the mixed radix given by the out-degrees.
    void decode(std::uint64_t index, std::vector<int> &choice) const
    {
        for (auto it = steven.rbegin(); it != steven.rend(); ++it) {
            const auto d = static_cast<std::uint64_t>(arena.out_degree(*it));
            choice[*it] = arena.successors(*it)[index % d];
            index /= d;
        }
    }

    // Advances `choice` to the next strategy in order (odometer).
    void next(std::vector<int> &choice, std::vector<int> &digit) const
    {
        for (std::size_t i = steven.size(); i-- > 0;) {
            const int v = steven[i];
            if (++digit[i] < arena.out_degree(v)) {
                choice[v] = arena.successors(v)[digit[i]];
                return;
            }
            digit[i] = 0;
            choice[v] = arena.successors(v)[0];
        }
    }

    void digits_of(std::uint64_t index, std::vector<int> &digit) const
    {
        for (std::size_t i = steven.size(); i-- > 0;) {
            const auto d = static_cast<std::uint64_t>(arena.out_degree(steven[i]));
            digit[i] = static_cast<int>(index % d);
            index /= d;
        }
    }
};

} // namespace

SolveResult
solve_rabin_bruteforce(const Arena &arena, const RabinObjective &objective, const SolverLimits &limits)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
    const std::uint64_t total = strategy_count(arena);
    if (total > limits.max_strategies)
        throw resource_error("Rabin brute force would enumerate " +
                             (total == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                 : std::to_string(total)) +
                             " strategies (limit " + std::to_string(limits.max_strategies) + ")");

    Enumeration en{arena, {}, total};
    for (int v = 0; v < arena.vertex_count(); v++)
        if (arena.owner(v) == Player::steven) en.steven.push_back(v);

    const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::atomic<std::uint64_t> best{total};

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        detail::BadCycleFinder finder(arena, objective);
        std::vector<int> choice(arena.vertex_count(), -1);
        std::vector<int> digit(en.steven.size(), 0);
        en.decode(begin, choice);
        en.digits_of(begin, digit);
        for (std::uint64_t idx = begin; idx < end; idx++) {
            if (idx >= best.load(std::memory_order_relaxed)) return;
            if (!finder.find(&choice)) {
                std::uint64_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
            en.next(choice, digit);
        }
    };

    if (jobs == 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; j++) {
            const std::uint64_t b = j * chunk, e = std::min(total, b + chunk);
            if (b < e) threads.emplace_back(worker, b, e);
        }
        for (auto &t : threads) t.join();
    }

    SolveResult res{Player::audrey, std::nullopt, std::nullopt};
    std::vector<int> choice(arena.vertex_count(), -1);
    if (best.load() < total) {
        en.decode(best.load(), choice);
        res.winner = Player::steven;
        res.strategy = PositionalStrategy{std::move(choice)};
        return res;
    }
    // Audrey: show how she beats the first strategy
    en.decode(0, choice);
    detail::BadCycleFinder finder(arena, objective);
    auto comp = finder.find(&choice);
    res.counter_play = finder.to_lasso(&choice, *comp);
    return res;
}

} // namespace rc
