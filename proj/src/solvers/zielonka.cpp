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
#include <array>
#include <deque>

#include "rabinchain/error.hpp"
#include "rabinchain/solvers.hpp"

namespace rc {
namespace {

class Zielonka
{
public:
    explicit Zielonka(const ParityGame &g)
        : g_(g), alive_(g.size(), 1), strategy_(g.size(), -1), attr_mark_(g.size(), 0), count_mark_(g.size(), 0),
          count_(g.size(), 0)
    {
        // predecessor lists
        pred_offset_.assign(g.size() + 1, 0);
        for (int w : g.succ) pred_offset_[w + 1]++;
        for (int v = 0; v < g.size(); v++) pred_offset_[v + 1] += pred_offset_[v];
        pred_.resize(g.succ.size());
        std::vector<int> fill(pred_offset_.begin(), pred_offset_.end() - 1);
        for (int v = 0; v < g.size(); v++)
            for (int i = g.offset[v]; i < g.offset[v + 1]; i++) pred_[fill[g.succ[i]]++] = v;
    }

    ParitySolution run()
    {
        std::vector<int> all(g_.size());
        for (int v = 0; v < g_.size(); v++) all[v] = v;
        auto regions = solve(std::move(all));
        ParitySolution sol;
        sol.winner.assign(g_.size(), 0);
        for (int v : regions[1]) sol.winner[v] = 1;
        sol.strategy.assign(g_.size(), -1);
        for (int v = 0; v < g_.size(); v++)
            if (g_.owner[v] == sol.winner[v]) sol.strategy[v] = strategy_[v];
        return sol;
    }

private:
    using Regions = std::array<std::vector<int>, 2>;

    // Attractor for `player` to `target` inside the alive subgame. Sets the
    // player's strategy on attracted vertices it owns.
    std::vector<int> attract(int player, const std::vector<int> &target)
    {
        ++epoch_;
        std::vector<int> set(target);
        for (int v : target) attr_mark_[v] = epoch_;
        for (std::size_t head = 0; head < set.size(); head++) {
            const int w = set[head];
            for (int i = pred_offset_[w]; i < pred_offset_[w + 1]; i++) {
                const int u = pred_[i];
                if (!alive_[u] || attr_mark_[u] == epoch_) continue;
                if (g_.owner[u] == player) {
                    strategy_[u] = w;
                } else {
                    if (count_mark_[u] != epoch_) {
                        count_mark_[u] = epoch_;
                        count_[u] = 0;
                        for (int j = g_.offset[u]; j < g_.offset[u + 1]; j++)
                            if (alive_[g_.succ[j]]) count_[u]++;
                    }
                    if (--count_[u] > 0) continue;
                }
                attr_mark_[u] = epoch_;
                set.push_back(u);
            }
        }
        return set;
    }

    // Solves the subgame on `verts`, which must equal the alive set on entry;
    // the alive set is restored on exit.
    Regions solve(std::vector<int> verts)
    {
        Regions won;
        std::vector<int> removed;
        while (true) {
            if (verts.empty()) break;
            int top = 0;
            for (int v : verts) top = std::max(top, g_.priority[v]);
            const int p = top & 1;

            std::vector<int> targets;
            for (int v : verts)
                if (g_.priority[v] == top) targets.push_back(v);
            const auto attracted = attract(p, targets);
            for (int v : attracted) alive_[v] = 0;
            std::vector<int> rest;
            for (int v : verts)
                if (alive_[v]) rest.push_back(v);
            Regions sub = solve(std::move(rest));
            for (int v : attracted) alive_[v] = 1;

            if (sub[1 - p].empty()) {
                for (int v : targets) {
                    if (g_.owner[v] != p) continue;
                    for (int j = g_.offset[v]; j < g_.offset[v + 1]; j++) {
                        if (alive_[g_.succ[j]]) {
                            strategy_[v] = g_.succ[j];
                            break;
                        }
                    }
                }
                won[p].insert(won[p].end(), verts.begin(), verts.end());
                break;
            }

            const auto lost = attract(1 - p, sub[1 - p]);
            won[1 - p].insert(won[1 - p].end(), lost.begin(), lost.end());
            for (int v : lost) alive_[v] = 0;
            removed.insert(removed.end(), lost.begin(), lost.end());
            std::vector<int> next;
            for (int v : verts)
                if (alive_[v]) next.push_back(v);
            verts = std::move(next);
        }
        for (int v : removed) alive_[v] = 1;
        return won;
    }

    const ParityGame &g_;
    std::vector<int> pred_offset_;
    std::vector<int> pred_;
    std::vector<char> alive_;
    std::vector<int> strategy_;
    std::vector<unsigned> attr_mark_;
    std::vector<unsigned> count_mark_;
    std::vector<int> count_;
    unsigned epoch_ = 0;
};

} // namespace

ParitySolution
solve_parity_game(const ParityGame &game)
{
    if (static_cast<int>(game.priority.size()) != game.size() || static_cast<int>(game.offset.size()) != game.size() + 1)
        throw structural_error("malformed parity game");
    for (int v = 0; v < game.size(); v++)
        if (game.offset[v + 1] <= game.offset[v]) throw structural_error("parity game vertex without successor");
    return Zielonka(game).run();
}

SolveResult
solve_parity_zielonka(const Arena &arena, const ParityObjective &objective)
{
    if (objective.vertex_count() != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");
    ParityGame g;
    const int n = arena.vertex_count();
    g.owner.resize(n);
    g.priority = objective.colours();
    g.offset.push_back(0);
    for (int v = 0; v < n; v++) {
        g.owner[v] = arena.owner(v) == Player::steven ? 0 : 1;
        for (int w : arena.successors(v)) g.succ.push_back(w);
        g.offset.push_back(static_cast<int>(g.succ.size()));
    }
    const auto sol = solve_parity_game(g);

    SolveResult res{sol.winner[arena.initial()] == 0 ? Player::steven : Player::audrey, std::nullopt, std::nullopt};
    if (res.winner == Player::steven) {
        PositionalStrategy s{std::vector<int>(n, -1)};
        for (int v = 0; v < n; v++) {
            if (arena.owner(v) != Player::steven) continue;
            s.choice[v] = sol.strategy[v] >= 0 ? sol.strategy[v] : arena.successors(v)[0];
        }
        res.strategy = std::move(s);
    }
    return res;
}

} // namespace rc
