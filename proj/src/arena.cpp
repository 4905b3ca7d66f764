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

#include "rabinchain/arena.hpp"

#include <algorithm>
#include <set>

#include "rabinchain/error.hpp"

namespace rc {

const char *
to_string(Player p)
{
    return p == Player::steven ? "Steven" : "Audrey";
}

Arena::Arena(std::vector<Player> owner, const std::vector<Edge> &edges, int initial,
             std::vector<std::string> names)
    : owner_(std::move(owner)), initial_(initial), names_(std::move(names))
{
    const int n = vertex_count();
    if (n == 0) throw structural_error("arena has no vertices");
    if (initial_ < 0 || initial_ >= n)
        throw structural_error("initial vertex " + std::to_string(initial_) + " out of range");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
        throw structural_error("name table size does not match vertex count");

    std::vector<std::vector<int>> adj(n);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw structural_error("edge " + std::to_string(u) + " -> " + std::to_string(v) + " out of range");
        if (!seen.insert({u, v}).second)
            throw structural_error("duplicate edge " + std::to_string(u) + " -> " + std::to_string(v));
        adj[u].push_back(v);
    }

    offset_.reserve(n + 1);
    offset_.push_back(0);
    for (int v = 0; v < n; v++) {
        if (adj[v].empty()) throw structural_error("vertex " + name(v) + " has no successor");
        succ_.insert(succ_.end(), adj[v].begin(), adj[v].end());
        offset_.push_back(static_cast<int>(succ_.size()));
    }
}

bool
Arena::has_edge(int u, int v) const
{
    auto s = successors(u);
    return std::find(s.begin(), s.end(), v) != s.end();
}

std::vector<Edge>
Arena::edges() const
{
    std::vector<Edge> res;
    res.reserve(succ_.size());
    for (int u = 0; u < vertex_count(); u++)
        for (int v : successors(u)) res.emplace_back(u, v);
    return res;
}

std::string
Arena::name(int v) const
{
    if (names_.empty()) return std::to_string(v);
    return names_[v];
}

namespace {

std::vector<int>
normalize_set(std::vector<int> s, int n, const char *what)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= n))
        throw validation_error(std::string(what) + " contains an out-of-range vertex");
    return s;
}

} // namespace

RabinObjective::RabinObjective(int vertex_count, std::vector<RabinPair> pairs)
    : pairs_(std::move(pairs)), good_mask_(vertex_count, 0), bad_mask_(vertex_count, 0)
{
    if (pairs_.empty()) throw validation_error("Rabin objective needs at least one pair");
    if (pairs_.size() > 64) throw validation_error("Rabin objective supports at most 64 pairs");
    for (std::size_t i = 0; i < pairs_.size(); i++) {
        auto &p = pairs_[i];
        p.good = normalize_set(std::move(p.good), vertex_count, "good set");
        p.bad = normalize_set(std::move(p.bad), vertex_count, "bad set");
        for (int v : p.good) good_mask_[v] |= std::uint64_t{1} << i;
        for (int v : p.bad) bad_mask_[v] |= std::uint64_t{1} << i;
    }
}

Player
RabinObjective::winner_of(std::span<const int> inf) const
{
    std::uint64_t good = 0, bad = 0;
    for (int v : inf) {
        good |= good_mask_[v];
        bad |= bad_mask_[v];
    }
    return (good & ~bad) ? Player::steven : Player::audrey;
}

MullerObjective::MullerObjective(int colour_count, std::vector<ColourSet> colouring, Family family)
    : colour_count_(colour_count), colouring_(std::move(colouring)), family_(std::move(family))
{
    if (colour_count_ < 1 || colour_count_ > max_set_colours)
        throw validation_error("Muller colour count must be in 1.." + std::to_string(max_set_colours));
    const ColourSet universe =
        colour_count_ == 32 ? ~ColourSet{0} : (ColourSet{1} << colour_count_) - 1;
    for (ColourSet c : colouring_)
        if (c & ~universe) throw validation_error("vertex colour exceeds the colour count");
    if (auto *ex = std::get_if<ExplicitFamily>(&family_)) {
        std::sort(ex->members.begin(), ex->members.end());
        ex->members.erase(std::unique(ex->members.begin(), ex->members.end()), ex->members.end());
        for (ColourSet c : ex->members)
            if (c & ~universe) throw validation_error("family member exceeds the colour count");
    } else {
        auto &rule = std::get<RabinRuleFamily>(family_);
        if (rule.pairs < 1 || 2 * rule.pairs != colour_count_)
            throw validation_error("Rabin-rule family needs exactly two colours per pair");
    }
}

bool
MullerObjective::accepts(ColourSet s) const
{
    if (auto *ex = std::get_if<ExplicitFamily>(&family_))
        return std::binary_search(ex->members.begin(), ex->members.end(), s);
    const int k = std::get<RabinRuleFamily>(family_).pairs;
    for (int i = 0; i < k; i++) {
        bool good = s >> (2 * i) & 1;
        bool bad = s >> (2 * i + 1) & 1;
        if (good && !bad) return true;
    }
    return false;
}

ParityObjective::ParityObjective(int max_colour, std::vector<int> colour)
    : max_colour_(max_colour), colour_(std::move(colour))
{
    if (max_colour_ < 1) throw validation_error("parity colour bound must be positive");
    for (int c : colour_)
        if (c < 1 || c > max_colour_) throw validation_error("parity colour " + std::to_string(c) + " out of range");
}

GenParityObjective::GenParityObjective(int dimension, int max_colour, std::vector<int> colours)
    : dimension_(dimension), max_colour_(max_colour), colours_(std::move(colours))
{
    if (dimension_ < 1) throw validation_error("dimension must be positive");
    if (max_colour_ < 1) throw validation_error("colour bound must be positive");
    if (colours_.size() % dimension_ != 0) throw validation_error("colour vectors have inconsistent length");
    for (int c : colours_)
        if (c < 1 || c > max_colour_) throw validation_error("colour " + std::to_string(c) + " out of range");
}

int
objective_vertex_count(const Objective &obj)
{
    return std::visit([](const auto &o) { return o.vertex_count(); }, obj);
}

const char *
objective_kind(const Objective &obj)
{
    static constexpr const char *names[] = {"rabin", "muller", "parity", "genparity"};
    return names[obj.index()];
}

void
validate_lasso(const Arena &arena, const Lasso &lasso)
{
    const int n = arena.vertex_count();
    if (lasso.cycle.empty()) throw structural_error("lasso cycle is empty");
    for (int v : lasso.prefix)
        if (v < 0 || v >= n) throw structural_error("lasso vertex out of range");
    for (int v : lasso.cycle)
        if (v < 0 || v >= n) throw structural_error("lasso vertex out of range");

    std::vector<int> walk = lasso.prefix;
    walk.insert(walk.end(), lasso.cycle.begin(), lasso.cycle.end());
    walk.push_back(lasso.cycle.front());
    if (walk.front() != arena.initial()) throw structural_error("lasso does not start at the initial vertex");
    for (std::size_t i = 0; i + 1 < walk.size(); i++)
        if (!arena.has_edge(walk[i], walk[i + 1]))
            throw structural_error("lasso uses non-edge " + arena.name(walk[i]) + " -> " + arena.name(walk[i + 1]));
}

void
validate_strategy(const Arena &arena, const PositionalStrategy &strategy)
{
    if (static_cast<int>(strategy.choice.size()) != arena.vertex_count())
        throw structural_error("strategy size does not match arena");
    for (int v = 0; v < arena.vertex_count(); v++) {
        int c = strategy.choice[v];
        if (arena.owner(v) == Player::audrey) {
            if (c != -1) throw structural_error("strategy chooses at Audrey vertex " + arena.name(v));
        } else if (c < 0 || !arena.has_edge(v, c)) {
            throw structural_error("strategy has no valid choice at Steven vertex " + arena.name(v));
        }
    }
}

namespace {

bool
max_is_even(int m)
{
    return m % 2 == 0;
}

} // namespace

Player
evaluate_lasso(const Arena &arena, const Objective &objective, const Lasso &lasso)
{
    validate_lasso(arena, lasso);
    if (objective_vertex_count(objective) != arena.vertex_count())
        throw validation_error("objective and arena disagree on the vertex count");

    std::vector<int> inf = lasso.cycle;
    std::sort(inf.begin(), inf.end());
    inf.erase(std::unique(inf.begin(), inf.end()), inf.end());

    auto win = [](bool steven) { return steven ? Player::steven : Player::audrey; };
    switch (objective.index()) {
    case 0:
        return std::get<RabinObjective>(objective).winner_of(inf);
    case 1: {
        const auto &m = std::get<MullerObjective>(objective);
        ColourSet seen = 0;
        for (int v : inf) seen |= m.colours(v);
        return win(m.accepts(seen));
    }
    case 2: {
        const auto &p = std::get<ParityObjective>(objective);
        int top = 0;
        for (int v : inf) top = std::max(top, p.colour(v));
        return win(max_is_even(top));
    }
    default: {
        const auto &g = std::get<GenParityObjective>(objective);
        for (int t = 0; t < g.dimension(); t++) {
            int top = 0;
            for (int v : inf) top = std::max(top, g.colour(v, t));
            if (max_is_even(top)) return Player::steven;
        }
        return Player::audrey;
    }
    }
}

Arena
restrict(const Arena &arena, const PositionalStrategy &strategy)
{
    validate_strategy(arena, strategy);
    std::vector<Edge> edges;
    for (int u = 0; u < arena.vertex_count(); u++) {
        if (arena.owner(u) == Player::steven) {
            edges.emplace_back(u, strategy.choice[u]);
        } else {
            for (int v : arena.successors(u)) edges.emplace_back(u, v);
        }
    }
    return Arena(arena.owners(), edges, arena.initial(), arena.names());
}

} // namespace rc
