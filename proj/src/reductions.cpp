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

#include "rabinchain/reductions.hpp"

#include <algorithm>
#include <set>

#include "rabinchain/error.hpp"

namespace rc {

CliqueInstance::CliqueInstance(int k, const std::vector<std::pair<Cell, Cell>> &edges)
    : k_(k), adj_(static_cast<std::size_t>(k) * k * k * k, 0)
{
    if (k_ < 1 || k_ > max_clique_grid) throw validation_error("grid size must be in 1.." + std::to_string(max_clique_grid));
    std::set<std::pair<Cell, Cell>> canon;
    for (auto [a, b] : edges) {
        for (Cell c : {a, b})
            if (c.row < 0 || c.row >= k_ || c.col < 0 || c.col >= k_)
                throw validation_error("edge endpoint outside the grid");
        if (a == b) throw validation_error("self-edge in clique instance");
        if (b < a) std::swap(a, b);
        canon.insert({a, b});
    }
    edges_.assign(canon.begin(), canon.end());
    for (auto [a, b] : edges_) {
        adj_[index(a) * k_ * k_ + index(b)] = 1;
        adj_[index(b) * k_ * k_ + index(a)] = 1;
    }
}

std::string
clique_var_name(int k, int var)
{
    if (var <= k) return "x_" + std::to_string(var + 1);
    return "y_" + std::to_string(var - k);
}

Formula
clique_to_permsat(const CliqueInstance &instance)
{
    const int k = instance.size();
    const int x_last = k;
    std::vector<Clause> clauses;
    for (int j = 0; j < k; j++) clauses.push_back({{j, j + 1}});
    for (int i = 0; i < k; i++) clauses.push_back({{0, clique_y_var(k, i)}});
    for (int i = 0; i < k; i++) clauses.push_back({{clique_y_var(k, i), x_last}});

    // (y_a<x_b) | (x_{b+1}<y_a) | (y_c<x_d) | (x_{d+1}<y_c) forbids picking
    // both (a,b) and (c,d).
    for (int a = 0; a < k; a++)
        for (int b = 0; b < k; b++)
            for (int c = a + 1; c < k; c++)
                for (int d = 0; d < k; d++) {
                    if (instance.adjacent({a, b}, {c, d})) continue;
                    const int ya = clique_y_var(k, a), yc = clique_y_var(k, c);
                    clauses.push_back({{ya, b}, {b + 1, ya}, {yc, d}, {d + 1, yc}});
                }
    return Formula(2 * k + 1, 2, 4, std::move(clauses));
}

std::vector<Cell>
decode_permutation_to_clique(const CliqueInstance &instance, const Assignment &assignment)
{
    const int k = instance.size();
    const Formula phi = clique_to_permsat(instance);
    if (!check(phi, assignment)) throw contract_error("assignment does not satisfy the clique formula");

    std::vector<Cell> clique;
    for (int i = 0; i < k; i++) {
        const int y = assignment.position(clique_y_var(k, i));
        for (int j = 0; j < k; j++) {
            if (assignment.position(j) < y && y < assignment.position(j + 1)) {
                clique.push_back({i, j});
                break;
            }
        }
    }
    return clique;
}

namespace {

std::string
literal_name(int i, int j)
{
    return "[x_" + std::to_string(i + 1) + "<x_" + std::to_string(j + 1) + "]";
}

Arena
literal_game_arena(const Formula &formula)
{
    if (formula.used_alpha() > 2) throw validation_error("the game construction needs binary literals only");
    if (formula.clause_count() == 0) throw validation_error("the game construction needs at least one clause");

    const LiteralGameLayout layout{formula.variable_count(), formula.clause_count()};
    const int k = layout.variables;
    const int n = layout.vertex_count();

    std::vector<Player> owner(n, Player::steven);
    owner[layout.hub()] = Player::audrey;

    std::vector<std::string> names(n);
    names[layout.hub()] = "Δ";
    for (int c = 0; c < layout.clauses; c++) names[layout.clause_vertex(c)] = "[C_" + std::to_string(c + 1) + "]";
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (i != j) names[layout.literal_vertex(i, j)] = literal_name(i, j);

    std::vector<Edge> edges;
    for (int c = 0; c < layout.clauses; c++) edges.emplace_back(layout.hub(), layout.clause_vertex(c));
    for (int c = 0; c < layout.clauses; c++) {
        std::set<int> seen;
        for (const auto &lit : formula.clauses()[c]) {
            const int target = layout.literal_vertex(lit[0], lit[1]);
            if (seen.insert(target).second) edges.emplace_back(layout.clause_vertex(c), target);
        }
    }
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (i != j) edges.emplace_back(layout.literal_vertex(i, j), layout.hub());

    return Arena(std::move(owner), edges, layout.hub(), std::move(names));
}

} // namespace

RabinGame
permsat_to_rabin(const Formula &formula)
{
    Arena arena = literal_game_arena(formula);
    const LiteralGameLayout layout{formula.variable_count(), formula.clause_count()};
    const int k = layout.variables;

    std::vector<RabinPair> pairs(k);
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            if (j == i) continue;
            pairs[i].good.push_back(layout.literal_vertex(j, i));
            pairs[i].bad.push_back(layout.literal_vertex(i, j));
        }
    }
    RabinObjective objective(arena.vertex_count(), std::move(pairs));
    return {std::move(arena), std::move(objective)};
}

GenParityGame
permsat_to_genparity2(const Formula &formula)
{
    Arena arena = literal_game_arena(formula);
    const LiteralGameLayout layout{formula.variable_count(), formula.clause_count()};
    const int k = layout.variables;

    std::vector<int> colours(2 * static_cast<std::size_t>(arena.vertex_count()), 1);
    for (int j = 0; j < k; j++) {
        for (int i = 0; i < k; i++) {
            if (i == j) continue;
            // [x_j < x_i], 1-based numbers j+1 and i+1
            const int v = layout.literal_vertex(j, i);
            colours[2 * v] = 2 * (j + 1) + 1;
            colours[2 * v + 1] = 2 * (i + 1);
        }
    }
    GenParityObjective objective(2, 2 * k + 1, std::move(colours));
    return {std::move(arena), std::move(objective)};
}

PositionalStrategy
strategy_from_assignment(const Formula &formula, const Assignment &assignment)
{
    if (assignment.size() != formula.variable_count())
        throw validation_error("assignment does not match the formula's variables");
    const LiteralGameLayout layout{formula.variable_count(), formula.clause_count()};
    const int k = layout.variables;

    PositionalStrategy strategy{std::vector<int>(layout.vertex_count(), -1)};
    for (int c = 0; c < layout.clauses; c++) {
        const auto &clause = formula.clauses()[c];
        auto hit = std::find_if(clause.begin(), clause.end(),
                                [&](const ChainLiteral &lit) { return literal_holds(lit, assignment.positions()); });
        if (hit == clause.end())
            throw contract_error("clause " + std::to_string(c + 1) + " has no literal true under the assignment");
        strategy.choice[layout.clause_vertex(c)] = layout.literal_vertex((*hit)[0], (*hit)[1]);
    }
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (i != j) strategy.choice[layout.literal_vertex(i, j)] = layout.hub();
    return strategy;
}

MullerObjective
rabin_to_muller(const RabinObjective &objective)
{
    const int k = objective.degree();
    const int colours = 2 * k;
    if (colours > max_set_colours)
        throw validation_error("Rabin degree too large for a Muller colour set (" + std::to_string(k) + " pairs)");

    // good colour of pair i is 2i+1 (bit 2i), bad colour is 2i+2 (bit 2i+1)
    std::vector<ColourSet> colouring(objective.vertex_count(), 0);
    for (int v = 0; v < objective.vertex_count(); v++) {
        for (int i = 0; i < k; i++) {
            if (objective.good_mask(v) >> i & 1) colouring[v] |= ColourSet{1} << (2 * i);
            if (objective.bad_mask(v) >> i & 1) colouring[v] |= ColourSet{1} << (2 * i + 1);
        }
    }

    RabinRuleFamily rule{k};
    if (colours > max_materialized_colours) return MullerObjective(colours, std::move(colouring), rule);

    MullerObjective with_rule(colours, colouring, rule);
    ExplicitFamily family;
    for (ColourSet s = 0; s < (ColourSet{1} << colours); s++)
        if (with_rule.accepts(s)) family.members.push_back(s);
    return MullerObjective(colours, std::move(colouring), std::move(family));
}

GenParityObjective
rabin_to_genparity(const RabinObjective &objective)
{
    const int k = objective.degree();
    const int n = objective.vertex_count();
    std::vector<int> colours(static_cast<std::size_t>(n) * k, 1);
    for (int v = 0; v < n; v++) {
        for (int i = 0; i < k; i++) {
            if (objective.bad_mask(v) >> i & 1)
                colours[v * k + i] = 3;
            else if (objective.good_mask(v) >> i & 1)
                colours[v * k + i] = 2;
        }
    }
    return GenParityObjective(k, 3, std::move(colours));
}

namespace {

// G_i = colour >= 2i, B_i = colour >= 2i+1 for i = 1..count
void
append_parity_pairs(std::vector<RabinPair> &pairs, const std::vector<int> &colour, int count)
{
    for (int i = 1; i <= count; i++) {
        RabinPair p;
        for (int v = 0; v < static_cast<int>(colour.size()); v++) {
            if (colour[v] >= 2 * i) p.good.push_back(v);
            if (colour[v] >= 2 * i + 1) p.bad.push_back(v);
        }
        pairs.push_back(std::move(p));
    }
}

} // namespace

RabinObjective
genparity_to_rabin(const GenParityObjective &objective)
{
    const int n = objective.vertex_count();
    const int per_dim = (objective.max_colour() + 1) / 2;
    std::vector<RabinPair> pairs;
    std::vector<int> column(n);
    for (int t = 0; t < objective.dimension(); t++) {
        for (int v = 0; v < n; v++) column[v] = objective.colour(v, t);
        append_parity_pairs(pairs, column, per_dim);
    }
    return RabinObjective(n, std::move(pairs));
}

RabinObjective
parity_to_rabin(const ParityObjective &objective)
{
    // With a single colour the formula gives no pairs; one pair with empty
    // sets expresses the same (never satisfied) condition.
    std::vector<RabinPair> pairs;
    append_parity_pairs(pairs, objective.colours(), std::max(1, objective.max_colour() / 2));
    return RabinObjective(objective.vertex_count(), std::move(pairs));
}

} // namespace rc
