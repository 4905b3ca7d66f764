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
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rabinchain/error.hpp"
#include "rabinchain/instances.hpp"
#include "rabinchain/reductions.hpp"
#include "rabinchain/solvers.hpp"
#include "support.hpp"

using namespace rc;

namespace {

CliqueInstance
full_cross(int k)
{
    std::vector<std::pair<Cell, Cell>> edges;
    for (int a = 0; a < k; a++)
        for (int c = a + 1; c < k; c++)
            for (int b = 0; b < k; b++)
                for (int d = 0; d < k; d++) edges.push_back({{a, b}, {c, d}});
    return CliqueInstance(k, edges);
}

// clique (4,1), (1,2), (3,2), (2,4) in 1-based (row, column); no other edges
CliqueInstance
highlighted_instance()
{
    const std::vector<Cell> clique{{3, 0}, {0, 1}, {2, 1}, {1, 3}};
    std::vector<std::pair<Cell, Cell>> edges;
    for (std::size_t i = 0; i < clique.size(); i++)
        for (std::size_t j = i + 1; j < clique.size(); j++) edges.push_back({clique[i], clique[j]});
    return CliqueInstance(4, edges);
}

Assignment
assignment_from_names(int k, const std::vector<std::string> &names)
{
    std::vector<int> order;
    for (const auto &s : names) {
        for (int v = 0; v < 2 * k + 1; v++)
            if (clique_var_name(k, v) == s) order.push_back(v);
    }
    return Assignment::from_order(order);
}

bool
is_row_clique(const CliqueInstance &g, const std::vector<Cell> &cells)
{
    if (static_cast<int>(cells.size()) != g.size()) return false;
    for (int i = 0; i < g.size(); i++)
        if (cells[i].row != i) return false;
    for (std::size_t i = 0; i < cells.size(); i++)
        for (std::size_t j = i + 1; j < cells.size(); j++)
            if (!g.adjacent(cells[i], cells[j])) return false;
    return true;
}

int
count_width(const Formula &f, std::size_t w)
{
    return static_cast<int>(std::count_if(f.clauses().begin(), f.clauses().end(),
                                          [w](const Clause &c) { return c.size() == w; }));
}

} // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("clique instance canonicalizes edges")
{
    const CliqueInstance g(2, {{{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].first == Cell{0, 0});
    CHECK(g.adjacent({1, 1}, {0, 0}));
    CHECK_THROWS_AS(CliqueInstance(2, {{{0, 0}, {0, 0}}}), validation_error);
    CHECK_THROWS_AS(CliqueInstance(2, {{{0, 0}, {2, 0}}}), validation_error);
    CHECK_THROWS_AS(CliqueInstance(0, {}), validation_error);
    CHECK_THROWS_AS(CliqueInstance(65, {}), validation_error);
}

TEST_CASE("k=2 grid without cross-row edges")
{
    const Formula f = clique_to_permsat(CliqueInstance(2, {}));
    CHECK(f.variable_count() == 5);
    CHECK(count_width(f, 1) == 6);
    CHECK(count_width(f, 4) == 4);
    CHECK(f.clause_count() == 10);
    CHECK_FALSE(test::satisfiable_by_enumeration(f));
    CHECK_FALSE(solve_bruteforce(f));
}

TEST_CASE("k=2 grid with every cross-row edge")
{
    const Formula f = clique_to_permsat(full_cross(2));
    CHECK(f.clause_count() == 6);
    CHECK(count_width(f, 1) == 6);
    CHECK(solve_bruteforce(f));
}

TEST_CASE("unit clauses come first in a fixed order")
{
    const Formula f = clique_to_permsat(CliqueInstance(3, {}));
    const std::vector<Clause> units(f.clauses().begin(), f.clauses().begin() + 9);
    const std::vector<Clause> expected{{{0, 1}}, {{1, 2}}, {{2, 3}}, {{0, 4}}, {{0, 5}},
                                       {{0, 6}}, {{4, 3}}, {{5, 3}}, {{6, 3}}};
    CHECK(units == expected);
    // first four-clause forbids (1,1) with (2,1)
    CHECK(f.clauses()[9] == Clause{{4, 0}, {1, 4}, {5, 0}, {1, 5}});
}

TEST_CASE("highlighted clique instance")
{
    const CliqueInstance g = highlighted_instance();
    const Formula f = clique_to_permsat(g);
    const Assignment pi =
        assignment_from_names(4, {"x_1", "y_4", "x_2", "y_1", "y_3", "x_3", "x_4", "y_2", "x_5"});
    CHECK(check(f, pi));
    CHECK(decode_permutation_to_clique(g, pi) == std::vector<Cell>{{0, 1}, {1, 3}, {2, 1}, {3, 0}});

    // y_1 and y_3 swapped is also a witness
    const Assignment swapped =
        assignment_from_names(4, {"x_1", "y_4", "x_2", "y_3", "y_1", "x_3", "x_4", "y_2", "x_5"});
    CHECK(check(f, swapped));

    // the dashed non-edge ((4,3),(3,4)) has its forbidding clause
    const int y3 = clique_y_var(4, 2), y4 = clique_y_var(4, 3);
    const Clause dashed{{y3, 3}, {4, y3}, {y4, 2}, {3, y4}};
    CHECK(std::count(f.clauses().begin(), f.clauses().end(), dashed) == 1);
    const Assignment bad =
        assignment_from_names(4, {"x_1", "x_2", "y_1", "x_3", "y_4", "x_4", "y_3", "y_2", "x_5"});
    CHECK_FALSE(check(f, bad));
}

TEST_CASE("decoding")
{
    const CliqueInstance one(1, {});
    CHECK(decode_permutation_to_clique(one, Assignment::from_order({0, 2, 1})) == std::vector<Cell>{{0, 0}});
    CHECK_THROWS_AS(decode_permutation_to_clique(one, Assignment::identity(3)), contract_error);

    for (std::uint64_t seed = 0; seed < 20; seed++) {
        const CliqueInstance g = gen_clique(3, 0.3, seed, true);
        const auto w = solve_backtracking(clique_to_permsat(g));
        REQUIRE(w);
        CHECK(is_row_clique(g, decode_permutation_to_clique(g, *w)));
    }
}

TEST_CASE("chain soundness on small grids")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; t++) {
        const int k = 1 + t % 3;
        const CliqueInstance g = gen_clique(k, (t % 5) / 4.0, 900 + t, false);
        const bool clique = solve_clique_bruteforce(g).has_value();
        const Formula f = clique_to_permsat(g);
        const auto w = solve_backtracking(f);
        CHECK(w.has_value() == clique);
        if (k <= 2) {
            const auto game = permsat_to_rabin(f);
            CHECK((solve_rabin(game.arena, game.objective, RabinMethod::automatic).winner == Player::steven) ==
                  clique);
        }
    }
}

TEST_CASE("Rabin game for a single literal")
{
    const Formula f(2, 2, 1, {{{0, 1}}});
    const auto game = permsat_to_rabin(f);
    const Arena &a = game.arena;
    CHECK(a.vertex_count() == 4);
    CHECK(a.names() == std::vector<std::string>{"Δ", "[C_1]", "[x_1<x_2]", "[x_2<x_1]"});
    CHECK(a.owner(0) == Player::audrey);
    CHECK(a.owner(1) == Player::steven);
    CHECK(game.objective.pairs()[0] == RabinPair{{3}, {2}});
    CHECK(game.objective.pairs()[1] == RabinPair{{2}, {3}});
    const auto r = solve_rabin_bruteforce(a, game.objective);
    CHECK(r.winner == Player::steven);
}

TEST_CASE("Rabin game for a contradiction")
{
    const auto game = permsat_to_rabin(Formula(2, 2, 1, {{{0, 1}}, {{1, 0}}}));
    CHECK(solve_rabin_bruteforce(game.arena, game.objective).winner == Player::audrey);
    // Audrey has to alternate; no positional Audrey strategy wins
    CHECK(test::winner_by_double_enumeration(game.arena, game.objective) == Player::steven);
}

TEST_CASE("four-literal clause vertex has four successors")
{
    const Formula f(4, 2, 4, {{{0, 2}, {1, 0}, {1, 2}, {3, 1}}});
    const auto game = permsat_to_rabin(f);
    CHECK(game.arena.out_degree(1) == 4);
    CHECK_THROWS_AS(permsat_to_rabin(Formula(3, 3, 1, {{{0, 1, 2}}})), validation_error);
    CHECK_THROWS_AS(permsat_to_genparity2(Formula(3, 3, 1, {{{0, 1, 2}}})), validation_error);
}

TEST_CASE("game size formulas")
{
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        const int k = 2 + static_cast<int>(seed % 5), m = 1 + static_cast<int>(seed % 7);
        const Formula f = gen_permsat(k, m, 4, seed);
        const auto game = permsat_to_rabin(f);
        std::size_t lits = 0;
        for (const auto &c : f.clauses()) lits += c.size();
        CHECK(game.arena.vertex_count() == 1 + m + k * (k - 1));
        CHECK(game.arena.edge_count() == m + lits + k * (k - 1));
        CHECK(game.objective.degree() == k);
        for (const auto &p : game.objective.pairs()) {
            CHECK(p.good.size() == static_cast<std::size_t>(k - 1));
            CHECK(p.bad.size() == static_cast<std::size_t>(k - 1));
        }
    }
    for (int k = 1; k <= 5; k++) {
        const Formula f = clique_to_permsat(gen_clique(k, 0.5, k, false));
        CHECK(f.variable_count() == 2 * k + 1);
        CHECK(count_width(f, 1) == 3 * k);
    }
}

TEST_CASE("satisfying permutations give winning strategies")
{
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        const Formula f = gen_permsat(3 + seed % 3, 2 + seed % 6, 4, seed);
        const auto w = solve_bruteforce(f);
        if (!w) continue;
        const auto game = permsat_to_rabin(f);
        const auto s = strategy_from_assignment(f, *w);
        CHECK_FALSE(audrey_counter_check(game.arena, game.objective, s));
    }
}

TEST_CASE("Muller encoding")
{
    const Arena loop({Player::steven}, {{0, 0}}, 0);
    const RabinObjective good(1, {{{0}, {}}});
    const MullerObjective m = rabin_to_muller(good);
    CHECK(m.colour_count() == 2);
    CHECK(m.colours(0) == 0b01);
    CHECK(m.accepts(0b01));
    CHECK(std::get<ExplicitFamily>(m.family()).members == std::vector<ColourSet>{0b01});
    CHECK(solve_muller_lar(loop, m).winner == Player::steven);

    const MullerObjective both = rabin_to_muller(RabinObjective(1, {{{0}, {0}}}));
    CHECK(both.colours(0) == 0b11);
    CHECK_FALSE(both.accepts(0b11));
    CHECK(solve_muller_lar(loop, both).winner == Player::audrey);

    // more than 20 colours are kept as a rule
    std::vector<RabinPair> many(11, RabinPair{{0}, {}});
    const MullerObjective rule = rabin_to_muller(RabinObjective(1, many));
    CHECK(std::holds_alternative<RabinRuleFamily>(rule.family()));
    CHECK(rule.accepts(ColourSet{1} << 20));
    CHECK_FALSE(rule.accepts(ColourSet{3} << 20));
}

TEST_CASE("generalized parity encoding of Rabin")
{
    const RabinObjective r(3, {{{0, 1}, {1}}, {{}, {2}}});
    const GenParityObjective g = rabin_to_genparity(r);
    CHECK(g.dimension() == 2);
    CHECK(g.max_colour() == 3);
    CHECK(g.colour(1, 0) == 3);
    CHECK(g.colour(0, 0) == 2);
    CHECK(g.colour(2, 0) == 1);
    CHECK(g.colour(2, 1) == 3);
    CHECK(g.colour(0, 1) == 1);
}

TEST_CASE("parity and generalized parity to Rabin")
{
    const ParityObjective p(5, {1, 2, 3, 4, 5});
    const RabinObjective r = parity_to_rabin(p);
    REQUIRE(r.degree() == 2);
    CHECK(r.pairs()[0] == RabinPair{{1, 2, 3, 4}, {2, 3, 4}});
    CHECK(r.pairs()[1] == RabinPair{{3, 4}, {4}});

    const Arena loop({Player::audrey}, {{0, 0}}, 0);
    CHECK(evaluate_lasso(loop, parity_to_rabin(ParityObjective(2, {2})), Lasso{{}, {0}}) == Player::steven);
    CHECK(evaluate_lasso(loop, parity_to_rabin(ParityObjective(2, {1})), Lasso{{}, {0}}) == Player::audrey);
    CHECK(parity_to_rabin(ParityObjective(1, {1})).degree() == 1);

    // one dimension is the parity encoding up to the pair count
    const GenParityObjective one(1, 5, {1, 2, 3, 4, 5});
    const RabinObjective gr = genparity_to_rabin(one);
    CHECK(gr.degree() == 3);
    CHECK(gr.pairs()[0] == r.pairs()[0]);
    CHECK(gr.pairs()[1] == r.pairs()[1]);
    CHECK(gr.pairs()[2] == RabinPair{});

    CHECK(genparity_to_rabin(GenParityObjective(2, 3, {1, 2, 3, 1})).degree() == 4);
}

TEST_CASE("two-dimensional colouring of the literal game")
{
    const Formula f(2, 2, 1, {{{0, 1}}});
    const auto game = permsat_to_genparity2(f);
    const LiteralGameLayout layout{2, 1};
    const int lit12 = layout.literal_vertex(0, 1);
    CHECK(game.arena.name(lit12) == "[x_1<x_2]");
    CHECK(game.objective.colour(lit12, 0) == 3);
    CHECK(game.objective.colour(lit12, 1) == 4);
    CHECK(game.objective.colour(0, 0) == 1);
    CHECK(game.objective.colour(1, 1) == 1);
    CHECK(game.objective.max_colour() == 5);
    CHECK(game.arena == permsat_to_rabin(f).arena);
}

TEST_CASE("reductions are deterministic")
{
    const CliqueInstance g = gen_clique(3, 0.5, 4, false);
    CHECK(clique_to_permsat(g) == clique_to_permsat(gen_clique(3, 0.5, 4, false)));
    const Formula f = gen_permsat(4, 5, 4, 9);
    const auto a = permsat_to_rabin(f), b = permsat_to_rabin(f);
    CHECK(a.arena == b.arena);
    CHECK(a.objective == b.objective);
    CHECK(rabin_to_muller(a.objective) == rabin_to_muller(b.objective));
    CHECK(rabin_to_genparity(a.objective) == rabin_to_genparity(b.objective));
}

TEST_SUITE_END();
