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

#include <random>

#include "rabinchain/error.hpp"
#include "rabinchain/instances.hpp"
#include "rabinchain/reductions.hpp"
#include "support.hpp"

using namespace rc;

namespace {

Arena
self_loop(Player owner = Player::steven)
{
    return Arena({owner}, {{0, 0}}, 0);
}

} // namespace

TEST_SUITE_BEGIN("arena");

TEST_CASE("arena invariants are enforced at construction")
{
    using P = Player;
    CHECK_THROWS_AS(Arena({P::steven, P::audrey}, {{0, 1}}, 0), structural_error); // 1 is a dead end
    CHECK_THROWS_AS(Arena({P::steven}, {{0, 0}, {0, 0}}, 0), structural_error);
    CHECK_THROWS_AS(Arena({P::steven}, {{0, 0}}, 1), structural_error);
    CHECK_THROWS_AS(Arena({P::steven}, {{0, 3}}, 0), structural_error);
    CHECK_THROWS_AS(Arena({}, {}, 0), structural_error);

    Arena a({P::steven, P::audrey}, {{0, 1}, {1, 0}, {1, 1}}, 1, {"s", "a"});
    CHECK(a.vertex_count() == 2);
    CHECK(a.edge_count() == 3);
    CHECK(a.out_degree(1) == 2);
    CHECK(a.name(0) == "s");
    CHECK(a.has_edge(1, 1));
    CHECK_FALSE(a.has_edge(0, 0));
}

TEST_CASE("Rabin evaluation on a self-loop")
{
    const Arena a = self_loop();
    const Lasso l{{}, {0}};
    CHECK(evaluate_lasso(a, RabinObjective(1, {{{0}, {}}}), l) == Player::steven);
    CHECK(evaluate_lasso(a, RabinObjective(1, {{{0}, {0}}}), l) == Player::audrey);
    CHECK(evaluate_lasso(a, RabinObjective(1, {{{}, {}}}), l) == Player::audrey);
}

TEST_CASE("parity, Muller and generalized parity evaluation")
{
    using P = Player;
    // 0 -> 1 -> 2 -> 1
    const Arena a({P::steven, P::steven, P::audrey}, {{0, 1}, {1, 2}, {2, 1}}, 0);
    const Lasso l{{0}, {1, 2}};
    CHECK(evaluate_lasso(a, ParityObjective(4, {4, 1, 2}), l) == Player::steven); // 4 only in prefix
    CHECK(evaluate_lasso(a, ParityObjective(4, {1, 3, 2}), l) == Player::audrey);

    const MullerObjective m(2, {0b11, 0b01, 0b10}, ExplicitFamily{{0b11}});
    CHECK(evaluate_lasso(a, m, l) == Player::steven);
    const MullerObjective m2(2, {0b11, 0b01, 0b00}, ExplicitFamily{{0b11}});
    CHECK(evaluate_lasso(a, m2, l) == Player::audrey);

    // dimension 1 odd, dimension 2 even on the cycle
    const GenParityObjective g(2, 3, {1, 1, 3, 2, 1, 1});
    CHECK(evaluate_lasso(a, g, l) == Player::steven);
    const GenParityObjective g2(2, 3, {1, 1, 3, 3, 1, 1});
    CHECK(evaluate_lasso(a, g2, l) == Player::audrey);
}

TEST_CASE("evaluate_lasso rejects malformed inputs")
{
    using P = Player;
    const Arena a({P::steven, P::steven}, {{0, 1}, {1, 1}}, 0);
    const RabinObjective r(2, {{{1}, {}}});
    CHECK_THROWS_AS(evaluate_lasso(a, r, Lasso{{}, {0}}), structural_error); // 0 -> 0 is no edge
    CHECK_THROWS_AS(evaluate_lasso(a, r, Lasso{{1}, {1}}), structural_error); // does not start at 0
    CHECK_THROWS_AS(evaluate_lasso(a, r, Lasso{{0}, {}}), structural_error);
    CHECK_THROWS_AS(evaluate_lasso(a, RabinObjective(3, {{{1}, {}}}), Lasso{{0}, {1}}), validation_error);
    CHECK(evaluate_lasso(a, r, Lasso{{0}, {1}}) == Player::steven);

    CHECK_THROWS_AS(ParityObjective(2, {1, 3}), validation_error);
    CHECK_THROWS_AS(ParityObjective(2, {0, 1}), validation_error);
    CHECK_THROWS_AS(GenParityObjective(2, 2, {1, 2, 3, 1}), validation_error);
    CHECK_THROWS_AS(MullerObjective(2, {0b100}, ExplicitFamily{}), validation_error);
    CHECK_THROWS_AS(RabinObjective(2, {{{2}, {}}}), validation_error);
    CHECK_THROWS_AS(RabinObjective(2, {}), validation_error);
}

TEST_CASE("lasso evaluation is invariant under rotation and prefix extension")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; t++) {
        const auto g = gen_rabin(5, 2, 0.4, 1000 + t);
        const Lasso l = test::random_lasso(g.arena, rng);
        const Player w = evaluate_lasso(g.arena, g.objective, l);

        Lasso rotated = l;
        const std::size_t r = rng() % l.cycle.size();
        // move the first r cycle vertices into the prefix, then re-append them
        rotated.prefix.insert(rotated.prefix.end(), l.cycle.begin(), l.cycle.begin() + r);
        rotated.cycle.assign(l.cycle.begin() + r, l.cycle.end());
        rotated.cycle.insert(rotated.cycle.end(), l.cycle.begin(), l.cycle.begin() + r);
        CHECK(evaluate_lasso(g.arena, g.objective, rotated) == w);

        Lasso unrolled = l;
        unrolled.prefix.insert(unrolled.prefix.end(), l.cycle.begin(), l.cycle.end());
        CHECK(evaluate_lasso(g.arena, g.objective, unrolled) == w);
    }
}

TEST_CASE("Rabin and its Muller encoding agree on random 5-vertex lassos")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; t++) {
        const auto g = gen_rabin(5, 1 + t % 3, 0.4, 5000 + t);
        const Lasso l = test::random_lasso(g.arena, rng);
        CHECK(evaluate_lasso(g.arena, g.objective, l) == evaluate_lasso(g.arena, rabin_to_muller(g.objective), l));
    }
}

TEST_CASE("restrict keeps exactly the chosen Steven edge")
{
    using P = Player;
    SUBCASE("no Steven vertices")
    {
        const Arena a({P::audrey, P::audrey}, {{0, 1}, {1, 0}, {0, 0}}, 0);
        CHECK(restrict(a, PositionalStrategy{{-1, -1}}) == a);
    }
    SUBCASE("Steven vertex with three successors")
    {
        const Arena a({P::steven, P::audrey, P::audrey}, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {2, 1}}, 0);
        const Arena r = restrict(a, PositionalStrategy{{2, -1, -1}});
        CHECK(r.out_degree(0) == 1);
        CHECK(r.successors(0)[0] == 2);
        for (int v : {1, 2}) CHECK(std::ranges::equal(r.successors(v), a.successors(v)));
    }
    SUBCASE("invalid strategies are rejected")
    {
        const Arena a({P::steven, P::audrey}, {{0, 1}, {1, 0}}, 0);
        CHECK_THROWS_AS(restrict(a, PositionalStrategy{{0, -1}}), structural_error);
        CHECK_THROWS_AS(restrict(a, PositionalStrategy{{1, 0}}), structural_error);
        CHECK_THROWS_AS(restrict(a, PositionalStrategy{{1}}), structural_error);
    }
    SUBCASE("contradictory two-clause game")
    {
        const Formula phi(2, 2, 1, {{{0, 1}}, {{1, 0}}});
        const auto game = permsat_to_rabin(phi);
        std::vector<int> choice(game.arena.vertex_count(), -1);
        for (int v = 0; v < game.arena.vertex_count(); v++)
            if (game.arena.owner(v) == Player::steven) choice[v] = game.arena.successors(v)[0];
        const Arena r = restrict(game.arena, PositionalStrategy{choice});
        CHECK(r.edge_count() == game.arena.edge_count());
        // the play alternating between both clauses sees every pair's B
        const Lasso l{{}, {0, 1, game.arena.successors(1)[0], 0, 2, game.arena.successors(2)[0]}};
        CHECK(evaluate_lasso(r, game.objective, l) == Player::audrey);
    }
}

TEST_SUITE_END();
