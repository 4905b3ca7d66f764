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
#include <random>

#include "rabinchain/error.hpp"
#include "rabinchain/instances.hpp"

namespace rc {
namespace {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so draws are derived from raw outputs here.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }

private:
    std::mt19937_64 engine_;
};

void
check_density(double density)
{
    if (!(density >= 0.0 && density <= 1.0)) throw validation_error("density must be in [0, 1]");
}

std::vector<Edge>
random_edges(Rng &rng, int n, double density)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++) {
        bool any = false;
        for (int v = 0; v < n; v++) {
            if (rng.bernoulli(density)) {
                edges.emplace_back(u, v);
                any = true;
            }
        }
        if (!any) edges.emplace_back(u, rng.below(n));
    }
    return edges;
}

std::vector<Player>
random_owners(Rng &rng, int n)
{
    std::vector<Player> owner(n);
    for (auto &o : owner) o = rng.below(2) == 0 ? Player::steven : Player::audrey;
    return owner;
}

} // namespace

CliqueInstance
gen_clique(int k, double density, std::uint64_t seed, bool planted)
{
    if (k < 1) throw validation_error("grid size must be positive");
    check_density(density);
    Rng rng(seed);
    std::vector<std::pair<Cell, Cell>> edges;
    if (planted) {
        std::vector<int> col(k);
        for (auto &c : col) c = rng.below(k);
        for (int a = 0; a < k; a++)
            for (int b = a + 1; b < k; b++) edges.push_back({{a, col[a]}, {b, col[b]}});
    }
    for (int a = 0; a < k; a++)
        for (int b = 0; b < k; b++)
            for (int c = a + 1; c < k; c++)
                for (int d = 0; d < k; d++)
                    if (rng.bernoulli(density)) edges.push_back({{a, b}, {c, d}});
    return CliqueInstance(k, edges);
}

RabinGame
gen_rabin(int n, int k, double density, std::uint64_t seed)
{
    if (n < 1 || k < 1) throw validation_error("vertex and pair counts must be positive");
    check_density(density);
    Rng rng(seed);
    auto owner = random_owners(rng, n);
    auto edges = random_edges(rng, n, density);
    std::vector<RabinPair> pairs(k);
    for (auto &p : pairs) {
        for (int v = 0; v < n; v++) {
            if (rng.bernoulli(0.3)) p.good.push_back(v);
            if (rng.bernoulli(0.3)) p.bad.push_back(v);
        }
    }
    Arena arena(std::move(owner), edges, 0);
    RabinObjective objective(n, std::move(pairs));
    return {std::move(arena), std::move(objective)};
}

ParityGameInstance
gen_parity(int n, int max_colour, double density, std::uint64_t seed)
{
    if (n < 1 || max_colour < 1) throw validation_error("vertex and colour counts must be positive");
    check_density(density);
    Rng rng(seed);
    auto owner = random_owners(rng, n);
    auto edges = random_edges(rng, n, density);
    std::vector<int> colour(n);
    for (auto &c : colour) c = 1 + rng.below(max_colour);
    return {Arena(std::move(owner), edges, 0), ParityObjective(max_colour, std::move(colour))};
}

Formula
gen_permsat(int k, int m, int beta, std::uint64_t seed)
{
    if (k < 2) throw validation_error("binary literals need at least two variables");
    if (m < 0 || beta < 1) throw validation_error("clause count must be non-negative and beta positive");
    Rng rng(seed);
    std::vector<ChainLiteral> all;
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (i != j) all.push_back({i, j});

    std::vector<Clause> clauses;
    for (int c = 0; c < m; c++) {
        const int width = std::min<int>(1 + rng.below(beta), static_cast<int>(all.size()));
        // partial Fisher-Yates
        std::vector<ChainLiteral> pool = all;
        Clause clause;
        for (int w = 0; w < width; w++) {
            const int pick = w + rng.below(static_cast<int>(pool.size()) - w);
            std::swap(pool[w], pool[pick]);
            clause.push_back(pool[w]);
        }
        clauses.push_back(std::move(clause));
    }
    return Formula(k, 2, beta, std::move(clauses));
}

} // namespace rc
