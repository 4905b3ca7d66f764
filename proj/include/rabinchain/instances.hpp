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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rabinchain/arena.hpp"
#include "rabinchain/permsat.hpp"
#include "rabinchain/reductions.hpp"

namespace rc {

// Seeded generators. The same arguments always give the same instance.

/// Each cross-row vertex pair becomes an edge with probability `density`.
/// With `planted`, one column per row is chosen first and those k vertices
/// are made pairwise adjacent.
CliqueInstance gen_clique(int k, double density, std::uint64_t seed, bool planted);

/// Random owners, each ordered pair (u, v) an edge with probability
/// `density`, and each vertex with no successor then given one uniformly.
/// Every vertex joins each G_i and each B_i with probability 0.3.
RabinGame gen_rabin(int n, int k, double density, std::uint64_t seed);

struct ParityGameInstance
{
    Arena arena;
    ParityObjective objective;
};

/// Same graph model as gen_rabin, colours uniform in 1..max_colour.
ParityGameInstance gen_parity(int n, int max_colour, double density, std::uint64_t seed);

/// m clauses over k >= 2 variables with binary literals; each clause has a
/// uniform width in 1..beta and literals drawn without replacement.
Formula gen_permsat(int k, int m, int beta, std::uint64_t seed);

// Text formats. All are line based with '#' comments.

struct GameInstance
{
    Arena arena;
    Objective objective;

    bool operator==(const GameInstance &) const = default;
};

enum class InstanceKind { clique, permsat, game };

/// Looks at the first non-comment token.
InstanceKind detect_kind(std::string_view text);

CliqueInstance parse_clique(std::string_view text);
std::string write_clique(const CliqueInstance &instance);

Formula parse_permsat(std::string_view text);
std::string write_permsat(const Formula &formula);

GameInstance parse_game(std::string_view text);
std::string write_game(const Arena &arena, const Objective &objective);

/// Graphviz rendering. Steven vertices are boxes, Audrey vertices ellipses.
/// For Rabin objectives, members of G_i of `highlight_pair` (0-based) are
/// filled green and members of B_i blue, and every vertex lists its pairs.
std::string export_dot(const Arena &arena, const Objective &objective, int highlight_pair = 0);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

} // namespace rc
