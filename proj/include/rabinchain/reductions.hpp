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

#include <utility>
#include <vector>

#include "rabinchain/arena.hpp"
#include "rabinchain/permsat.hpp"

namespace rc {

/// Vertex of the k x k grid; both coordinates 0-based.
struct Cell
{
    int row;
    int col;

    auto operator<=>(const Cell &) const = default;
};

/// Undirected graph on the k x k grid. Edges are stored with the smaller
/// endpoint first (row-major order). Edges inside a row are kept but carry
/// no meaning for the one-per-row clique question.
constexpr int max_clique_grid = 64; // the adjacency matrix has k^4 entries

class CliqueInstance
{
public:
    CliqueInstance(int k, const std::vector<std::pair<Cell, Cell>> &edges);

    int size() const { return k_; }
    bool adjacent(Cell a, Cell b) const { return adj_[index(a) * k_ * k_ + index(b)]; }
    const std::vector<std::pair<Cell, Cell>> &edges() const { return edges_; }

    bool operator==(const CliqueInstance &o) const { return k_ == o.k_ && edges_ == o.edges_; }

private:
    int index(Cell c) const { return c.row * k_ + c.col; }

    int k_;
    std::vector<std::pair<Cell, Cell>> edges_;
    std::vector<char> adj_;
};

/// Variable numbering used by clique_to_permsat: x_1..x_{k+1} are 0..k and
/// y_1..y_k are k+1..2k.
inline int clique_y_var(int k, int i) { return k + 1 + i; }
std::string clique_var_name(int k, int var);

/// Chain clauses forcing x_1 < ... < x_{k+1} with every y_i strictly inside,
/// followed by one 4-clause per non-adjacent cross-row vertex pair.
Formula clique_to_permsat(const CliqueInstance &instance);

/// Reads off the column interval of every y_i. Throws contract_error if the
/// assignment does not satisfy clique_to_permsat(instance).
std::vector<Cell> decode_permutation_to_clique(const CliqueInstance &instance, const Assignment &assignment);

/// Vertex layout of the game built from a binary formula with m clauses over
/// k variables: 0 is the challenger vertex, 1..m are the clause vertices, and
/// the k(k-1) literal vertices follow in (i, j) lexicographic order.
struct LiteralGameLayout
{
    int variables;
    int clauses;

    int hub() const { return 0; }
    int clause_vertex(int c) const { return 1 + c; }
    int literal_vertex(int i, int j) const { return 1 + clauses + i * (variables - 1) + (j < i ? j : j - 1); }
    int vertex_count() const { return 1 + clauses + variables * (variables - 1); }
};

struct RabinGame
{
    Arena arena;
    RabinObjective objective;
};

struct GenParityGame
{
    Arena arena;
    GenParityObjective objective;
};

/// Audrey picks a clause, Steven answers with one of its literals, and the
/// token returns to the challenger. Pair i is good on literals with x_i on
/// the right and bad on literals with x_i on the left.
RabinGame permsat_to_rabin(const Formula &formula);

/// Same arena, two-dimensional parity colouring: [x_j<x_i] gets (2j+1, 2i)
/// in 1-based variable numbers, every other vertex (1, 1).
GenParityGame permsat_to_genparity2(const Formula &formula);

/// Steven's positional strategy in permsat_to_rabin(formula) that answers
/// each clause with its first literal true under `assignment`. Throws
/// contract_error if some clause has no true literal.
PositionalStrategy strategy_from_assignment(const Formula &formula, const Assignment &assignment);

MullerObjective rabin_to_muller(const RabinObjective &objective);
GenParityObjective rabin_to_genparity(const RabinObjective &objective);
RabinObjective genparity_to_rabin(const GenParityObjective &objective);
RabinObjective parity_to_rabin(const ParityObjective &objective);

/// Families over at most this many colours are listed explicitly.
constexpr int max_materialized_colours = 20;

} // namespace rc
