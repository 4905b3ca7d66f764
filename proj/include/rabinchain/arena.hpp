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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rc {

enum class Player : std::uint8_t { steven, audrey };

inline Player
opponent(Player p)
{
    return p == Player::steven ? Player::audrey : Player::steven;
}

const char *to_string(Player p);

using Edge = std::pair<int, int>;

/**
 * A finite game graph. Vertices are 0..n-1, each owned by one player, each
 * with at least one successor. Successor lists keep insertion order; that
 * order is what strategy enumeration and serialization follow.
 *
 * Names are an optional display table ("Δ", "[C_1]", ...). When absent,
 * name(v) is the decimal index.
 */
class Arena
{
public:
    Arena(std::vector<Player> owner, const std::vector<Edge> &edges, int initial,
          std::vector<std::string> names = {});

    int vertex_count() const { return static_cast<int>(owner_.size()); }
    int initial() const { return initial_; }
    Player owner(int v) const { return owner_[v]; }
    std::span<const int> successors(int v) const
    {
        return {succ_.data() + offset_[v], succ_.data() + offset_[v + 1]};
    }
    int out_degree(int v) const { return offset_[v + 1] - offset_[v]; }
    std::size_t edge_count() const { return succ_.size(); }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;

    bool has_names() const { return !names_.empty(); }
    std::string name(int v) const;
    const std::vector<std::string> &names() const { return names_; }
    const std::vector<Player> &owners() const { return owner_; }

    bool operator==(const Arena &) const = default;

private:
    std::vector<Player> owner_;
    std::vector<int> offset_;
    std::vector<int> succ_;
    int initial_;
    std::vector<std::string> names_;
};

/// Colours are 1-based; colour c occupies bit c-1.
using ColourSet = std::uint32_t;
constexpr int max_set_colours = 32;

struct RabinPair
{
    std::vector<int> good; // sorted, unique
    std::vector<int> bad;

    bool operator==(const RabinPair &) const = default;
};

/// Rabin condition of degree k >= 1 (at most 64 pairs). Membership is also
/// kept as per-vertex bitmasks since every solver needs it that way.
class RabinObjective
{
public:
    RabinObjective(int vertex_count, std::vector<RabinPair> pairs);

    int degree() const { return static_cast<int>(pairs_.size()); }
    int vertex_count() const { return static_cast<int>(good_mask_.size()); }
    const std::vector<RabinPair> &pairs() const { return pairs_; }
    std::uint64_t good_mask(int v) const { return good_mask_[v]; }
    std::uint64_t bad_mask(int v) const { return bad_mask_[v]; }

    /// Winner of a play whose infinitely-visited vertex set is `inf`.
    Player winner_of(std::span<const int> inf) const;

    bool operator==(const RabinObjective &o) const { return pairs_ == o.pairs_ && vertex_count() == o.vertex_count(); }

private:
    std::vector<RabinPair> pairs_;
    std::vector<std::uint64_t> good_mask_;
    std::vector<std::uint64_t> bad_mask_;
};

/// Winning family of a Muller objective: either an explicit list of colour
/// sets, or the rule produced by the Rabin encoding (colour 2i-1 is the good
/// colour of pair i, colour 2i its bad colour) when listing would be too big.
struct ExplicitFamily
{
    std::vector<ColourSet> members; // sorted, unique
    bool operator==(const ExplicitFamily &) const = default;
};

struct RabinRuleFamily
{
    int pairs;
    bool operator==(const RabinRuleFamily &) const = default;
};

class MullerObjective
{
public:
    using Family = std::variant<ExplicitFamily, RabinRuleFamily>;

    MullerObjective(int colour_count, std::vector<ColourSet> colouring, Family family);

    int colour_count() const { return colour_count_; }
    int vertex_count() const { return static_cast<int>(colouring_.size()); }
    ColourSet colours(int v) const { return colouring_[v]; }
    const std::vector<ColourSet> &colouring() const { return colouring_; }
    const Family &family() const { return family_; }
    bool accepts(ColourSet s) const;

    bool operator==(const MullerObjective &) const = default;

private:
    int colour_count_;
    std::vector<ColourSet> colouring_;
    Family family_;
};

/// Max-parity: Steven wins iff the largest colour seen infinitely often is
/// even. Colours are in 1..max_colour.
class ParityObjective
{
public:
    ParityObjective(int max_colour, std::vector<int> colour);

    int max_colour() const { return max_colour_; }
    int vertex_count() const { return static_cast<int>(colour_.size()); }
    int colour(int v) const { return colour_[v]; }
    const std::vector<int> &colours() const { return colour_; }

    bool operator==(const ParityObjective &) const = default;

private:
    int max_colour_;
    std::vector<int> colour_;
};

/// Disjunction of `dimension` max-parity conditions over the same vertices.
class GenParityObjective
{
public:
    /// `colours` is row-major: colours[v * dimension + t].
    GenParityObjective(int dimension, int max_colour, std::vector<int> colours);

    int dimension() const { return dimension_; }
    int max_colour() const { return max_colour_; }
    int vertex_count() const { return static_cast<int>(colours_.size()) / dimension_; }
    int colour(int v, int t) const { return colours_[v * dimension_ + t]; }
    const std::vector<int> &raw() const { return colours_; }

    bool operator==(const GenParityObjective &) const = default;

private:
    int dimension_;
    int max_colour_;
    std::vector<int> colours_;
};

using Objective = std::variant<RabinObjective, MullerObjective, ParityObjective, GenParityObjective>;

int objective_vertex_count(const Objective &obj);
const char *objective_kind(const Objective &obj);

/// Ultimately periodic play: prefix (starting at the initial vertex, may be
/// empty) followed by the cycle repeated forever.
struct Lasso
{
    std::vector<int> prefix;
    std::vector<int> cycle;

    bool operator==(const Lasso &) const = default;
};

/// Throws structural_error if the lasso is not a play of the arena.
void validate_lasso(const Arena &arena, const Lasso &lasso);

/// Memoryless strategy for Steven: choice[v] is the successor picked at
/// Steven vertex v, and -1 at Audrey vertices.
struct PositionalStrategy
{
    std::vector<int> choice;

    bool operator==(const PositionalStrategy &) const = default;
};

void validate_strategy(const Arena &arena, const PositionalStrategy &strategy);

/// Winner of the play described by `lasso`.
Player evaluate_lasso(const Arena &arena, const Objective &objective, const Lasso &lasso);

/// One-player arena in which every Steven vertex keeps only its chosen edge.
Arena restrict(const Arena &arena, const PositionalStrategy &strategy);

} // namespace rc
