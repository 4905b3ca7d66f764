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
#include <string>
#include <vector>

namespace rc {

/// x_{v0} < x_{v1} < ... : 2..alpha distinct variables, 0-based indices.
using ChainLiteral = std::vector<int>;
/// Disjunction of 1..beta chain literals.
using Clause = std::vector<ChainLiteral>;

/// An (alpha, beta)-Permutation SAT instance: a conjunction of clauses over
/// variables 0..variable_count-1, to be satisfied by a total order.
class Formula
{
public:
    Formula(int variable_count, int alpha, int beta, std::vector<Clause> clauses);

    int variable_count() const { return variable_count_; }
    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    const std::vector<Clause> &clauses() const { return clauses_; }
    int clause_count() const { return static_cast<int>(clauses_.size()); }

    /// Largest literal length actually used (>= 2 when any literal exists).
    int used_alpha() const;

    bool operator==(const Formula &) const = default;

private:
    int variable_count_;
    int alpha_;
    int beta_;
    std::vector<Clause> clauses_;
};

/// A total order of the variables, as variable -> position (0-based).
class Assignment
{
public:
    explicit Assignment(std::vector<int> position);
    static Assignment identity(int k);
    /// Builds an assignment from variables listed in increasing order.
    static Assignment from_order(const std::vector<int> &order);

    int size() const { return static_cast<int>(position_.size()); }
    int position(int var) const { return position_[var]; }
    const std::vector<int> &positions() const { return position_; }
    std::vector<int> order() const;

    bool operator==(const Assignment &) const = default;

private:
    std::vector<int> position_;
};

/// True iff the chain is strictly increasing under `position`. Only the
/// relative order of the values matters; any injective map works.
bool literal_holds(const ChainLiteral &lit, const std::vector<int> &position);

bool check(const Formula &formula, const Assignment &assignment);

struct BruteforceLimits
{
    int max_variables = 10;
};

/// Tries every permutation in lexicographic order of the position vector and
/// returns the first satisfying one.
std::optional<Assignment> solve_bruteforce(const Formula &formula, BruteforceLimits limits = {});

/// Builds the order position by position and abandons a prefix as soon as some
/// clause has all of its literals falsified.
std::optional<Assignment> solve_backtracking(const Formula &formula);

} // namespace rc
