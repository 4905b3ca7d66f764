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

#include "rabinchain/permsat.hpp"

#include <algorithm>
#include <numeric>

#include "rabinchain/error.hpp"

namespace rc {

Formula::Formula(int variable_count, int alpha, int beta, std::vector<Clause> clauses)
    : variable_count_(variable_count), alpha_(alpha), beta_(beta), clauses_(std::move(clauses))
{
    if (variable_count_ < 1) throw validation_error("formula needs at least one variable");
    if (alpha_ < 2) throw validation_error("alpha must be at least 2");
    if (beta_ < 1) throw validation_error("beta must be at least 1");
    for (const auto &clause : clauses_) {
        if (clause.empty() || static_cast<int>(clause.size()) > beta_)
            throw validation_error("clause width " + std::to_string(clause.size()) + " outside 1.." +
                                   std::to_string(beta_));
        for (const auto &lit : clause) {
            if (lit.size() < 2 || static_cast<int>(lit.size()) > alpha_)
                throw validation_error("literal length " + std::to_string(lit.size()) + " outside 2.." +
                                       std::to_string(alpha_));
            for (std::size_t i = 0; i < lit.size(); i++) {
                if (lit[i] < 0 || lit[i] >= variable_count_)
                    throw validation_error("variable index " + std::to_string(lit[i] + 1) + " out of range");
                for (std::size_t j = 0; j < i; j++)
                    if (lit[i] == lit[j]) throw validation_error("literal repeats a variable");
            }
        }
    }
}

int
Formula::used_alpha() const
{
    int a = 0;
    for (const auto &clause : clauses_)
        for (const auto &lit : clause) a = std::max(a, static_cast<int>(lit.size()));
    return a;
}

Assignment::Assignment(std::vector<int> position) : position_(std::move(position))
{
    std::vector<char> used(position_.size(), 0);
    for (int p : position_) {
        if (p < 0 || p >= size() || used[p]) throw validation_error("assignment is not a permutation");
        used[p] = 1;
    }
}

Assignment
Assignment::identity(int k)
{
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    return Assignment(std::move(pos));
}

Assignment
Assignment::from_order(const std::vector<int> &order)
{
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); i++) {
        if (order[i] < 0 || order[i] >= static_cast<int>(order.size()))
            throw validation_error("order lists an unknown variable");
        pos[order[i]] = static_cast<int>(i);
    }
    return Assignment(std::move(pos));
}

std::vector<int>
Assignment::order() const
{
    std::vector<int> ord(position_.size());
    for (int v = 0; v < size(); v++) ord[position_[v]] = v;
    return ord;
}

bool
literal_holds(const ChainLiteral &lit, const std::vector<int> &position)
{
    for (std::size_t i = 0; i + 1 < lit.size(); i++)
        if (position[lit[i]] >= position[lit[i + 1]]) return false;
    return true;
}

namespace {

bool
satisfies(const Formula &formula, const std::vector<int> &position)
{
    for (const auto &clause : formula.clauses()) {
        bool ok = false;
        for (const auto &lit : clause) {
            if (literal_holds(lit, position)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace

bool
check(const Formula &formula, const Assignment &assignment)
{
    if (assignment.size() != formula.variable_count())
        throw validation_error("assignment covers " + std::to_string(assignment.size()) + " variables, formula has " +
                               std::to_string(formula.variable_count()));
    return satisfies(formula, assignment.positions());
}

std::optional<Assignment>
solve_bruteforce(const Formula &formula, BruteforceLimits limits)
{
    const int k = formula.variable_count();
    if (k > limits.max_variables)
        throw resource_error("brute force is limited to " + std::to_string(limits.max_variables) +
                             " variables, formula has " + std::to_string(k));
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    do {
        if (satisfies(formula, pos)) return Assignment(pos);
    } while (std::next_permutation(pos.begin(), pos.end()));
    return std::nullopt;
}

namespace {

class Backtracker
{
public:
    explicit Backtracker(const Formula &f) : f_(f), k_(f.variable_count()), position_(k_, -1), occurs_(k_)
    {
        for (int c = 0; c < f.clause_count(); c++) {
            for (const auto &lit : f.clauses()[c])
                for (int v : lit)
                    if (occurs_[v].empty() || occurs_[v].back() != c) occurs_[v].push_back(c);
        }
        order_.resize(k_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return occurs_[a].size() > occurs_[b].size(); });
    }

    std::optional<Assignment> run()
    {
        if (place(0)) return Assignment(position_);
        return std::nullopt;
    }

private:
    // A literal is dead once a later chain element is placed before an
    // earlier one has been.
    bool literal_dead(const ChainLiteral &lit) const
    {
        for (std::size_t i = 0; i + 1 < lit.size(); i++) {
            int a = position_[lit[i]], b = position_[lit[i + 1]];
            if (b >= 0 && (a < 0 || a > b)) return true;
        }
        return false;
    }

    bool clause_dead(const Clause &clause) const
    {
        for (const auto &lit : clause)
            if (!literal_dead(lit)) return false;
        return true;
    }

    bool place(int slot)
    {
        if (slot == k_) return true;
        for (int v : order_) {
            if (position_[v] >= 0) continue;
            position_[v] = slot;
            bool ok = true;
            for (int c : occurs_[v]) {
                if (clause_dead(f_.clauses()[c])) {
                    ok = false;
                    break;
                }
            }
            if (ok && place(slot + 1)) return true;
            position_[v] = -1;
        }
        return false;
    }

    const Formula &f_;
    int k_;
    std::vector<int> position_;
    std::vector<std::vector<int>> occurs_;
    std::vector<int> order_;
};

} // namespace

std::optional<Assignment>
solve_backtracking(const Formula &formula)
{
    return Backtracker(formula).run();
}

} // namespace rc
