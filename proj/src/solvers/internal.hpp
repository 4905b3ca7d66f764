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

#include <optional>
#include <span>
#include <vector>

#include "rabinchain/arena.hpp"

namespace rc::detail {

/// Searches the arena, with Steven's moves fixed by `choice` (or as given
/// when `choice` is null), for a reachable strongly connected vertex set on
/// which every Rabin pair fails. Buffers are reused across calls, which the
/// strategy enumeration depends on for speed.
class BadCycleFinder
{
public:
    BadCycleFinder(const Arena &arena, const RabinObjective &objective);

    std::optional<std::vector<int>> find(const std::vector<int> *choice);
    Lasso to_lasso(const std::vector<int> *choice, const std::vector<int> &component);

private:
    std::span<const int> successors(int v, const std::vector<int> *choice) const
    {
        if (choice && arena_.owner(v) == Player::steven) return {&(*choice)[v], 1};
        return arena_.successors(v);
    }

    void reachable(const std::vector<int> *choice);
    void components(const std::vector<int> &members, const std::vector<int> *choice,
                    std::vector<std::vector<int>> &out);
    std::vector<int> path_within(int from, int to, const std::vector<int> *choice, const std::vector<char> &allowed);

    const Arena &arena_;
    const RabinObjective &objective_;
    std::vector<int> reach_;
    std::vector<char> member_;
    std::vector<int> index_;
    std::vector<int> low_;
    std::vector<char> on_stack_;
};

} // namespace rc::detail
