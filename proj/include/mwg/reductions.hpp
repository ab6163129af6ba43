/*
 * Copyright 2026 The mwgames Authors
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

#ifndef MWG_REDUCTIONS_HPP
#define MWG_REDUCTIONS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "mwg/core.hpp"
#include "mwg/numeric.hpp"

namespace mwg {

/// A 3-CNF. Literals are signed 1-based variable indices.
struct CnfFormula
{
    std::size_t variable_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

struct KnapsackItem
{
    Integer profit;
    Integer weight;
};

struct KnapsackInstance
{
    std::vector<KnapsackItem> items;
    Integer bound;  // B, capacity
    Integer target; // P, required profit
};

/// Throws InvalidArgument unless f has n >= 1, at least one clause, and every
/// literal names a variable in [1..n].
void require_valid_cnf(const CnfFormula& f);

/// True iff `assignment` (indexed by variable - 1) satisfies f.
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/**
 * Two-player arena that Player 2 spoils iff f is satisfiable.
 *
 * States: `init` (Player 1), `C1..Cm` (Player 2), and one Player-1 state per
 * occurring literal (`x3`, `nx3`). Dimension 2n; dimension 2(i-1) belongs to
 * x_i and 2(i-1)+1 to its complement. Returning from a literal adds +1 to
 * its own component and -1 to the complement's.
 */
GameStructure encode_3sat_two_player(const CnfFormula& f);

struct SpoilerAssignment
{
    std::vector<bool> value;       // chosen literals set true, rest false
    bool conflicting = false;      // some x and not-x were both chosen
    std::vector<std::size_t> conflicts; // 1-based variables chosen both ways
};

SpoilerAssignment decode_3sat_spoiler(const CnfFormula& f, const MemorylessStrategy& s);

/// Chain i1 -> {i1Y, i1N} -> i2 ... -> end -> i1 over dimension 2. The Yes
/// edge of item i weighs (p_i, -w_i); the closing edge weighs (-P, B).
GameStructure encode_knapsack(const KnapsackInstance& inst);

/// 0-based indices of the items whose Yes edge `s` takes.
std::vector<std::size_t> decode_knapsack_strategy(const KnapsackInstance& inst, const MemorylessStrategy& s);

/// Chain x1 -> {x1T, x1F} -> x2 ... -> end -> x1 over dimension m. The
/// True/False edges carry clause-satisfaction indicators; closing weighs -1.
GameStructure encode_3sat_memoryless(const CnfFormula& f);

std::vector<bool> decode_memoryless_assignment(const CnfFormula& f, const MemorylessStrategy& s);

} // namespace mwg

#endif
