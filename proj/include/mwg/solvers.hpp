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

#ifndef MWG_SOLVERS_HPP
#define MWG_SOLVERS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mwg/core.hpp"
#include "mwg/graph.hpp"
#include "mwg/numeric.hpp"

namespace mwg {

enum class Answer { Yes, No };

/// Evidence that Player 1 survives one fixed memoryless Player-2 strategy:
/// a lasso in the game, consistent with `opponent`, whose cycle has
/// nonnegative weight in every dimension.
struct SpoilerWitness
{
    MemorylessStrategy opponent;
    Lasso lasso;
};

/**
 * Outcome of the unknown-initial-credit problem.
 *
 * Yes: one witness per memoryless Player-2 strategy plus a suggested credit
 * (the sum of the per-strategy lasso credits). No: a memoryless Player-2
 * strategy against which no reachable circuit is nonnegative.
 */
struct Verdict
{
    Answer answer = Answer::No;
    std::vector<SpoilerWitness> witnesses;
    WeightVector credit;
    std::optional<MemorylessStrategy> spoiler;
};

struct MemorylessVerdict
{
    Answer answer = Answer::No;
    std::optional<MemorylessStrategy> strategy; // Yes only
    WeightVector credit;                        // Yes only
};

/// Odometer over all memoryless strategies of one player, last owned state
/// varying fastest. Choices are taken in out-edge order.
class MemorylessEnumerator
{
public:
    MemorylessEnumerator(const GameStructure& g, Player p);

    std::optional<MemorylessStrategy> next();
    /// Product of the owned states' out-degrees.
    Integer count() const;

private:
    const GameStructure& game_;
    Player player_;
    std::vector<std::size_t> owned_;
    std::vector<std::size_t> digits_;
    bool done_ = false;
};

/// All memoryless Player-2 strategies in enumeration order.
std::vector<MemorylessStrategy> enumerate_p2_memoryless(const GameStructure& g);

/// Unknown initial credit for a game without Player-2 states.
Verdict solve_one_player_energy(const GameStructure& g);

/// Unknown initial credit problem for two-player games.
Verdict solve_unknown_credit(const GameStructure& g);

/// Finite-memory mean-payoff threshold problem for a rational threshold.
Verdict solve_meanpayoff_threshold(const GameStructure& g, const std::vector<Rational>& threshold);

/// n * W in every dimension: n reachable product vertices, W the largest
/// absolute weight of the game.
WeightVector sufficient_credit(const ProductGraph& p);

/// n * W for a lasso, with n = |stem| + |cycle|.
WeightVector lasso_credit(const GameStructure& g, const Lasso& l);

struct P1Check
{
    bool accepted = false;
    WeightVector credit;                 // when accepted
    std::optional<std::size_t> bad_dimension;
    std::optional<Lasso> bad_cycle;      // game edges, when rejected
};

P1Check verify_p1_certificate(const GameStructure& g, const MooreStrategy& s);
P1Check verify_p1_certificate(const GameStructure& g, const MemorylessStrategy& s);

struct P2Check
{
    bool accepted = false;
    std::optional<Lasso> counter_example; // nonnegative lasso, when rejected
};

P2Check verify_p2_spoiler(const GameStructure& g, const MemorylessStrategy& s);

/// Re-validates a Yes witness: the lasso starts at init, follows `opponent`
/// at Player-2 states, and its cycle is closed with weight >= 0.
std::vector<Violation> check_spoiler_witness(const GameStructure& g, const SpoilerWitness& w);

/// Player 1 restricted to memoryless strategies, energy objective.
MemorylessVerdict solve_memoryless_p1_energy(const GameStructure& g);
/// Player 1 restricted to memoryless strategies, mean-payoff threshold.
MemorylessVerdict solve_memoryless_p1_meanpayoff(const GameStructure& g, const std::vector<Rational>& threshold);

enum class ClampedResult { P1WinsClamped, P1LosesClamped };

/// Safety game on (state, energy clamped to [0, cap]^k) from (init, v0).
/// A win here implies a win of the real game with credit v0.
ClampedResult clamped_fixed_credit_oracle(const GameStructure& g, const WeightVector& v0, unsigned cap);

/// Enumerates canonical Moore machines with up to max_memory states and
/// returns the first one verify_p1_certificate accepts, with its credit.
/// Absence says nothing about larger memories.
std::optional<std::pair<MooreStrategy, WeightVector>> search_finite_memory_strategy(const GameStructure& g,
                                                                                    std::size_t max_memory);

/// Scales by the lcm of the threshold denominators and shifts by the scaled
/// threshold; the result has threshold 0.
GameStructure normalize_threshold(const GameStructure& g, const std::vector<Rational>& threshold);

} // namespace mwg

#endif
