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

#ifndef MWG_CORE_HPP
#define MWG_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mwg/error.hpp"
#include "mwg/graph.hpp"
#include "mwg/numeric.hpp"
#include "mwg/weights.hpp"

namespace mwg {

enum class Player : std::uint8_t { One = 1, Two = 2 };

struct State
{
    std::string id;
    Player owner = Player::One;
};

struct Edge
{
    std::string id;
    std::size_t src = 0;
    std::size_t dst = 0;
    WeightVector weight;
};

/**
 * A two-player arena with k-dimensional integer edge weights.
 *
 * States and edges are addressed by index; the string ids are kept for
 * serialization and certificates. Parallel edges are allowed, so plays and
 * strategies are expressed over edge indices. Construction checks only that
 * edge endpoints exist; everything else is reported by validate_game().
 */
class GameStructure
{
public:
    GameStructure() = default;
    explicit GameStructure(std::size_t dimension) : dimension_(dimension) {}

    std::size_t add_state(std::string id, Player owner);
    std::size_t add_edge(std::string id, std::size_t src, std::size_t dst, WeightVector weight);
    void set_init(std::size_t state);

    std::size_t dimension() const { return dimension_; }
    std::size_t init() const { return init_; }
    const std::vector<State>& states() const { return states_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const State& state(std::size_t s) const { return states_[s]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    std::span<const std::size_t> out_edges(std::size_t s) const { return out_[s]; }

    std::optional<std::size_t> find_state(std::string_view id) const;
    std::optional<std::size_t> find_edge(std::string_view id) const;

    /// States owned by `p`, in index order.
    std::vector<std::size_t> states_of(Player p) const;
    /// Largest absolute weight component over all edges.
    Integer max_abs_weight() const;

private:
    std::size_t dimension_ = 0;
    std::size_t init_ = 0;
    std::vector<State> states_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::unordered_map<std::string, std::size_t> state_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Player `player` picks one outgoing edge per owned state. `choice` is
/// indexed by state; entries of states not owned by `player` stay empty.
struct MemorylessStrategy
{
    Player player = Player::One;
    std::vector<std::optional<std::size_t>> choice;

    friend bool operator==(const MemorylessStrategy&, const MemorylessStrategy&) = default;
};

/**
 * A finite-memory strategy as a Moore machine. At state s with memory m the
 * owner moves along next(m, s) and the memory becomes update(m, s); at the
 * opponent's states only the memory update applies.
 */
struct MooreStrategy
{
    Player player = Player::One;
    std::vector<std::string> memory; // names, |M| entries
    std::size_t initial = 0;
    std::size_t state_count = 0;
    std::vector<std::size_t> update_table;               // |M| * |S|
    std::vector<std::optional<std::size_t>> next_table; // |M| * |S|

    std::size_t memory_size() const { return memory.size(); }
    std::size_t update(std::size_t m, std::size_t s) const { return update_table[m * state_count + s]; }
    const std::optional<std::size_t>& next(std::size_t m, std::size_t s) const { return next_table[m * state_count + s]; }

    static MooreStrategy from_memoryless(const MemorylessStrategy& s);
};

struct ProductVertex
{
    std::size_t memory = 0;
    std::size_t state = 0;
};

/// Product of a game with a strategy, restricted to vertices reachable from
/// (m0, init). Edge labels in graph() are game edge indices.
struct ProductGraph
{
    std::vector<ProductVertex> vertices;
    std::size_t init = 0;
    MultiGraph graph; // same vertex numbering, source() == init
    Player strategy_player = Player::One;
    Integer game_max_abs_weight;

    std::size_t vertex_count() const { return vertices.size(); }
};

/// An ultimately periodic play stem . cycle^omega, over edge indices.
struct Lasso
{
    std::vector<std::size_t> stem;
    std::vector<std::size_t> cycle;
};

/// Structural problems with `g`; empty iff `g` is a well-formed game.
std::vector<Violation> validate_game(const GameStructure& g);
/// Throws ValidationError unless validate_game(g) is empty.
void require_valid(const GameStructure& g);

std::vector<Violation> validate_strategy(const GameStructure& g, const MemorylessStrategy& s);
std::vector<Violation> validate_strategy(const GameStructure& g, const MooreStrategy& s);

/// Sum of weights along a walk starting at init.
WeightVector energy_level(const GameStructure& g, std::span<const std::size_t> prefix);

/// Cycle weight divided by cycle length; the stem does not matter.
std::vector<Rational> mean_payoff_of_lasso(const GameStructure& g, const Lasso& l);

/// Replaces every weight w by w - v.
GameStructure shift_weights(const GameStructure& g, const WeightVector& v);
/// Multiplies every weight by c >= 1.
GameStructure scale_weights(const GameStructure& g, const Integer& c);

ProductGraph product_with_strategy(const GameStructure& g, const MooreStrategy& s);
ProductGraph product_with_strategy(const GameStructure& g, const MemorylessStrategy& s);

/// The arena as a plain multigraph with source = init and label = edge index.
MultiGraph to_multigraph(const GameStructure& g);

/// Same structure, compared by ids rather than by index order.
bool structurally_equal(const GameStructure& a, const GameStructure& b);

} // namespace mwg

#endif
