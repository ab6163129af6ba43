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

#include "mwg/core.hpp"

#include <map>
#include <set>

namespace mwg {

std::size_t GameStructure::add_state(std::string id, Player owner)
{
    state_index_.try_emplace(id, states_.size());
    states_.push_back({std::move(id), owner});
    out_.emplace_back();
    return states_.size() - 1;
}

std::size_t GameStructure::add_edge(std::string id, std::size_t src, std::size_t dst, WeightVector weight)
{
    if (src >= states_.size() || dst >= states_.size()) {
        throw InvalidArgument("edge '" + id + "' references an undeclared state");
    }
    edge_index_.try_emplace(id, edges_.size());
    edges_.push_back({std::move(id), src, dst, std::move(weight)});
    out_[src].push_back(edges_.size() - 1);
    return edges_.size() - 1;
}

void GameStructure::set_init(std::size_t state)
{
    if (state >= states_.size()) throw InvalidArgument("initial state out of range");
    init_ = state;
}

std::optional<std::size_t> GameStructure::find_state(std::string_view id) const
{
    auto it = state_index_.find(std::string(id));
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> GameStructure::find_edge(std::string_view id) const
{
    auto it = edge_index_.find(std::string(id));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> GameStructure::states_of(Player p) const
{
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < states_.size(); ++s) {
        if (states_[s].owner == p) out.push_back(s);
    }
    return out;
}

Integer GameStructure::max_abs_weight() const
{
    Integer m = 0;
    for (const auto& e : edges_) {
        Integer a = e.weight.max_abs();
        if (a > m) m = a;
    }
    return m;
}

std::vector<Violation> validate_game(const GameStructure& g)
{
    std::vector<Violation> out;
    if (g.dimension() == 0) out.push_back({"game", "dimension", "dimension must be at least 1"});
    if (g.states().empty()) {
        out.push_back({"game", "states", "game has no states"});
        return out;
    }
    if (g.init() >= g.states().size()) out.push_back({"game", "init", "initial state out of range"});

    std::set<std::string> seen_states;
    for (std::size_t s = 0; s < g.states().size(); ++s) {
        const auto& st = g.state(s);
        if (!seen_states.insert(st.id).second) {
            out.push_back({"state " + st.id, "duplicate-id", "state id declared more than once"});
        }
        if (st.owner != Player::One && st.owner != Player::Two) {
            out.push_back({"state " + st.id, "owner", "owner must be 1 or 2"});
        }
        if (g.out_edges(s).empty()) {
            out.push_back({"state " + st.id, "out-degree", "state has no outgoing edge"});
        }
    }
    std::set<std::string> seen_edges;
    for (const auto& e : g.edges()) {
        if (!seen_edges.insert(e.id).second) {
            out.push_back({"edge " + e.id, "duplicate-id", "edge id declared more than once"});
        }
        if (e.weight.size() != g.dimension()) {
            out.push_back({"edge " + e.id, "weight-arity",
                           "weight has " + std::to_string(e.weight.size()) + " components, dimension is " +
                               std::to_string(g.dimension())});
        }
    }
    return out;
}

void require_valid(const GameStructure& g)
{
    auto violations = validate_game(g);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

namespace {

template <typename CheckChoice>
void check_choice_table(const GameStructure& g, Player player, std::size_t slot_count, CheckChoice&& choice_at,
                        std::vector<Violation>& out, const std::string& where)
{
    for (std::size_t slot = 0; slot < slot_count; ++slot) {
        const std::size_t s = slot % g.states().size();
        const std::optional<std::size_t>& c = choice_at(slot);
        const std::string subject = "state " + g.state(s).id + where;
        if (g.state(s).owner != player) {
            if (c) out.push_back({subject, "foreign-choice", "choice given at a state the player does not own"});
            continue;
        }
        if (!c) {
            out.push_back({subject, "missing-choice", "no edge chosen at an owned state"});
        } else if (*c >= g.edges().size() || g.edge(*c).src != s) {
            out.push_back({subject, "bad-choice", "chosen edge does not leave the state"});
        }
    }
}

} // namespace

std::vector<Violation> validate_strategy(const GameStructure& g, const MemorylessStrategy& s)
{
    std::vector<Violation> out;
    if (s.choice.size() != g.states().size()) {
        out.push_back({"strategy", "size", "strategy covers " + std::to_string(s.choice.size()) + " states, game has " +
                                               std::to_string(g.states().size())});
        return out;
    }
    check_choice_table(g, s.player, s.choice.size(), [&](std::size_t i) -> const auto& { return s.choice[i]; }, out,
                       "");
    return out;
}

std::vector<Violation> validate_strategy(const GameStructure& g, const MooreStrategy& s)
{
    std::vector<Violation> out;
    const std::size_t n = g.states().size();
    const std::size_t m = s.memory_size();
    if (m == 0) out.push_back({"strategy", "memory", "memory is empty"});
    if (s.initial >= m && m > 0) out.push_back({"strategy", "initial", "initial memory out of range"});
    if (s.state_count != n || s.update_table.size() != m * n || s.next_table.size() != m * n) {
        out.push_back({"strategy", "size", "update/next tables do not match memory x states"});
        return out;
    }
    for (std::size_t i = 0; i < s.update_table.size(); ++i) {
        if (s.update_table[i] >= m) {
            out.push_back({"memory " + s.memory[i / n] + " at state " + g.state(i % n).id, "update",
                           "update leads to an unknown memory state"});
        }
    }
    for (std::size_t mem = 0; mem < m; ++mem) {
        std::vector<Violation> local;
        check_choice_table(
            g, s.player, n, [&](std::size_t i) -> const auto& { return s.next_table[mem * n + i]; }, local,
            " (memory " + s.memory[mem] + ")");
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

WeightVector energy_level(const GameStructure& g, std::span<const std::size_t> prefix)
{
    WeightVector level = WeightVector::zero(g.dimension());
    std::size_t at = g.init();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const std::size_t e = prefix[i];
        if (e >= g.edges().size() || g.edge(e).src != at) {
            throw InvalidArgument("malformed prefix: edge #" + std::to_string(i) + " does not continue the walk");
        }
        level += g.edge(e).weight;
        at = g.edge(e).dst;
    }
    return level;
}

std::vector<Rational> mean_payoff_of_lasso(const GameStructure& g, const Lasso& l)
{
    if (l.cycle.empty()) throw InvalidArgument("malformed lasso: empty cycle");
    std::size_t at = g.init();
    auto step = [&](std::size_t e) {
        if (e >= g.edges().size() || g.edge(e).src != at) throw InvalidArgument("malformed lasso: walk is broken");
        at = g.edge(e).dst;
    };
    for (std::size_t e : l.stem) step(e);
    const std::size_t cycle_start = at;
    WeightVector sum = WeightVector::zero(g.dimension());
    for (std::size_t e : l.cycle) {
        step(e);
        sum += g.edge(e).weight;
    }
    if (at != cycle_start) throw InvalidArgument("malformed lasso: cycle is not closed");

    std::vector<Rational> mp;
    mp.reserve(sum.size());
    for (const auto& v : sum) mp.emplace_back(v, Integer(static_cast<unsigned long>(l.cycle.size())));
    for (auto& v : mp) v.canonicalize();
    return mp;
}

namespace {

GameStructure map_weights(const GameStructure& g, const auto& f)
{
    GameStructure out(g.dimension());
    for (const auto& s : g.states()) out.add_state(s.id, s.owner);
    for (const auto& e : g.edges()) out.add_edge(e.id, e.src, e.dst, f(e.weight));
    if (!g.states().empty()) out.set_init(g.init());
    return out;
}

} // namespace

GameStructure shift_weights(const GameStructure& g, const WeightVector& v)
{
    if (v.size() != g.dimension()) {
        throw InvalidArgument("shift vector has " + std::to_string(v.size()) + " components, dimension is " +
                              std::to_string(g.dimension()));
    }
    return map_weights(g, [&](const WeightVector& w) { return w - v; });
}

GameStructure scale_weights(const GameStructure& g, const Integer& c)
{
    if (sgn(c) <= 0) throw InvalidArgument("scale factor must be positive");
    return map_weights(g, [&](const WeightVector& w) { return w * c; });
}

MooreStrategy MooreStrategy::from_memoryless(const MemorylessStrategy& s)
{
    MooreStrategy m;
    m.player = s.player;
    m.memory = {"m0"};
    m.initial = 0;
    m.state_count = s.choice.size();
    m.update_table.assign(s.choice.size(), 0);
    m.next_table = s.choice;
    return m;
}

ProductGraph product_with_strategy(const GameStructure& g, const MooreStrategy& s)
{
    if (auto v = validate_strategy(g, s); !v.empty()) throw ValidationError(std::move(v));
    const std::size_t n = g.states().size();

    ProductGraph p;
    p.strategy_player = s.player;
    p.game_max_abs_weight = g.max_abs_weight();
    p.graph = MultiGraph(0, g.dimension());

    std::vector<std::optional<std::size_t>> index(s.memory_size() * n);
    auto vertex_of = [&](std::size_t m, std::size_t st) {
        auto& slot = index[m * n + st];
        if (!slot) {
            slot = p.vertices.size();
            p.vertices.push_back({m, st});
            p.graph.add_vertex();
        }
        return *slot;
    };
    p.init = vertex_of(s.initial, g.init());
    p.graph.set_source(p.init);
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const auto [m, st] = p.vertices[v];
        const std::size_t next_memory = s.update(m, st);
        auto link = [&](std::size_t e) {
            const std::size_t w = vertex_of(next_memory, g.edge(e).dst);
            p.graph.add_edge(v, w, g.edge(e).weight, e);
        };
        if (g.state(st).owner == s.player) {
            link(*s.next(m, st));
        } else {
            for (std::size_t e : g.out_edges(st)) link(e);
        }
    }
    return p;
}

ProductGraph product_with_strategy(const GameStructure& g, const MemorylessStrategy& s)
{
    return product_with_strategy(g, MooreStrategy::from_memoryless(s));
}

MultiGraph to_multigraph(const GameStructure& g)
{
    MultiGraph mg(g.states().size(), g.dimension());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        mg.add_edge(g.edge(e).src, g.edge(e).dst, g.edge(e).weight, e);
    }
    if (!g.states().empty()) mg.set_source(g.init());
    return mg;
}

bool structurally_equal(const GameStructure& a, const GameStructure& b)
{
    if (a.dimension() != b.dimension() || a.states().size() != b.states().size() ||
        a.edges().size() != b.edges().size()) {
        return false;
    }
    if (!a.states().empty() && a.state(a.init()).id != b.state(b.init()).id) return false;
    std::map<std::string, Player> owners;
    for (const auto& s : a.states()) owners[s.id] = s.owner;
    for (const auto& s : b.states()) {
        auto it = owners.find(s.id);
        if (it == owners.end() || it->second != s.owner) return false;
    }
    std::map<std::string, const Edge*> edges;
    for (const auto& e : a.edges()) edges[e.id] = &e;
    for (const auto& e : b.edges()) {
        auto it = edges.find(e.id);
        if (it == edges.end()) return false;
        const Edge& o = *it->second;
        if (a.state(o.src).id != b.state(e.src).id || a.state(o.dst).id != b.state(e.dst).id || !(o.weight == e.weight)) {
            return false;
        }
    }
    return true;
}

} // namespace mwg
