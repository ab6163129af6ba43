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

#include "mwg/reductions.hpp"

#include <cstdlib>
#include <string>

namespace mwg {

namespace {

std::string literal_name(int lit)
{
    return (lit < 0 ? "nx" : "x") + std::to_string(std::abs(lit));
}

std::size_t literal_dimension(int lit)
{
    const std::size_t v = static_cast<std::size_t>(std::abs(lit));
    return 2 * (v - 1) + (lit < 0 ? 1 : 0);
}

void require_choices(const GameStructure& g, const MemorylessStrategy& s, Player p, const char* what)
{
    if (s.player != p) throw InvalidArgument(std::string(what) + " has the wrong player");
    auto v = validate_strategy(g, s);
    if (!v.empty()) throw ValidationError(std::move(v));
}

// Chain gadget shared by both one-player encodings.
GameStructure chain(const std::string& prefix, std::size_t n, std::size_t k, const std::string& yes,
                    const std::string& no, const std::vector<WeightVector>& yes_w,
                    const std::vector<WeightVector>& no_w, WeightVector close)
{
    GameStructure g(k);
    std::vector<std::size_t> head(n), y(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = prefix + std::to_string(i + 1);
        head[i] = g.add_state(id, Player::One);
        y[i] = g.add_state(id + yes, Player::One);
        m[i] = g.add_state(id + no, Player::One);
    }
    const std::size_t end = g.add_state("end", Player::One);
    g.set_init(head[0]);
    const WeightVector zero = WeightVector::zero(k);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = prefix + std::to_string(i + 1);
        const std::size_t next = i + 1 < n ? head[i + 1] : end;
        g.add_edge(id + "_" + (yes == "Y" ? "yes" : "true"), head[i], y[i], yes_w[i]);
        g.add_edge(id + "_" + (no == "N" ? "no" : "false"), head[i], m[i], no_w[i]);
        g.add_edge(id + yes + "_next", y[i], next, zero);
        g.add_edge(id + no + "_next", m[i], next, zero);
    }
    g.add_edge("close", end, head[0], std::move(close));
    return g;
}

} // namespace

void require_valid_cnf(const CnfFormula& f)
{
    if (f.variable_count == 0) throw InvalidArgument("formula has no variables");
    if (f.clauses.empty()) throw InvalidArgument("formula has no clauses");
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        for (int lit : f.clauses[c]) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.variable_count) {
                throw InvalidArgument("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                                      " out of range");
            }
        }
    }
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment)
{
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) sat = sat || assignment.at(std::abs(lit) - 1) == (lit > 0);
        if (!sat) return false;
    }
    return true;
}

GameStructure encode_3sat_two_player(const CnfFormula& f)
{
    require_valid_cnf(f);
    const std::size_t k = 2 * f.variable_count;
    GameStructure g(k);
    const std::size_t init = g.add_state("init", Player::One);
    g.set_init(init);
    std::vector<std::size_t> clause_state;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        clause_state.push_back(g.add_state("C" + std::to_string(c + 1), Player::Two));
    }
    // Literal states in variable order, positive before negative.
    std::vector<bool> occurs(k, false);
    for (const auto& clause : f.clauses) {
        for (int lit : clause) occurs[literal_dimension(lit)] = true;
    }
    std::vector<std::size_t> literal_state(k, SIZE_MAX);
    for (std::size_t d = 0; d < k; ++d) {
        if (!occurs[d]) continue;
        const int lit = static_cast<int>(d / 2 + 1) * (d % 2 == 0 ? 1 : -1);
        literal_state[d] = g.add_state(literal_name(lit), Player::One);
    }

    const WeightVector zero = WeightVector::zero(k);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const std::string name = "C" + std::to_string(c + 1);
        g.add_edge("pick_" + name, init, clause_state[c], zero);
        for (std::size_t j = 0; j < 3; ++j) {
            g.add_edge(name + "_l" + std::to_string(j + 1), clause_state[c],
                       literal_state[literal_dimension(f.clauses[c][j])], zero);
        }
    }
    for (std::size_t d = 0; d < k; ++d) {
        if (!occurs[d]) continue;
        WeightVector w = zero;
        std::vector<Integer> c(w.begin(), w.end());
        c[d] = 1;
        c[d ^ 1] = -1;
        const int lit = static_cast<int>(d / 2 + 1) * (d % 2 == 0 ? 1 : -1);
        g.add_edge("ret_" + literal_name(lit), literal_state[d], init, WeightVector(std::move(c)));
    }
    return g;
}

SpoilerAssignment decode_3sat_spoiler(const CnfFormula& f, const MemorylessStrategy& s)
{
    const GameStructure g = encode_3sat_two_player(f);
    require_choices(g, s, Player::Two, "spoiler");
    SpoilerAssignment out;
    out.value.assign(f.variable_count, false);
    std::vector<bool> pos(f.variable_count, false), neg(f.variable_count, false);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const std::size_t state = *g.find_state("C" + std::to_string(c + 1));
        const Edge& e = g.edge(*s.choice[state]);
        const std::string& id = g.state(e.dst).id;
        const bool negative = id[0] == 'n';
        const std::size_t v = std::stoul(id.substr(negative ? 2 : 1)) - 1;
        (negative ? neg : pos)[v] = true;
    }
    for (std::size_t v = 0; v < f.variable_count; ++v) {
        out.value[v] = pos[v];
        if (pos[v] && neg[v]) {
            out.conflicting = true;
            out.conflicts.push_back(v + 1);
        }
    }
    return out;
}

GameStructure encode_knapsack(const KnapsackInstance& inst)
{
    if (inst.items.empty()) throw InvalidArgument("knapsack instance has no items");
    if (sgn(inst.bound) < 0 || sgn(inst.target) < 0) throw InvalidArgument("bound and target must be nonnegative");
    std::vector<WeightVector> yes, no;
    for (const auto& item : inst.items) {
        if (sgn(item.profit) < 0 || sgn(item.weight) < 0) throw InvalidArgument("item values must be nonnegative");
        yes.push_back(WeightVector(std::vector<Integer>{item.profit, Integer(-item.weight)}));
        no.push_back(WeightVector::zero(2));
    }
    return chain("i", inst.items.size(), 2, "Y", "N", yes, no,
                 WeightVector(std::vector<Integer>{Integer(-inst.target), inst.bound}));
}

std::vector<std::size_t> decode_knapsack_strategy(const KnapsackInstance& inst, const MemorylessStrategy& s)
{
    const GameStructure g = encode_knapsack(inst);
    require_choices(g, s, Player::One, "strategy");
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const std::string id = "i" + std::to_string(i + 1);
        if (*s.choice[*g.find_state(id)] == *g.find_edge(id + "_yes")) chosen.push_back(i);
    }
    return chosen;
}

GameStructure encode_3sat_memoryless(const CnfFormula& f)
{
    require_valid_cnf(f);
    const std::size_t m = f.clauses.size();
    std::vector<WeightVector> t, e;
    for (std::size_t v = 1; v <= f.variable_count; ++v) {
        std::vector<Integer> tw(m, 0), fw(m, 0);
        for (std::size_t c = 0; c < m; ++c) {
            for (int lit : f.clauses[c]) {
                if (static_cast<std::size_t>(std::abs(lit)) != v) continue;
                (lit > 0 ? tw : fw)[c] = 1;
            }
        }
        t.emplace_back(std::move(tw));
        e.emplace_back(std::move(fw));
    }
    return chain("x", f.variable_count, m, "T", "F", t, e, WeightVector::uniform(m, -1));
}

std::vector<bool> decode_memoryless_assignment(const CnfFormula& f, const MemorylessStrategy& s)
{
    const GameStructure g = encode_3sat_memoryless(f);
    require_choices(g, s, Player::One, "strategy");
    std::vector<bool> value(f.variable_count, false);
    for (std::size_t v = 0; v < f.variable_count; ++v) {
        const std::string id = "x" + std::to_string(v + 1);
        value[v] = *s.choice[*g.find_state(id)] == *g.find_edge(id + "_true");
    }
    return value;
}

} // namespace mwg
