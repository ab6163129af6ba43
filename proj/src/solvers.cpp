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

#include "mwg/solvers.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace mwg {

MemorylessEnumerator::MemorylessEnumerator(const GameStructure& g, Player p)
    : game_(g), player_(p), owned_(g.states_of(p)), digits_(owned_.size(), 0)
{
    for (std::size_t s : owned_) {
        if (g.out_edges(s).empty()) done_ = true;
    }
}

std::optional<MemorylessStrategy> MemorylessEnumerator::next()
{
    if (done_) return std::nullopt;
    MemorylessStrategy s{player_, std::vector<std::optional<std::size_t>>(game_.states().size())};
    for (std::size_t i = 0; i < owned_.size(); ++i) s.choice[owned_[i]] = game_.out_edges(owned_[i])[digits_[i]];

    std::size_t i = owned_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++digits_[i] < game_.out_edges(owned_[i]).size()) break;
        digits_[i] = 0;
    }
    return s;
}

Integer MemorylessEnumerator::count() const
{
    Integer n = 1;
    for (std::size_t s : owned_) n *= static_cast<unsigned long>(game_.out_edges(s).size());
    return n;
}

std::vector<MemorylessStrategy> enumerate_p2_memoryless(const GameStructure& g)
{
    std::vector<MemorylessStrategy> out;
    MemorylessEnumerator en(g, Player::Two);
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

namespace {

// Shortest walk (fewest edges) in `graph` from `from` to `to`, as edge ids.
std::optional<std::vector<std::size_t>> shortest_walk(const MultiGraph& graph, std::size_t from, std::size_t to)
{
    std::vector<std::size_t> via(graph.vertex_count(), SIZE_MAX);
    std::vector<bool> seen(graph.vertex_count(), false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty() && !seen[to]) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t e : graph.out_edges(v)) {
            const std::size_t w = graph.edge(e).dst;
            if (seen[w]) continue;
            seen[w] = true;
            via[w] = e;
            queue.push_back(w);
        }
    }
    if (!seen[to]) return std::nullopt;
    std::vector<std::size_t> walk;
    for (std::size_t v = to; v != from; v = graph.edge(via[v]).src) walk.push_back(via[v]);
    std::reverse(walk.begin(), walk.end());
    return walk;
}

// Maps a circuit of a product graph to a lasso over game edges.
Lasso lasso_in_product(const ProductGraph& p, const std::vector<std::size_t>& cycle)
{
    const std::size_t start = p.graph.edge(cycle.front()).src;
    auto stem = shortest_walk(p.graph, p.init, start);
    if (!stem) throw std::logic_error("product circuit is not reachable from the initial vertex");
    Lasso l;
    for (std::size_t e : *stem) l.stem.push_back(p.graph.edge(e).label);
    for (std::size_t e : cycle) l.cycle.push_back(p.graph.edge(e).label);
    return l;
}

bool follows(const GameStructure& g, const MemorylessStrategy& s, std::size_t e)
{
    const std::size_t src = g.edge(e).src;
    return g.state(src).owner != s.player || s.choice[src] == e;
}

// The game restricted to the moves `s` allows, over game edge ids.
MultiGraph restricted_graph(const GameStructure& g, const MemorylessStrategy& s)
{
    MultiGraph mg(g.states().size(), g.dimension());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (follows(g, s, e)) mg.add_edge(g.edge(e).src, g.edge(e).dst, g.edge(e).weight, e);
    }
    return mg;
}

// Reuses an earlier cycle against a new opponent strategy if the cycle is
// still available and reachable.
std::optional<Lasso> reuse_cycle(const GameStructure& g, const MemorylessStrategy& s,
                                 const std::vector<std::size_t>& cycle)
{
    for (std::size_t e : cycle) {
        if (!follows(g, s, e)) return std::nullopt;
    }
    const MultiGraph mg = restricted_graph(g, s);
    auto stem = shortest_walk(mg, g.init(), g.edge(cycle.front()).src);
    if (!stem) return std::nullopt;
    Lasso l;
    for (std::size_t e : *stem) l.stem.push_back(mg.edge(e).label);
    l.cycle = cycle;
    return l;
}

void require_player(const MemorylessStrategy& s, Player p, const char* what)
{
    if (s.player != p) throw InvalidArgument(std::string(what) + " must be a strategy of Player " + (p == Player::One ? "1" : "2"));
}

Verdict solve_by_spoiler_enumeration(const GameStructure& g)
{
    Verdict v;
    v.credit = WeightVector::zero(g.dimension());
    std::vector<std::vector<std::size_t>> known_cycles;
    MemorylessEnumerator opponents(g, Player::Two);
    while (auto s = opponents.next()) {
        std::optional<Lasso> lasso;
        for (const auto& cycle : known_cycles) {
            if ((lasso = reuse_cycle(g, *s, cycle))) break;
        }
        if (!lasso) {
            const ProductGraph p = product_with_strategy(g, *s);
            auto circuit = nonnegative_circuit(p.graph, p.init);
            if (!circuit) {
                Verdict no;
                no.answer = Answer::No;
                no.spoiler = std::move(*s);
                return no;
            }
            lasso = lasso_in_product(p, circuit->edges);
            known_cycles.push_back(lasso->cycle);
        }
        v.credit += lasso_credit(g, *lasso);
        v.witnesses.push_back({std::move(*s), std::move(*lasso)});
    }
    v.answer = Answer::Yes;
    return v;
}

} // namespace

Verdict solve_one_player_energy(const GameStructure& g)
{
    require_valid(g);
    if (!g.states_of(Player::Two).empty()) throw InvalidArgument("game has Player-2 states");
    return solve_by_spoiler_enumeration(g);
}

Verdict solve_unknown_credit(const GameStructure& g)
{
    require_valid(g);
    return solve_by_spoiler_enumeration(g);
}

GameStructure normalize_threshold(const GameStructure& g, const std::vector<Rational>& threshold)
{
    if (threshold.size() != g.dimension()) {
        throw InvalidArgument("threshold has " + std::to_string(threshold.size()) + " components, dimension is " +
                              std::to_string(g.dimension()));
    }
    Integer l = 1;
    for (const auto& t : threshold) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.get_den_mpz_t());
    std::vector<Integer> shift;
    for (const auto& t : threshold) shift.push_back(Integer(t.get_num() * (l / t.get_den())));
    const GameStructure scaled = l == 1 ? g : scale_weights(g, l);
    return shift_weights(scaled, WeightVector(std::move(shift)));
}

Verdict solve_meanpayoff_threshold(const GameStructure& g, const std::vector<Rational>& threshold)
{
    require_valid(g);
    return solve_unknown_credit(normalize_threshold(g, threshold));
}

WeightVector sufficient_credit(const ProductGraph& p)
{
    return WeightVector::uniform(p.graph.dimension(),
                                 Integer(static_cast<unsigned long>(p.vertex_count())) * p.game_max_abs_weight);
}

WeightVector lasso_credit(const GameStructure& g, const Lasso& l)
{
    return WeightVector::uniform(g.dimension(),
                                 Integer(static_cast<unsigned long>(l.stem.size() + l.cycle.size())) * g.max_abs_weight());
}

P1Check verify_p1_certificate(const GameStructure& g, const MooreStrategy& s)
{
    if (s.player != Player::One) throw InvalidArgument("certificate must be a strategy of Player 1");
    const ProductGraph p = product_with_strategy(g, s);
    P1Check check;
    for (std::size_t d = 0; d < g.dimension(); ++d) {
        if (auto cycle = negative_cycle_in_dimension(p.graph, d, p.init)) {
            check.bad_dimension = d;
            check.bad_cycle = lasso_in_product(p, cycle->edges);
            return check;
        }
    }
    check.accepted = true;
    check.credit = sufficient_credit(p);
    return check;
}

P1Check verify_p1_certificate(const GameStructure& g, const MemorylessStrategy& s)
{
    require_player(s, Player::One, "certificate");
    return verify_p1_certificate(g, MooreStrategy::from_memoryless(s));
}

P2Check verify_p2_spoiler(const GameStructure& g, const MemorylessStrategy& s)
{
    require_player(s, Player::Two, "spoiler");
    const ProductGraph p = product_with_strategy(g, s);
    P2Check check;
    if (auto circuit = nonnegative_circuit(p.graph, p.init)) {
        check.counter_example = lasso_in_product(p, circuit->edges);
        return check;
    }
    check.accepted = true;
    return check;
}

std::vector<Violation> check_spoiler_witness(const GameStructure& g, const SpoilerWitness& w)
{
    std::vector<Violation> out = validate_strategy(g, w.opponent);
    if (w.opponent.player != Player::Two) out.push_back({"witness", "player", "opponent is not Player 2"});
    if (!out.empty()) return out;
    if (w.lasso.cycle.empty()) {
        out.push_back({"witness", "empty", "cycle is empty"});
        return out;
    }
    std::size_t at = g.init();
    auto walk = [&](const std::vector<std::size_t>& edges, const char* part) {
        for (std::size_t e : edges) {
            if (e >= g.edges().size() || g.edge(e).src != at) {
                out.push_back({"witness", "adjacent", std::string(part) + " is not a walk"});
                return false;
            }
            if (!follows(g, w.opponent, e)) {
                out.push_back({"witness", "consistent", std::string(part) + " leaves the opponent's choice at " +
                                                            g.state(g.edge(e).src).id});
                return false;
            }
            at = g.edge(e).dst;
        }
        return true;
    };
    if (!walk(w.lasso.stem, "stem")) return out;
    const std::size_t start = at;
    if (!walk(w.lasso.cycle, "cycle")) return out;
    if (at != start) out.push_back({"witness", "closed", "cycle does not return to its start"});
    WeightVector sum = WeightVector::zero(g.dimension());
    for (std::size_t e : w.lasso.cycle) sum += g.edge(e).weight;
    if (!sum.is_nonnegative()) out.push_back({"witness", "weight", "cycle weight " + to_string(sum) + " is negative"});
    return out;
}

namespace {

template <typename Accept>
MemorylessVerdict first_memoryless_winner(const GameStructure& g, Accept&& accept)
{
    MemorylessEnumerator candidates(g, Player::One);
    while (auto s = candidates.next()) {
        const ProductGraph p = product_with_strategy(g, *s);
        if (accept(p)) return {Answer::Yes, std::move(*s), sufficient_credit(p)};
    }
    return {Answer::No, std::nullopt, {}};
}

} // namespace

MemorylessVerdict solve_memoryless_p1_energy(const GameStructure& g)
{
    require_valid(g);
    return first_memoryless_winner(g, [&](const ProductGraph& p) {
        for (std::size_t d = 0; d < g.dimension(); ++d) {
            if (negative_cycle_in_dimension(p.graph, d, p.init)) return false;
        }
        return true;
    });
}

MemorylessVerdict solve_memoryless_p1_meanpayoff(const GameStructure& g, const std::vector<Rational>& threshold)
{
    require_valid(g);
    const GameStructure shifted = normalize_threshold(g, threshold);
    return first_memoryless_winner(shifted, [&](const ProductGraph& p) {
        for (std::size_t d = 0; d < shifted.dimension(); ++d) {
            auto mean = min_mean_cycle(p.graph, d);
            if (mean && sgn(*mean) < 0) return false;
        }
        return true;
    });
}

ClampedResult clamped_fixed_credit_oracle(const GameStructure& g, const WeightVector& v0, unsigned cap)
{
    require_valid(g);
    const std::size_t k = g.dimension();
    if (v0.size() != k) throw InvalidArgument("credit vector has the wrong dimension");
    for (const auto& c : v0) {
        if (sgn(c) < 0) throw InvalidArgument("credit must be nonnegative");
        if (c > cap) throw InvalidArgument("cap " + std::to_string(cap) + " is below credit component " + c.get_str());
    }
    const std::size_t base = std::size_t{cap} + 1;
    std::size_t levels = 1;
    for (std::size_t d = 0; d < k; ++d) {
        if (levels > 50'000'000 / base) throw InvalidArgument("clamped state space too large");
        levels *= base;
    }
    const std::size_t n = g.states().size();
    if (levels > 50'000'000 / n) throw InvalidArgument("clamped state space too large");
    const std::size_t total = n * levels;

    constexpr std::size_t bad = SIZE_MAX;
    auto decode = [&](std::size_t code) {
        std::vector<long> e(k);
        for (std::size_t d = 0; d < k; ++d) {
            e[d] = static_cast<long>(code % base);
            code /= base;
        }
        return e;
    };
    auto successor = [&](std::size_t pos, std::size_t edge) {
        const auto e = decode(pos % levels);
        const auto& w = g.edge(edge).weight;
        std::size_t code = 0, mul = 1;
        for (std::size_t d = 0; d < k; ++d) {
            Integer next = w[d] + e[d];
            if (sgn(next) < 0) return bad;
            const std::size_t clamped = next > cap ? cap : next.get_ui();
            code += clamped * mul;
            mul *= base;
        }
        return g.edge(edge).dst * levels + code;
    };

    // Backward attractor to the losing sink for Player 2.
    std::vector<std::vector<std::size_t>> preds(total);
    std::vector<std::size_t> open_moves(total, 0);
    std::vector<bool> losing(total, false);
    std::deque<std::size_t> queue;
    for (std::size_t pos = 0; pos < total; ++pos) {
        const std::size_t s = pos / levels;
        const bool p1 = g.state(s).owner == Player::One;
        open_moves[pos] = p1 ? g.out_edges(s).size() : 1;
        for (std::size_t e : g.out_edges(s)) {
            const std::size_t t = successor(pos, e);
            if (t == bad) {
                if (!losing[pos] && (!p1 || --open_moves[pos] == 0)) {
                    losing[pos] = true;
                    queue.push_back(pos);
                }
            } else {
                preds[t].push_back(pos);
            }
        }
    }
    while (!queue.empty()) {
        const std::size_t t = queue.front();
        queue.pop_front();
        for (std::size_t pos : preds[t]) {
            if (losing[pos]) continue;
            const bool p1 = g.state(pos / levels).owner == Player::One;
            if (!p1 || --open_moves[pos] == 0) {
                losing[pos] = true;
                queue.push_back(pos);
            }
        }
    }

    std::size_t code = 0, mul = 1;
    for (std::size_t d = 0; d < k; ++d) {
        code += v0[d].get_ui() * mul;
        mul *= base;
    }
    return losing[g.init() * levels + code] ? ClampedResult::P1LosesClamped : ClampedResult::P1WinsClamped;
}

namespace {

// Memory states must appear in breadth-first order of first use from m0 = 0,
// and all of them must be reachable through the update table.
bool canonical_update(const std::vector<std::size_t>& update, std::size_t memory, std::size_t states)
{
    std::vector<std::size_t> order{0};
    std::vector<bool> seen(memory, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t s = 0; s < states; ++s) {
            const std::size_t m = update[order[i] * states + s];
            if (seen[m]) continue;
            if (m != order.size()) return false;
            seen[m] = true;
            order.push_back(m);
        }
    }
    return order.size() == memory;
}

bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

} // namespace

std::optional<std::pair<MooreStrategy, WeightVector>> search_finite_memory_strategy(const GameStructure& g,
                                                                                    std::size_t max_memory)
{
    require_valid(g);
    if (max_memory == 0) throw InvalidArgument("max_memory must be at least 1");
    const std::size_t n = g.states().size();
    const auto owned = g.states_of(Player::One);

    for (std::size_t memory = 1; memory <= max_memory; ++memory) {
        std::vector<std::size_t> update(memory * n, 0);
        const std::vector<std::size_t> update_radix(memory * n, memory);
        do {
            if (!canonical_update(update, memory, n)) continue;
            std::vector<std::size_t> choice(memory * owned.size(), 0);
            std::vector<std::size_t> choice_radix;
            for (std::size_t m = 0; m < memory; ++m) {
                for (std::size_t s : owned) choice_radix.push_back(g.out_edges(s).size());
            }
            do {
                MooreStrategy candidate;
                candidate.player = Player::One;
                for (std::size_t m = 0; m < memory; ++m) candidate.memory.push_back("m" + std::to_string(m));
                candidate.state_count = n;
                candidate.update_table = update;
                candidate.next_table.assign(memory * n, std::nullopt);
                for (std::size_t m = 0; m < memory; ++m) {
                    for (std::size_t i = 0; i < owned.size(); ++i) {
                        candidate.next_table[m * n + owned[i]] =
                            g.out_edges(owned[i])[choice[m * owned.size() + i]];
                    }
                }
                P1Check check = verify_p1_certificate(g, candidate);
                if (check.accepted) return std::make_pair(std::move(candidate), std::move(check.credit));
            } while (advance(choice, choice_radix));
        } while (advance(update, update_radix));
    }
    return std::nullopt;
}

} // namespace mwg
