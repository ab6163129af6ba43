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

#include <doctest.h>

#include "mwg/core.hpp"
#include "test_support.hpp"

using namespace mwg;
using mwg::testing::load_fixture;

namespace {

std::size_t eid(const GameStructure& g, const char* id) { return *g.find_edge(id); }
std::size_t sid(const GameStructure& g, const char* id) { return *g.find_state(id); }

bool has_rule(const std::vector<Violation>& v, const std::string& rule)
{
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

} // namespace

TEST_CASE("weight vectors")
{
    WeightVector a{1, 2}, b{2, 2};
    CHECK(a + b == WeightVector{3, 4});
    CHECK(b - a == WeightVector{1, 0});
    CHECK(a * Integer(3) == WeightVector{3, 6});
    CHECK(WeightVector::zero(3).is_zero());
    CHECK(WeightVector{0, 5}.is_nonnegative());
    CHECK_FALSE(WeightVector{0, -5}.is_nonnegative());
    CHECK(WeightVector{3, -7}.max_abs() == 7);
    CHECK(to_string(WeightVector{-1, 1}) == "(-1,1)");
    CHECK_THROWS_AS(a + WeightVector{1}, InvalidArgument);
}

TEST_CASE("validate_game")
{
    CHECK(validate_game(load_fixture("asymmetry.mwg")).empty());

    GameStructure sink(1);
    sink.add_state("a", Player::One);
    sink.add_state("b", Player::One);
    sink.add_edge("ab", 0, 1, {0});
    auto v = validate_game(sink);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "out-degree");
    CHECK(v[0].subject.find("b") != std::string::npos);

    GameStructure arity(2);
    arity.add_state("a", Player::One);
    arity.add_edge("aa", 0, 0, {1});
    v = validate_game(arity);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "weight-arity");

    GameStructure dup(1);
    dup.add_state("a", Player::One);
    dup.add_edge("x", 0, 0, {1});
    dup.add_edge("x", 0, 0, {2});
    CHECK(has_rule(validate_game(dup), "duplicate-id"));

    GameStructure flat(0);
    flat.add_state("a", Player::One);
    flat.add_edge("aa", 0, 0, WeightVector::zero(0));
    CHECK_FALSE(validate_game(flat).empty());
    CHECK_THROWS_AS(require_valid(flat), ValidationError);
}

TEST_CASE("energy_level")
{
    const auto asym = load_fixture("asymmetry.mwg");
    const std::vector<std::size_t> p{eid(asym, "q0q2"), eid(asym, "q2q0a")};
    CHECK(energy_level(asym, p) == WeightVector{-1, 1});
    CHECK(energy_level(asym, {}) == WeightVector{0, 0});
    const std::vector<std::size_t> broken{eid(asym, "q2q0a")};
    CHECK_THROWS_AS(energy_level(asym, broken), InvalidArgument);

    const auto duo = load_fixture("two_loops.mwg");
    const std::vector<std::size_t> loops{eid(duo, "la"), eid(duo, "la")};
    CHECK(energy_level(duo, loops) == WeightVector{4, 0});

    // Additivity over composable walks.
    const std::vector<std::size_t> a{eid(duo, "la"), eid(duo, "ab")};
    const std::vector<std::size_t> b{eid(duo, "lb"), eid(duo, "ba")};
    std::vector<std::size_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(energy_level(duo, ab) == energy_level(duo, a) + walk_weight(to_multigraph(duo), b));
}

TEST_CASE("mean_payoff_of_lasso")
{
    const auto g = load_fixture("two_loops.mwg");
    const auto la = eid(g, "la"), lb = eid(g, "lb"), ab = eid(g, "ab"), ba = eid(g, "ba");
    CHECK(mean_payoff_of_lasso(g, {{}, {la}}) == std::vector<Rational>{2, 0});
    CHECK(mean_payoff_of_lasso(g, {{}, {ab, ba}}) == std::vector<Rational>{0, 0});
    CHECK(mean_payoff_of_lasso(g, {{}, {la, ab, lb, ba}}) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(mean_payoff_of_lasso(g, {{}, {}}), InvalidArgument);

    // Rotation and repetition do not change the mean payoff.
    const auto base = mean_payoff_of_lasso(g, {{la}, {ab, lb, ba}});
    CHECK(mean_payoff_of_lasso(g, {{la, ab}, {lb, ba, ab}}) == base);
    CHECK(mean_payoff_of_lasso(g, {{la}, {ab, lb, ba, ab, lb, ba}}) == base);
}

TEST_CASE("shift and scale")
{
    const auto g = load_fixture("two_loops.mwg");
    const auto s = shift_weights(g, {1, 1});
    CHECK(s.edge(eid(s, "la")).weight == WeightVector{1, -1});
    CHECK(structurally_equal(shift_weights(g, {0, 0}), g));
    CHECK_THROWS_AS(shift_weights(g, {1}), InvalidArgument);

    const WeightVector u{2, -1}, v{-3, 5};
    const auto twice = shift_weights(shift_weights(g, u), v);
    const auto once = shift_weights(g, u + v);
    for (std::size_t e = 0; e < g.edges().size(); ++e) CHECK(twice.edge(e).weight == once.edge(e).weight);

    const auto asym = load_fixture("asymmetry.mwg");
    CHECK(structurally_equal(scale_weights(asym, 1), asym));
    CHECK(scale_weights(asym, 2).edge(eid(asym, "q0q1")).weight == WeightVector{-4, 0});
    CHECK_THROWS_AS(scale_weights(asym, 0), InvalidArgument);

    // MP in shifted game = MP in original - v, on random lassos.
    mwg::testing::Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::size_t> cycle;
        std::size_t at = sid(g, "qa");
        const long len = mwg::testing::uniform(rng, 1, 6);
        for (long i = 0; i < len || at != sid(g, "qa"); ++i) {
            const auto out = g.out_edges(at);
            const std::size_t e = out[mwg::testing::uniform(rng, 0, out.size() - 1)];
            cycle.push_back(e);
            at = g.edge(e).dst;
        }
        const WeightVector shift = mwg::testing::random_weight(rng, 2, -3, 3);
        const auto before = mean_payoff_of_lasso(g, {{}, cycle});
        const auto after = mean_payoff_of_lasso(shift_weights(g, shift), {{}, cycle});
        for (std::size_t d = 0; d < 2; ++d) CHECK(after[d] == before[d] - Rational(shift[d]));
    }
}

TEST_CASE("product_with_strategy")
{
    const auto g = load_fixture("asymmetry.mwg");
    const std::size_t q0 = sid(g, "q0"), q2 = sid(g, "q2");

    MemorylessStrategy left{Player::Two, std::vector<std::optional<std::size_t>>(3)};
    left.choice[q0] = eid(g, "q0q1");
    const auto p = product_with_strategy(g, left);
    CHECK(p.vertex_count() == 2);
    for (const auto& v : p.vertices) CHECK(v.state != q2);

    // Two-memory alternation between the parallel q2 -> q0 edges.
    MooreStrategy alt;
    alt.player = Player::One;
    alt.memory = {"m0", "m1"};
    alt.state_count = 3;
    alt.update_table.assign(6, 0);
    alt.next_table.assign(6, std::nullopt);
    for (std::size_t s = 0; s < 3; ++s) {
        alt.update_table[0 * 3 + s] = s == q2 ? 1 : 0;
        alt.update_table[1 * 3 + s] = s == q2 ? 0 : 1;
    }
    const std::size_t q1 = sid(g, "q1");
    alt.next_table[0 * 3 + q1] = alt.next_table[1 * 3 + q1] = eid(g, "q1q1");
    alt.next_table[0 * 3 + q2] = eid(g, "q2q0a");
    alt.next_table[1 * 3 + q2] = eid(g, "q2q0b");
    const auto pa = product_with_strategy(g, alt);
    CHECK(pa.vertex_count() <= 6);
    for (std::size_t v = 0; v < pa.vertex_count(); ++v) {
        if (g.state(pa.vertices[v].state).owner == Player::One) CHECK(pa.graph.out_edges(v).size() == 1);
        for (std::size_t e : pa.graph.out_edges(v)) CHECK(g.edge(pa.graph.edge(e).label).src == pa.vertices[v].state);
    }

    // Memoryless product = reachable states, out-degree 1 at the owner's states.
    mwg::testing::Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        const auto rg = mwg::testing::random_game(rng, 5, 9, 2, -2, 2);
        MemorylessEnumerator en(rg, Player::One);
        const auto s = *en.next();
        const auto rp = product_with_strategy(rg, s);
        std::vector<bool> seen(rg.states().size(), false);
        std::vector<std::size_t> stack{rg.init()};
        seen[rg.init()] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : rg.out_edges(v)) {
                if (rg.state(v).owner == Player::One && s.choice[v] != e) continue;
                if (!seen[rg.edge(e).dst]) {
                    seen[rg.edge(e).dst] = true;
                    stack.push_back(rg.edge(e).dst);
                }
            }
        }
        CHECK(rp.vertex_count() == static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true)));
        for (std::size_t v = 0; v < rp.vertex_count(); ++v) {
            if (rg.state(rp.vertices[v].state).owner == Player::One) CHECK(rp.graph.out_edges(v).size() == 1);
        }
    }

    MemorylessStrategy foreign{Player::Two, std::vector<std::optional<std::size_t>>(3)};
    foreign.choice[q0] = eid(g, "q1q1");
    CHECK_THROWS_AS(product_with_strategy(g, foreign), ValidationError);
}
