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

#include "mwg/reductions.hpp"
#include "mwg/solvers.hpp"
#include "test_support.hpp"

using namespace mwg;
using namespace mwg::testing;

namespace {

std::size_t eid(const GameStructure& g, const char* id) { return *g.find_edge(id); }
std::size_t sid(const GameStructure& g, const char* id) { return *g.find_state(id); }

MemorylessStrategy choose(const GameStructure& g, Player p, std::initializer_list<std::pair<const char*, const char*>> picks)
{
    MemorylessStrategy s{p, std::vector<std::optional<std::size_t>>(g.states().size())};
    for (const auto& [state, edge] : picks) s.choice[sid(g, state)] = eid(g, edge);
    return s;
}

// Player 1 alternates between the two parallel q2 -> q0 edges.
MooreStrategy alternating(const GameStructure& g)
{
    const std::size_t n = g.states().size(), q1 = sid(g, "q1"), q2 = sid(g, "q2");
    MooreStrategy s;
    s.player = Player::One;
    s.memory = {"m0", "m1"};
    s.state_count = n;
    s.update_table.assign(2 * n, 0);
    s.next_table.assign(2 * n, std::nullopt);
    for (std::size_t st = 0; st < n; ++st) {
        s.update_table[st] = st == q2 ? 1 : 0;
        s.update_table[n + st] = st == q2 ? 0 : 1;
    }
    s.next_table[q1] = s.next_table[n + q1] = eid(g, "q1q1");
    s.next_table[q2] = eid(g, "q2q0a");
    s.next_table[n + q2] = eid(g, "q2q0b");
    return s;
}

CnfFormula single_clause() { return {3, {{1, 2, 3}}}; }

CnfFormula all_sign_patterns()
{
    CnfFormula f{3, {}};
    for (int mask = 0; mask < 8; ++mask) {
        f.clauses.push_back({mask & 1 ? -1 : 1, mask & 2 ? -2 : 2, mask & 4 ? -3 : 3});
    }
    return f;
}

GameStructure single_loop(long w)
{
    GameStructure g(1);
    g.add_state("s", Player::One);
    g.set_init(0);
    g.add_edge("loop", 0, 0, {w});
    return g;
}

} // namespace

TEST_CASE("enumerate_p2_memoryless")
{
    const auto asym = load_fixture("asymmetry.mwg");
    const auto all = enumerate_p2_memoryless(asym);
    REQUIRE(all.size() == 2);
    CHECK(all[0].choice[sid(asym, "q0")] == eid(asym, "q0q1"));
    CHECK(all[1].choice[sid(asym, "q0")] == eid(asym, "q0q2"));
    CHECK(MemorylessEnumerator(asym, Player::Two).count() == 2);

    const auto duo = load_fixture("two_loops.mwg");
    const auto none = enumerate_p2_memoryless(duo);
    REQUIRE(none.size() == 1);
    CHECK(std::none_of(none[0].choice.begin(), none[0].choice.end(), [](const auto& c) { return c.has_value(); }));

    CHECK(enumerate_p2_memoryless(encode_3sat_two_player(single_clause())).size() == 3);

    Rng rng(41);
    for (int round = 0; round < 50; ++round) {
        const auto g = random_game(rng, 5, 10, 1, 0, 0);
        const auto list = enumerate_p2_memoryless(g);
        CHECK(Integer(static_cast<unsigned long>(list.size())) == MemorylessEnumerator(g, Player::Two).count());
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(validate_strategy(g, list[i]).empty());
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(list[i] == list[j]);
        }
    }
}

TEST_CASE("solve_one_player_energy")
{
    const auto duo = load_fixture("two_loops.mwg");
    const auto v = solve_one_player_energy(duo);
    CHECK(v.answer == Answer::Yes);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(check_spoiler_witness(duo, v.witnesses[0]).empty());

    CHECK(solve_one_player_energy(single_loop(-1)).answer == Answer::No);

    const KnapsackInstance k{{{3, 3}}, 1, 1};
    CHECK(solve_one_player_energy(encode_knapsack(k)).answer == Answer::Yes);

    CHECK_THROWS_AS(solve_one_player_energy(load_fixture("asymmetry.mwg")), InvalidArgument);
}

TEST_CASE("solve_unknown_credit")
{
    const auto asym = load_fixture("asymmetry.mwg");
    const auto v = solve_unknown_credit(asym);
    CHECK(v.answer == Answer::Yes);
    CHECK(v.witnesses.size() == 2);
    CHECK(v.credit.is_nonnegative());
    for (const auto& w : v.witnesses) CHECK(check_spoiler_witness(asym, w).empty());

    CHECK_FALSE(brute_force_sat(all_sign_patterns()));
    CHECK(solve_unknown_credit(encode_3sat_two_player(all_sign_patterns())).answer == Answer::Yes);

    const auto one = encode_3sat_two_player(single_clause());
    const auto no = solve_unknown_credit(one);
    REQUIRE(no.answer == Answer::No);
    REQUIRE(no.spoiler);
    CHECK(no.spoiler->choice[sid(one, "C1")].has_value());
    CHECK(verify_p2_spoiler(one, *no.spoiler).accepted);

    GameStructure broken(1);
    broken.add_state("a", Player::One);
    CHECK_THROWS_AS(solve_unknown_credit(broken), ValidationError);
}

TEST_CASE("solve_meanpayoff_threshold")
{
    const auto duo = load_fixture("two_loops.mwg");
    CHECK(solve_meanpayoff_threshold(duo, {1, 1}).answer == Answer::No);
    CHECK(solve_meanpayoff_threshold(duo, {2, 0}).answer == Answer::Yes);
    CHECK(solve_meanpayoff_threshold(duo, {Rational(1, 2), Rational(1, 2)}).answer == Answer::Yes);
    // Longer duo at each state approach (1,1) from below.
    CHECK(solve_meanpayoff_threshold(duo, {Rational(9, 10), Rational(9, 10)}).answer == Answer::Yes);
    CHECK(solve_meanpayoff_threshold(load_fixture("asymmetry.mwg"), {0, 0}).answer == Answer::Yes);
    CHECK_THROWS_AS(solve_meanpayoff_threshold(duo, {1}), InvalidArgument);

    const auto n = normalize_threshold(duo, {Rational(1, 2), Rational(1, 3)});
    CHECK(n.edge(eid(n, "la")).weight == WeightVector{9, -2});
}

TEST_CASE("sufficient_credit")
{
    const auto duo = load_fixture("two_loops.mwg");
    const auto stay = choose(duo, Player::One, {{"qa", "la"}, {"qb", "lb"}});
    CHECK(sufficient_credit(product_with_strategy(duo, stay)) == WeightVector{2, 2});

    CHECK(sufficient_credit(product_with_strategy(single_loop(0), choose(single_loop(0), Player::One, {{"s", "loop"}}))) ==
          WeightVector{0});

    const auto asym = load_fixture("asymmetry.mwg");
    const auto p = product_with_strategy(asym, alternating(asym));
    const Integer expected = Integer(static_cast<unsigned long>(2 * p.vertex_count()));
    CHECK(sufficient_credit(p) == WeightVector::uniform(2, expected));
    CHECK(p.vertex_count() == 6);
}

TEST_CASE("verify_p1_certificate")
{
    const auto asym = load_fixture("asymmetry.mwg");
    const auto ok = verify_p1_certificate(asym, alternating(asym));
    CHECK(ok.accepted);
    CHECK(ok.credit == WeightVector{12, 12});

    const auto always_a = choose(asym, Player::One, {{"q1", "q1q1"}, {"q2", "q2q0a"}});
    const auto bad = verify_p1_certificate(asym, always_a);
    CHECK_FALSE(bad.accepted);
    CHECK(bad.bad_dimension == 0u);
    REQUIRE(bad.bad_cycle);
    Integer sum = 0;
    for (std::size_t e : bad.bad_cycle->cycle) sum += asym.edge(e).weight[0];
    CHECK(sgn(sum) < 0);

    const auto duo = load_fixture("two_loops.mwg");
    CHECK(verify_p1_certificate(duo, choose(duo, Player::One, {{"qa", "la"}, {"qb", "lb"}})).accepted);
    CHECK_THROWS_AS(verify_p1_certificate(asym, choose(asym, Player::Two, {{"q0", "q0q1"}})), InvalidArgument);
}

TEST_CASE("verify_p2_spoiler")
{
    const auto asym = load_fixture("asymmetry.mwg");
    for (const char* e : {"q0q1", "q0q2"}) {
        const auto r = verify_p2_spoiler(asym, choose(asym, Player::Two, {{"q0", e}}));
        CHECK_FALSE(r.accepted);
        REQUIRE(r.counter_example);
        CHECK(check_spoiler_witness(asym, {choose(asym, Player::Two, {{"q0", e}}), *r.counter_example}).empty());
    }

    const auto one = encode_3sat_two_player(single_clause());
    CHECK(verify_p2_spoiler(one, choose(one, Player::Two, {{"C1", "C1_l1"}})).accepted);

    const auto duo = load_fixture("two_loops.mwg");
    CHECK_FALSE(verify_p2_spoiler(duo, MemorylessStrategy{Player::Two, std::vector<std::optional<std::size_t>>(2)}).accepted);
}

TEST_CASE("memoryless Player-1 solvers")
{
    const KnapsackInstance a{{{2, 1}, {3, 2}}, 2, 3};
    const auto ga = encode_knapsack(a);
    const auto va = solve_memoryless_p1_energy(ga);
    REQUIRE(va.answer == Answer::Yes);
    CHECK(decode_knapsack_strategy(a, *va.strategy) == std::vector<std::size_t>{1});
    CHECK(verify_p1_certificate(ga, *va.strategy).accepted);

    CHECK(solve_memoryless_p1_energy(encode_knapsack({{{2, 1}, {3, 2}}, 1, 3})).answer == Answer::No);

    const auto gk = encode_knapsack({{{3, 3}}, 1, 1});
    CHECK(solve_memoryless_p1_energy(gk).answer == Answer::No);
    CHECK(solve_one_player_energy(gk).answer == Answer::Yes);

    const auto m1 = encode_3sat_memoryless(single_clause());
    CHECK(solve_memoryless_p1_meanpayoff(m1, {0}).answer == Answer::Yes);
    const auto m8 = encode_3sat_memoryless(all_sign_patterns());
    CHECK(solve_memoryless_p1_meanpayoff(m8, std::vector<Rational>(8, 0)).answer == Answer::No);

    const auto duo = load_fixture("two_loops.mwg");
    const auto v = solve_memoryless_p1_meanpayoff(duo, {2, 0});
    REQUIRE(v.answer == Answer::Yes);
    CHECK(v.strategy->choice[sid(duo, "qa")] == eid(duo, "la"));
    CHECK_THROWS_AS(solve_memoryless_p1_meanpayoff(duo, {2}), InvalidArgument);
}

TEST_CASE("clamped_fixed_credit_oracle")
{
    const auto asym = load_fixture("asymmetry.mwg");
    CHECK(clamped_fixed_credit_oracle(asym, {2, 0}, 4) == ClampedResult::P1LosesClamped);
    CHECK(clamped_fixed_credit_oracle(asym, {2, 1}, 4) == ClampedResult::P1WinsClamped);
    CHECK(clamped_fixed_credit_oracle(asym, {3, 0}, 4) == ClampedResult::P1WinsClamped);
    CHECK(clamped_fixed_credit_oracle(single_loop(-1), {3}, 3) == ClampedResult::P1LosesClamped);
    CHECK_THROWS_AS(clamped_fixed_credit_oracle(asym, {5, 0}, 4), InvalidArgument);
    CHECK_THROWS_AS(clamped_fixed_credit_oracle(asym, {1}, 4), InvalidArgument);
}

TEST_CASE("search_finite_memory_strategy")
{
    const auto asym = load_fixture("asymmetry.mwg");
    const auto found = search_finite_memory_strategy(asym, 2);
    REQUIRE(found);
    CHECK(found->first.memory_size() == 2);
    CHECK(verify_p1_certificate(asym, found->first).accepted);
    CHECK_FALSE(search_finite_memory_strategy(asym, 1));

    const auto shifted = shift_weights(load_fixture("two_loops.mwg"), {2, 0});
    const auto stay = search_finite_memory_strategy(shifted, 1);
    REQUIRE(stay);
    CHECK(stay->first.next(0, sid(shifted, "qa")) == eid(shifted, "la"));
    CHECK_THROWS_AS(search_finite_memory_strategy(asym, 0), InvalidArgument);
}

TEST_CASE("spoiler asymmetry on the asymmetry arena")
{
    const auto asym = load_fixture("asymmetry.mwg");
    for (const auto& s : enumerate_p2_memoryless(asym)) CHECK_FALSE(verify_p2_spoiler(asym, s).accepted);
    CHECK(clamped_fixed_credit_oracle(asym, {2, 0}, 4) == ClampedResult::P1LosesClamped);
}

TEST_CASE("one-player verdict matches the bounded oracle")
{
    Rng rng(43);
    for (int round = 0; round < 80; ++round) {
        const auto g = random_game(rng, 5, 7, 3, -2, 2, false);
        const auto mg = to_multigraph(g); // source = init
        const bool expected = bounded_circulation_oracle(mg, 12, CircuitMode::Nonnegative).has_value();
        const auto v = solve_one_player_energy(g);
        CHECK(expected == (v.answer == Answer::Yes));
        if (v.answer == Answer::Yes) CHECK(check_spoiler_witness(g, v.witnesses.at(0)).empty());
    }
}

TEST_CASE("solver invariants on random games")
{
    Rng rng(47);
    for (int round = 0; round < 60; ++round) {
        const auto g = random_game(rng, 4, 7, 2, -2, 2);
        const auto v = solve_unknown_credit(g);
        CHECK(solve_meanpayoff_threshold(g, std::vector<Rational>(g.dimension(), 0)).answer == v.answer);
        CHECK(solve_unknown_credit(scale_weights(g, 3)).answer == v.answer);
        if (solve_memoryless_p1_energy(g).answer == Answer::Yes) CHECK(v.answer == Answer::Yes);
        if (v.answer == Answer::No) CHECK(verify_p2_spoiler(g, *v.spoiler).accepted);
    }
}
