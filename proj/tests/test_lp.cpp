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

#include "mwg/lp.hpp"
#include "test_support.hpp"

using namespace mwg;
using namespace mwg::lp;

namespace {

std::vector<Rational> q(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("lp_feasible")
{
    LinearConstraintSystem a;
    a.add_variable("x");
    a.add_constraint(q({1}), Relation::GreaterEqual, 1);
    a.add_constraint(q({-1}), Relation::GreaterEqual, -2);
    const auto ra = lp_feasible(a);
    REQUIRE(ra.status == LpStatus::Feasible);
    CHECK(a.satisfied_by(ra.assignment));

    LinearConstraintSystem b;
    b.add_variable("x");
    b.add_constraint(q({1}), Relation::GreaterEqual, 1);
    b.add_constraint(q({-1}), Relation::GreaterEqual, 0);
    CHECK(lp_feasible(b).status == LpStatus::Infeasible);

    // Two-edge connector cycle qa -> qb -> qa of the two-loop arena:
    // flow balance, zero sums in both dimensions, total >= 1.
    LinearConstraintSystem c;
    c.add_variable("ab");
    c.add_variable("ba");
    c.add_constraint(q({1, -1}), Relation::Equal, 0);
    c.add_constraint(q({0, 0}), Relation::Equal, 0);
    c.add_constraint(q({1, 1}), Relation::GreaterEqual, 1);
    const auto rc = lp_feasible(c);
    REQUIRE(rc.status == LpStatus::Feasible);
    CHECK(c.satisfied_by(rc.assignment));
    CHECK(rc.assignment[0] == rc.assignment[1]);

    LinearConstraintSystem bad;
    bad.add_variable("x");
    bad.add_constraint(q({1, 2}), Relation::Equal, 0);
    CHECK_THROWS_AS(lp_feasible(bad), InvalidArgument);
}

TEST_CASE("lp_maximize")
{
    LinearConstraintSystem a;
    a.add_variable("x");
    a.add_constraint(q({-1}), Relation::GreaterEqual, -3);
    const auto obj = q({1});
    const auto ra = lp_maximize(a, obj);
    REQUIRE(ra.status == LpStatus::Feasible);
    CHECK(ra.assignment[0] == 3);
    CHECK(ra.objective == 3);

    LinearConstraintSystem b;
    b.add_variable("x");
    CHECK(lp_maximize(b, obj).status == LpStatus::Unbounded);

    LinearConstraintSystem free;
    free.add_variable("y", Domain::Free);
    free.add_constraint(q({1}), Relation::GreaterEqual, -5);
    const auto min_y = q({-1});
    const auto rf = lp_maximize(free, min_y);
    REQUIRE(rf.status == LpStatus::Feasible);
    CHECK(rf.assignment[0] == -5);
}

TEST_CASE("lp_maximize dominates lattice points in a box")
{
    mwg::testing::Rng rng(3);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = mwg::testing::uniform(rng, 2, 3);
        LinearConstraintSystem sys;
        for (std::size_t i = 0; i < n; ++i) {
            sys.add_variable("x" + std::to_string(i));
            std::vector<Rational> cap(n, 0);
            cap[i] = -1;
            sys.add_constraint(cap, Relation::GreaterEqual, -4); // box 0..4
        }
        const std::size_t rows = mwg::testing::uniform(rng, 1, 3);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Rational> row;
            for (std::size_t i = 0; i < n; ++i) row.emplace_back(mwg::testing::uniform(rng, -3, 3));
            const bool eq = mwg::testing::uniform(rng, 0, 3) == 0;
            sys.add_constraint(row, eq ? Relation::Equal : Relation::GreaterEqual, mwg::testing::uniform(rng, -4, 4));
        }
        std::vector<Rational> obj;
        for (std::size_t i = 0; i < n; ++i) obj.emplace_back(mwg::testing::uniform(rng, -3, 3));

        const auto r = lp_maximize(sys, obj);
        REQUIRE(r.status != LpStatus::Unbounded);
        if (r.status == LpStatus::Feasible) CHECK(sys.satisfied_by(r.assignment));

        // Enumerate integer points of the box.
        std::vector<Rational> x(n, 0);
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (i == n) {
                if (!sys.satisfied_by(x)) return;
                REQUIRE(r.status == LpStatus::Feasible);
                Rational value = 0;
                for (std::size_t j = 0; j < n; ++j) value += obj[j] * x[j];
                CHECK(r.objective >= value);
                return;
            }
            for (long v = 0; v <= 4; ++v) {
                x[i] = v;
                walk(i + 1);
            }
        };
        walk(0);
    }
}

TEST_CASE("max_support_solution")
{
    LinearConstraintSystem two;
    two.add_variable("x");
    two.add_variable("y");
    two.add_constraint(q({1, 0}), Relation::GreaterEqual, 0);
    const auto r2 = max_support_solution(two);
    REQUIRE(r2.outcome.status == LpStatus::Feasible);
    CHECK(r2.support == std::vector<bool>{true, true});
    CHECK(two.satisfied_by(r2.outcome.assignment));

    LinearConstraintSystem forced;
    forced.add_variable("x");
    forced.add_variable("y");
    forced.add_constraint(q({0, 1}), Relation::Equal, 0);
    forced.add_constraint(q({1, 0}), Relation::GreaterEqual, 1);
    const auto rf = max_support_solution(forced);
    REQUIRE(rf.outcome.status == LpStatus::Feasible);
    CHECK(rf.support == std::vector<bool>{true, false});

    // Two disjoint 2-cycles a<->b and c<->d plus a dead edge b->c; circulation
    // constraints with total >= 1. Support must contain both cycles only.
    LinearConstraintSystem circ;
    for (const char* name : {"ab", "ba", "cd", "dc", "bc"}) circ.add_variable(name);
    circ.add_constraint(q({1, -1, 0, 0, 0}), Relation::Equal, 0);  // a
    circ.add_constraint(q({-1, 1, 0, 0, 1}), Relation::Equal, 0);  // b
    circ.add_constraint(q({0, 0, 1, -1, -1}), Relation::Equal, 0); // c
    circ.add_constraint(q({1, 1, 1, 1, 1}), Relation::GreaterEqual, 1);
    const auto rc = max_support_solution(circ);
    REQUIRE(rc.outcome.status == LpStatus::Feasible);
    CHECK(rc.support == std::vector<bool>{true, true, true, true, false});

    LinearConstraintSystem none;
    none.add_variable("x");
    none.add_constraint(q({-1}), Relation::GreaterEqual, 1);
    CHECK(max_support_solution(none).outcome.status == LpStatus::Infeasible);

    LinearConstraintSystem with_free;
    with_free.add_variable("x", Domain::Free);
    CHECK_THROWS_AS(max_support_solution(with_free), InvalidArgument);
}

TEST_CASE("integer_scale")
{
    const std::vector<Rational> half{Rational(1, 2), Rational(3, 2)};
    CHECK(integer_scale(half) == std::vector<Integer>{1, 3});
    const auto ints = q({2, 0, 5});
    CHECK(integer_scale(ints) == std::vector<Integer>{2, 0, 5});

    mwg::testing::Rng rng(5);
    for (int round = 0; round < 100; ++round) {
        std::vector<Rational> x;
        for (int i = 0; i < 4; ++i) {
            Rational r(mwg::testing::uniform(rng, 0, 20), mwg::testing::uniform(rng, 1, 12));
            r.canonicalize();
            x.push_back(r);
        }
        const auto s = integer_scale(x);
        Integer l = 1;
        for (const auto& r : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(Rational(s[i]) / Rational(l) == x[i]);
    }
}
