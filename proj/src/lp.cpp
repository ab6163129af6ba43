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

#include "mwg/lp.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

#include "mwg/error.hpp"

namespace mwg::lp {

std::size_t LinearConstraintSystem::add_variable(std::string name, Domain domain)
{
    variables_.push_back({std::move(name), domain});
    return variables_.size() - 1;
}

void LinearConstraintSystem::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs)
{
    constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearConstraintSystem::check_well_formed() const
{
    for (std::size_t r = 0; r < constraints_.size(); ++r) {
        if (constraints_[r].coefficients.size() != variables_.size()) {
            throw InvalidArgument("constraint " + std::to_string(r) + " has " +
                                  std::to_string(constraints_[r].coefficients.size()) + " coefficients, expected " +
                                  std::to_string(variables_.size()));
        }
    }
}

bool LinearConstraintSystem::satisfied_by(std::span<const Rational> x) const
{
    if (x.size() != variables_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (variables_[i].domain == Domain::NonNegative && sgn(x[i]) < 0) return false;
    }
    for (const auto& c : constraints_) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(c.coefficients[i]) != 0) lhs += c.coefficients[i] * x[i];
        }
        if (c.relation == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
    }
    return true;
}

namespace {

/**
 * Dense two-phase tableau simplex over exact rationals with Bland's rule.
 *
 * Standard form: free variables are split into a difference of two
 * nonnegative columns, each >= row gets a surplus column, rows are negated
 * to make the right-hand side nonnegative, and every row starts with its
 * own artificial column in the basis.
 */
class Tableau
{
public:
    explicit Tableau(const LinearConstraintSystem& sys) : sys_(sys)
    {
        sys.check_well_formed();
        const auto& vars = sys.variables();
        for (const auto& v : vars) {
            plus_.push_back(structural_++);
            minus_.push_back(v.domain == Domain::Free ? std::optional<std::size_t>(structural_++) : std::nullopt);
        }
        std::vector<std::optional<std::size_t>> surplus;
        for (const auto& c : sys.constraints()) {
            surplus.push_back(c.relation == Relation::GreaterEqual ? std::optional<std::size_t>(structural_++)
                                                                  : std::nullopt);
        }
        rows_ = sys.constraints().size();
        columns_ = structural_ + rows_;
        rhs_ = columns_;
        table_.assign(rows_, std::vector<Rational>(columns_ + 1));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& c = sys.constraints()[r];
            auto& row = table_[r];
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (sgn(c.coefficients[i]) == 0) continue;
                row[plus_[i]] = c.coefficients[i];
                if (minus_[i]) row[*minus_[i]] = -c.coefficients[i];
            }
            if (surplus[r]) row[*surplus[r]] = -1;
            row[rhs_] = c.rhs;
            if (sgn(c.rhs) < 0) {
                for (auto& a : row) a = -a;
            }
            row[structural_ + r] = 1;
            basis_[r] = structural_ + r;
        }
    }

    /// Phase 1. Returns false if the system is infeasible; otherwise leaves a
    /// feasible basis free of artificial columns (redundant rows dropped).
    bool find_feasible_basis()
    {
        objective_.assign(columns_ + 1, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < structural_; ++j) objective_[j] -= table_[r][j];
            objective_[rhs_] -= table_[r][rhs_];
        }
        if (!optimize()) throw std::logic_error("phase 1 of the simplex cannot be unbounded");
        if (sgn(objective_[rhs_]) < 0) return false;

        for (std::size_t r = 0; r < rows_;) {
            if (basis_[r] < structural_) {
                ++r;
                continue;
            }
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < structural_ && !entering; ++j) {
                if (sgn(table_[r][j]) != 0) entering = j;
            }
            if (entering) {
                pivot(r, *entering);
                ++r;
            } else {
                table_.erase(table_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                --rows_;
            }
        }
        return true;
    }

    /// Phase 2 for max c.x. Returns false if unbounded.
    bool maximize(std::span<const Rational> c)
    {
        objective_.assign(columns_ + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            objective_[plus_[i]] = -c[i];
            if (minus_[i]) objective_[*minus_[i]] = c[i];
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational factor = objective_[basis_[r]];
            if (sgn(factor) == 0) continue;
            for (std::size_t j = 0; j <= columns_; ++j) {
                if (sgn(table_[r][j]) != 0) objective_[j] -= factor * table_[r][j];
            }
        }
        return optimize();
    }

    Rational objective_value() const { return objective_[rhs_]; }

    std::vector<Rational> assignment() const
    {
        std::vector<Rational> column_value(columns_);
        for (std::size_t r = 0; r < rows_; ++r) column_value[basis_[r]] = table_[r][rhs_];
        std::vector<Rational> x(plus_.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = column_value[plus_[i]];
            if (minus_[i]) x[i] -= column_value[*minus_[i]];
        }
        if (!sys_.satisfied_by(x)) throw std::logic_error("simplex produced an assignment violating the system");
        return x;
    }

private:
    // Artificial columns never re-enter once phase 1 is done, so the
    // entering search is limited to structural columns.
    bool optimize()
    {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (sgn(objective_[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                const Rational& a = table_[r][*entering];
                if (sgn(a) <= 0) continue;
                Rational ratio = table_[r][rhs_] / a;
                if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
                    leaving = r;
                    best = std::move(ratio);
                }
            }
            if (!leaving) return false;
            pivot(*leaving, *entering);
        }
    }

    void pivot(std::size_t r, std::size_t j)
    {
        auto& prow = table_[r];
        const Rational inv = 1 / prow[j];
        std::vector<std::size_t> nonzero;
        for (std::size_t c = 0; c <= columns_; ++c) {
            if (sgn(prow[c]) != 0) {
                prow[c] *= inv;
                nonzero.push_back(c);
            }
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (sgn(row[j]) == 0) return;
            const Rational factor = row[j];
            for (std::size_t c : nonzero) row[c] -= factor * prow[c];
        };
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r) eliminate(table_[i]);
        }
        eliminate(objective_);
        basis_[r] = j;
    }

    const LinearConstraintSystem& sys_;
    std::vector<std::size_t> plus_;
    std::vector<std::optional<std::size_t>> minus_;
    std::size_t structural_ = 0;
    std::size_t rows_ = 0;
    std::size_t columns_ = 0;
    std::size_t rhs_ = 0;
    std::vector<std::vector<Rational>> table_;
    std::vector<Rational> objective_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpOutcome lp_feasible(const LinearConstraintSystem& sys)
{
    Tableau t(sys);
    if (!t.find_feasible_basis()) return {LpStatus::Infeasible, {}, 0};
    return {LpStatus::Feasible, t.assignment(), 0};
}

LpOutcome lp_maximize(const LinearConstraintSystem& sys, std::span<const Rational> objective)
{
    if (objective.size() != sys.variable_count()) {
        throw InvalidArgument("objective has " + std::to_string(objective.size()) + " coefficients, expected " +
                              std::to_string(sys.variable_count()));
    }
    Tableau t(sys);
    if (!t.find_feasible_basis()) return {LpStatus::Infeasible, {}, 0};
    if (!t.maximize(objective)) return {LpStatus::Unbounded, {}, 0};
    return {LpStatus::Feasible, t.assignment(), t.objective_value()};
}

SupportSolution max_support_solution(const LinearConstraintSystem& sys)
{
    for (const auto& v : sys.variables()) {
        if (v.domain != Domain::NonNegative) {
            throw InvalidArgument("max_support_solution needs nonnegative variables, '" + v.name + "' is free");
        }
    }
    const std::size_t n = sys.variable_count();
    SupportSolution result{lp_feasible(sys), std::vector<bool>(n, false)};
    if (result.outcome.status != LpStatus::Feasible) return result;

    std::vector<Rational> sum = result.outcome.assignment;
    std::size_t count = 1;
    auto absorb = [&](const std::vector<Rational>& x) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(x[i]) > 0) result.support[i] = true;
        }
    };
    absorb(sum);

    // Probe each variable not yet seen positive: maximize it with an upper
    // cap of 1. Points already collected cover the others.
    for (std::size_t i = 0; i < n; ++i) {
        if (result.support[i]) continue;
        LinearConstraintSystem probe = sys;
        std::vector<Rational> cap(n);
        cap[i] = -1;
        probe.add_constraint(cap, Relation::GreaterEqual, -1);
        std::vector<Rational> objective(n);
        objective[i] = 1;
        LpOutcome best = lp_maximize(probe, objective);
        if (best.status != LpStatus::Feasible || sgn(best.objective) <= 0) continue;
        absorb(best.assignment);
        for (std::size_t j = 0; j < n; ++j) sum[j] += best.assignment[j];
        ++count;
    }
    for (auto& v : sum) v /= count;
    if (!sys.satisfied_by(sum)) throw std::logic_error("average of feasible points is infeasible");
    result.outcome.assignment = std::move(sum);
    return result;
}

std::vector<Integer> integer_scale(std::span<const Rational> x)
{
    Integer l = 1;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(Integer(v.get_num() * (l / v.get_den())));
    return out;
}

} // namespace mwg::lp
