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

#ifndef MWG_LP_HPP
#define MWG_LP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mwg/numeric.hpp"

namespace mwg::lp {

enum class Relation { Equal, GreaterEqual };

enum class Domain { Free, NonNegative };

struct Variable
{
    std::string name;
    Domain domain = Domain::NonNegative;
};

struct Constraint
{
    std::vector<Rational> coefficients;
    Relation relation = Relation::Equal;
    Rational rhs;
};

/// Linear constraints over exact rationals. Sign restrictions on variables
/// are carried by their Domain; everything else is an explicit constraint.
class LinearConstraintSystem
{
public:
    std::size_t add_variable(std::string name, Domain domain = Domain::NonNegative);
    void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);

    std::size_t variable_count() const { return variables_.size(); }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    /// Throws InvalidArgument if a coefficient vector has the wrong length.
    void check_well_formed() const;
    /// Exact check of every constraint and domain.
    bool satisfied_by(std::span<const Rational> x) const;

private:
    std::vector<Variable> variables_;
    std::vector<Constraint> constraints_;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpOutcome
{
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> assignment; // set when Feasible
    Rational objective;               // optimum when Feasible and maximizing
};

LpOutcome lp_feasible(const LinearConstraintSystem& sys);
LpOutcome lp_maximize(const LinearConstraintSystem& sys, std::span<const Rational> objective);

struct SupportSolution
{
    LpOutcome outcome;
    std::vector<bool> support; // variables strictly positive in the assignment
};

/// A feasible point whose support is maximal among all feasible points.
/// Requires every variable to be NonNegative.
SupportSolution max_support_solution(const LinearConstraintSystem& sys);

/// Multiplies by the lcm of the denominators.
std::vector<Integer> integer_scale(std::span<const Rational> x);

} // namespace mwg::lp

#endif
