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

#ifndef MWG_IO_HPP
#define MWG_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwg/core.hpp"
#include "mwg/reductions.hpp"
#include "mwg/solvers.hpp"

namespace mwg {

/**
 * Reads the line-oriented game format:
 *
 *     mwg 1
 *     dimension 2
 *     state q0 owner=2 init
 *     edge e0 q0 q1 w=(-2,0)
 *
 * `#` starts a comment. Syntax errors and references to undeclared states
 * throw ParseError; structural problems (weight arity, out-degree, duplicate
 * edge ids, ...) are left to validate_game().
 */
GameStructure parse_game(std::string_view text);

/// Canonical text: states sorted by id, then edges sorted by id.
std::string write_game(const GameStructure& g);

CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// `item <p> <w>` lines plus one `bound <B>` and one `target <P>` line.
KnapsackInstance parse_knapsack(std::string_view text);
std::string write_knapsack(const KnapsackInstance& inst);

/// Comma-separated exact rationals, each `a` or `a/b`.
std::vector<Rational> parse_rational_vector(std::string_view text);
/// Comma-separated integers, optionally parenthesized.
WeightVector parse_weight_vector(std::string_view text);

/**
 * A parsed certificate file. Exactly one of `memoryless` / `moore` is set
 * unless the file only carries witnesses. A leading `YES` or `NO` line is
 * skipped so solver output can be fed back directly.
 */
struct Certificate
{
    std::optional<MemorylessStrategy> memoryless;
    std::optional<MooreStrategy> moore;
    std::optional<WeightVector> credit;
    std::vector<SpoilerWitness> witnesses;
};

/// `player` owns the strategy; ids are resolved against `g`. Moore update
/// entries that are not listed keep the memory unchanged.
Certificate parse_certificate(std::string_view text, const GameStructure& g, Player player);

std::string write_strategy(const GameStructure& g, const MemorylessStrategy& s);
std::string write_strategy(const GameStructure& g, const MooreStrategy& s);
std::string write_credit(const WeightVector& credit);
std::string write_witness(const GameStructure& g, const SpoilerWitness& w);
/// Comma-separated edge ids, `-` for an empty list.
std::string write_edge_list(const GameStructure& g, const std::vector<std::size_t>& edges);

} // namespace mwg

#endif
