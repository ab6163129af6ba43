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

#ifndef MWG_GRAPH_HPP
#define MWG_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mwg/error.hpp"
#include "mwg/numeric.hpp"
#include "mwg/weights.hpp"

namespace mwg {

struct GraphEdge
{
    std::size_t src = 0;
    std::size_t dst = 0;
    WeightVector weight;
    /// Caller-defined tag carried through every transformation, typically
    /// the index of the game edge this graph edge stands for.
    std::size_t label = 0;
};

/// A directed multigraph with k-dimensional integer edge weights. Vertices
/// are 0..vertex_count()-1; edge ids are positions in edges().
class MultiGraph
{
public:
    MultiGraph() = default;
    MultiGraph(std::size_t vertex_count, std::size_t dimension);

    std::size_t add_vertex();
    /// Throws InvalidArgument on bad endpoints or weight arity.
    std::size_t add_edge(std::size_t src, std::size_t dst, WeightVector weight, std::size_t label = 0);

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t dimension() const { return dimension_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const GraphEdge& edge(std::size_t e) const { return edges_[e]; }
    std::span<const std::size_t> out_edges(std::size_t v) const { return out_[v]; }
    std::span<const std::size_t> in_edges(std::size_t v) const { return in_[v]; }

    const std::optional<std::size_t>& source() const { return source_; }
    void set_source(std::size_t v);

private:
    std::size_t dimension_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::optional<std::size_t> source_;
};

/// A closed walk, not necessarily simple, given by its edge sequence.
struct Circuit
{
    std::vector<std::size_t> edges;
    std::map<std::size_t, std::size_t> multiplicity;

    static Circuit from_walk(std::vector<std::size_t> walk);
};

/// Nonnegative edge multiplicities, keyed by edge id; zero entries may be omitted.
using Circulation = std::map<std::size_t, Integer>;

enum class CircuitMode
{
    Zero,        // total weight exactly 0 in every dimension
    Nonnegative, // total weight >= 0 in every dimension
};

/// Componentwise sum of edge weights along a walk.
WeightVector walk_weight(const MultiGraph& g, std::span<const std::size_t> walk);

/// Structural check of a circuit: nonempty, adjacent, closed, multiplicities
/// consistent with the walk, and weight sum matching `mode`. Empty iff valid.
std::vector<Violation> check_circuit(const MultiGraph& g, const Circuit& c, CircuitMode mode);

/// Vertices reachable from `from` (including `from`).
std::vector<bool> reachable_from(const MultiGraph& g, std::size_t from);

/// Maximal strongly connected components (Tarjan). Each component is sorted;
/// components are ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> sccs(const MultiGraph& g);

/// Finds a circuit whose weight sum is the zero vector, if one exists.
std::optional<Circuit> zero_circuit(const MultiGraph& g);

/// Finds a circuit reachable from `from` whose weight sum is >= 0 in every
/// dimension, if one exists.
std::optional<Circuit> nonnegative_circuit(const MultiGraph& g, std::size_t from);

/// Walks every edge e exactly c[e] times. The support of `c` must be
/// balanced and weakly connected.
Circuit eulerian_circuit_from_circulation(const MultiGraph& g, const Circulation& c);

/// A simple cycle reachable from `from` whose weight in dimension `dim`
/// (0-based) is negative, found with Bellman-Ford.
std::optional<Circuit> negative_cycle_in_dimension(const MultiGraph& g, std::size_t dim, std::size_t from);

/// Minimum cycle mean in dimension `dim` (0-based) over the part of the
/// graph reachable from source() (whole graph if no source is set), by
/// Karp's algorithm. Empty if that part is acyclic.
std::optional<Rational> min_mean_cycle(const MultiGraph& g, std::size_t dim);

/// a <= b componentwise.
bool dominance(const WeightVector& a, const WeightVector& b);

/// Brute-force search over multiplicity maps with entries in 0..bound for a
/// balanced circulation with connected support and weight sum matching
/// `mode`. When source() is set only edges between vertices reachable from
/// it take part. Returns the lexicographically first witness (multiplicities
/// listed in edge id order). Exponential; meant as a test oracle.
std::optional<Circuit> bounded_circulation_oracle(const MultiGraph& g, unsigned bound, CircuitMode mode);

} // namespace mwg

#endif
