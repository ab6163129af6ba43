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

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "mwg/graph.hpp"
#include "mwg/lp.hpp"

// Zero-circuit detection over circulations.
//
// Inside one strongly connected piece H with edge set F, a zero circuit
// exists iff the cone { x >= 0 : x balanced at every vertex, sum x_e w(e) = 0 }
// has a nonzero point whose support is connected. The LP below finds some
// point of that cone with sum x_e >= 1. If the point itself has a connected
// zero-weight component we are done. Otherwise we compute a point of
// maximal support S. Every zero circuit's multiplicity vector lies in the
// cone, so every zero circuit uses only edges of S. If S = F the maximal
// point is positive on all of F, F is strongly connected, and scaling it to
// integers yields an Eulerian zero circuit. If S is a proper subset of F we
// recurse on the strongly connected components of S, which terminates
// because the edge set strictly shrinks.
//
// LP columns are taken per class of interchangeable edges: parallel edges
// with equal weights, and self-loops with equal weights anywhere in H (a
// self-loop does not enter any balance row). A class value can be moved to
// any member without leaving the cone.

namespace mwg {

namespace {

struct EdgeClass
{
    std::vector<std::size_t> members; // edge ids, increasing
    bool self_loop = false;
};

std::optional<Circuit> search(const MultiGraph& g, const std::vector<bool>& active);

Circuit extract(const MultiGraph& g, const std::map<std::size_t, Rational>& values)
{
    std::vector<Rational> x;
    std::vector<std::size_t> ids;
    for (const auto& [e, v] : values) {
        ids.push_back(e);
        x.push_back(v);
    }
    auto scaled = lp::integer_scale(x);
    Integer common = 0;
    for (const auto& v : scaled) mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.get_mpz_t());
    Circulation c;
    for (std::size_t i = 0; i < ids.size(); ++i) c[ids[i]] = scaled[i] / common;
    return eulerian_circuit_from_circulation(g, c);
}

// Groups the positive entries of `values` into weakly connected pieces and
// returns the first piece whose weight sum is zero.
std::optional<Circuit> zero_piece(const MultiGraph& g, const std::map<std::size_t, Rational>& values)
{
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [e, v] : values) parent[find(g.edge(e).src)] = find(g.edge(e).dst);

    std::map<std::size_t, std::map<std::size_t, Rational>> pieces;
    for (const auto& [e, v] : values) pieces[find(g.edge(e).src)].emplace(e, v);
    // Order pieces by their smallest edge id.
    std::map<std::size_t, const std::map<std::size_t, Rational>*> ordered;
    for (const auto& [root, piece] : pieces) ordered[piece.begin()->first] = &piece;

    for (const auto& [first, piece] : ordered) {
        std::vector<Rational> sum(g.dimension());
        for (const auto& [e, v] : *piece) {
            for (std::size_t d = 0; d < g.dimension(); ++d) sum[d] += v * g.edge(e).weight[d];
        }
        bool zero = true;
        for (const auto& s : sum) zero = zero && sgn(s) == 0;
        if (zero) return extract(g, *piece);
    }
    return std::nullopt;
}

std::optional<Circuit> solve_component(const MultiGraph& g, const std::vector<std::size_t>& vertices,
                                       const std::vector<std::size_t>& edges)
{
    const std::size_t k = g.dimension();
    std::vector<EdgeClass> classes;
    std::map<std::tuple<bool, std::size_t, std::size_t, WeightVector>, std::size_t> class_of;
    for (std::size_t e : edges) {
        const auto& ed = g.edge(e);
        const bool loop = ed.src == ed.dst;
        auto key = std::make_tuple(loop, loop ? 0 : ed.src, loop ? 0 : ed.dst, ed.weight);
        auto [it, fresh] = class_of.try_emplace(std::move(key), classes.size());
        if (fresh) classes.push_back({{}, loop});
        classes[it->second].members.push_back(e);
    }

    lp::LinearConstraintSystem sys;
    for (std::size_t c = 0; c < classes.size(); ++c) sys.add_variable("x" + std::to_string(c));
    const std::size_t n = classes.size();

    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) row_of[vertices[i]] = i;
    std::vector<std::vector<Rational>> flow(row_of.size(), std::vector<Rational>(n));
    for (std::size_t c = 0; c < n; ++c) {
        if (classes[c].self_loop) continue;
        const auto& ed = g.edge(classes[c].members.front());
        if (auto it = row_of.find(ed.src); it != row_of.end()) flow[it->second][c] += 1;
        if (auto it = row_of.find(ed.dst); it != row_of.end()) flow[it->second][c] -= 1;
    }
    for (auto& row : flow) sys.add_constraint(std::move(row), lp::Relation::Equal, 0);
    for (std::size_t d = 0; d < k; ++d) {
        std::vector<Rational> row(n);
        bool any = false;
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = g.edge(classes[c].members.front()).weight[d];
            any = any || sgn(row[c]) != 0;
        }
        if (any) sys.add_constraint(std::move(row), lp::Relation::Equal, 0);
    }
    sys.add_constraint(std::vector<Rational>(n, Rational(1)), lp::Relation::GreaterEqual, 1);

    const lp::LpOutcome point = lp::lp_feasible(sys);
    if (point.status != lp::LpStatus::Feasible) return std::nullopt;

    // Spread the basic point back onto edges. Self-loop classes go to a
    // member sitting on a vertex the rest of the point already touches.
    std::map<std::size_t, Rational> values;
    std::vector<bool> touched(g.vertex_count(), false);
    for (std::size_t c = 0; c < n; ++c) {
        if (classes[c].self_loop || sgn(point.assignment[c]) <= 0) continue;
        const std::size_t e = classes[c].members.front();
        values[e] = point.assignment[c];
        touched[g.edge(e).src] = touched[g.edge(e).dst] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!classes[c].self_loop || sgn(point.assignment[c]) <= 0) continue;
        std::size_t host = classes[c].members.front();
        for (std::size_t e : classes[c].members) {
            if (touched[g.edge(e).src]) {
                host = e;
                break;
            }
        }
        values[host] = point.assignment[c];
    }
    if (auto found = zero_piece(g, values)) return found;

    const lp::SupportSolution widest = lp::max_support_solution(sys);
    std::vector<bool> active(g.edges().size(), false);
    std::size_t active_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (!widest.support[c]) continue;
        for (std::size_t e : classes[c].members) active[e] = true;
        active_count += classes[c].members.size();
    }
    if (active_count < edges.size()) return search(g, active);

    std::map<std::size_t, Rational> full;
    for (std::size_t c = 0; c < n; ++c) {
        Rational share = widest.outcome.assignment[c] / static_cast<unsigned long>(classes[c].members.size());
        for (std::size_t e : classes[c].members) full[e] = share;
    }
    return extract(g, full);
}

std::optional<Circuit> search(const MultiGraph& g, const std::vector<bool>& active)
{
    MultiGraph sub(g.vertex_count(), 0);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (active[e]) sub.add_edge(g.edge(e).src, g.edge(e).dst, WeightVector(), e);
    }
    for (const auto& comp : sccs(sub)) {
        std::vector<bool> inside(g.vertex_count(), false);
        for (std::size_t v : comp) inside[v] = true;
        std::vector<std::size_t> internal;
        for (const auto& ed : sub.edges()) {
            if (inside[ed.src] && inside[ed.dst]) internal.push_back(ed.label);
        }
        if (internal.empty()) continue;
        if (auto found = solve_component(g, comp, internal)) return found;
    }
    return std::nullopt;
}

} // namespace

std::optional<Circuit> zero_circuit(const MultiGraph& g)
{
    return search(g, std::vector<bool>(g.edges().size(), true));
}

std::optional<Circuit> nonnegative_circuit(const MultiGraph& g, std::size_t from)
{
    if (from >= g.vertex_count()) throw InvalidArgument("missing source vertex " + std::to_string(from));
    const auto live = reachable_from(g, from);
    const std::size_t k = g.dimension();

    std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
    MultiGraph padded(0, k);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (live[v]) local[v] = padded.add_vertex();
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& ed = g.edge(e);
        if (live[ed.src]) padded.add_edge(local[ed.src], local[ed.dst], ed.weight, e);
    }
    // One unit-draining self-loop per dimension at every vertex turns
    // "sum >= 0" into "sum == 0".
    const std::size_t real_edges = padded.edges().size();
    for (std::size_t v = 0; v < padded.vertex_count(); ++v) {
        for (std::size_t d = 0; d < k; ++d) {
            WeightVector drain = WeightVector::zero(k);
            drain[d] = -1;
            padded.add_edge(v, v, std::move(drain));
        }
    }

    auto found = zero_circuit(padded);
    if (!found) return std::nullopt;
    std::vector<std::size_t> walk;
    for (std::size_t e : found->edges) {
        if (e < real_edges) walk.push_back(padded.edge(e).label);
    }
    if (walk.empty()) throw std::logic_error("zero circuit made only of draining loops");
    return Circuit::from_walk(std::move(walk));
}

} // namespace mwg
