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

#include "mwg/graph.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mwg {

MultiGraph::MultiGraph(std::size_t vertex_count, std::size_t dimension)
    : dimension_(dimension), out_(vertex_count), in_(vertex_count)
{
}

std::size_t MultiGraph::add_vertex()
{
    out_.emplace_back();
    in_.emplace_back();
    return out_.size() - 1;
}

std::size_t MultiGraph::add_edge(std::size_t src, std::size_t dst, WeightVector weight, std::size_t label)
{
    if (src >= vertex_count() || dst >= vertex_count()) throw InvalidArgument("edge endpoint out of range");
    if (weight.size() != dimension_) {
        throw InvalidArgument("edge weight has " + std::to_string(weight.size()) + " components, dimension is " +
                              std::to_string(dimension_));
    }
    edges_.push_back({src, dst, std::move(weight), label});
    out_[src].push_back(edges_.size() - 1);
    in_[dst].push_back(edges_.size() - 1);
    return edges_.size() - 1;
}

void MultiGraph::set_source(std::size_t v)
{
    if (v >= vertex_count()) throw InvalidArgument("source vertex out of range");
    source_ = v;
}

Circuit Circuit::from_walk(std::vector<std::size_t> walk)
{
    Circuit c;
    for (std::size_t e : walk) ++c.multiplicity[e];
    c.edges = std::move(walk);
    return c;
}

WeightVector walk_weight(const MultiGraph& g, std::span<const std::size_t> walk)
{
    WeightVector sum = WeightVector::zero(g.dimension());
    for (std::size_t e : walk) sum += g.edge(e).weight;
    return sum;
}

std::vector<Violation> check_circuit(const MultiGraph& g, const Circuit& c, CircuitMode mode)
{
    std::vector<Violation> out;
    if (c.edges.empty()) {
        out.push_back({"circuit", "empty", "circuit has no edges"});
        return out;
    }
    for (std::size_t e : c.edges) {
        if (e >= g.edges().size()) {
            out.push_back({"circuit", "edge", "edge " + std::to_string(e) + " does not exist"});
            return out;
        }
    }
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const auto& here = g.edge(c.edges[i]);
        const auto& next = g.edge(c.edges[(i + 1) % c.edges.size()]);
        if (here.dst != next.src) {
            out.push_back({"circuit", i + 1 == c.edges.size() ? "closed" : "adjacent",
                           "step " + std::to_string(i) + " does not connect to the next edge"});
        }
    }
    if (Circuit::from_walk(c.edges).multiplicity != c.multiplicity) {
        out.push_back({"circuit", "multiplicity", "multiplicity map disagrees with the walk"});
    }
    const WeightVector sum = walk_weight(g, c.edges);
    if (mode == CircuitMode::Zero ? !sum.is_zero() : !sum.is_nonnegative()) {
        out.push_back({"circuit", "weight", "weight sum " + to_string(sum) +
                                                (mode == CircuitMode::Zero ? " is not zero" : " is not nonnegative")});
    }
    return out;
}

std::vector<bool> reachable_from(const MultiGraph& g, std::size_t from)
{
    if (from >= g.vertex_count()) throw InvalidArgument("source vertex out of range");
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : g.out_edges(v)) {
            const std::size_t w = g.edge(e).dst;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<std::vector<std::size_t>> sccs(const MultiGraph& g)
{
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = SIZE_MAX;
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    // Iterative Tarjan: frames hold (vertex, position in its out-edge list).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (number[root] != unvisited) continue;
        frames.push_back({root, 0});
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto outs = g.out_edges(v);
            if (pos < outs.size()) {
                const std::size_t w = g.edge(outs[pos++]).dst;
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == number[done]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

Circuit eulerian_circuit_from_circulation(const MultiGraph& g, const Circulation& c)
{
    constexpr std::size_t max_length = 50'000'000;
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> remaining(g.edges().size(), 0);
    std::vector<Integer> balance(n);
    Integer total = 0;
    for (const auto& [e, count] : c) {
        if (e >= g.edges().size()) throw InvalidArgument("circulation references a missing edge");
        if (sgn(count) < 0) throw InvalidArgument("circulation has a negative entry");
        if (sgn(count) == 0) continue;
        total += count;
        if (total > max_length) throw InvalidArgument("circulation too large to unfold into a walk");
        remaining[e] = count.get_ui();
        balance[g.edge(e).src] += count;
        balance[g.edge(e).dst] -= count;
    }
    if (sgn(total) == 0) throw InvalidArgument("circulation is empty");
    for (std::size_t v = 0; v < n; ++v) {
        if (sgn(balance[v]) != 0) throw InvalidArgument("circulation is not balanced at vertex " + std::to_string(v));
    }

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::optional<std::size_t> start;
    for (std::size_t e = 0; e < remaining.size(); ++e) {
        if (remaining[e] == 0) continue;
        if (!start) start = g.edge(e).src;
        parent[find(g.edge(e).src)] = find(g.edge(e).dst);
    }
    for (std::size_t e = 0; e < remaining.size(); ++e) {
        if (remaining[e] > 0 && find(g.edge(e).src) != find(*start)) {
            throw InvalidArgument("circulation support is not connected");
        }
    }

    std::vector<std::size_t> cursor(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{*start, SIZE_MAX}};
    std::vector<std::size_t> walk;
    while (!stack.empty()) {
        const std::size_t v = stack.back().first;
        const auto outs = g.out_edges(v);
        while (cursor[v] < outs.size() && remaining[outs[cursor[v]]] == 0) ++cursor[v];
        if (cursor[v] < outs.size()) {
            const std::size_t e = outs[cursor[v]];
            --remaining[e];
            stack.push_back({g.edge(e).dst, e});
        } else {
            if (stack.back().second != SIZE_MAX) walk.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(walk.begin(), walk.end());
    return Circuit::from_walk(std::move(walk));
}

namespace {

// Exact scalar weights. Machine integers are used when every path sum in
// the graph is guaranteed to stay far from overflow.
bool fits_machine_word(const MultiGraph& g, std::size_t dim)
{
    Integer m = 0;
    for (const auto& e : g.edges()) {
        Integer a = abs(e.weight[dim]);
        if (a > m) m = a;
    }
    const Integer bound = m * Integer(static_cast<unsigned long>(g.vertex_count() + 2)) * 4;
    return bound.fits_slong_p();
}

template <typename T>
T scalar_weight(const GraphEdge& e, std::size_t dim)
{
    if constexpr (std::is_same_v<T, long>) {
        return e.weight[dim].get_si();
    } else {
        return e.weight[dim];
    }
}

template <typename T>
std::optional<Circuit> bellman_ford_negative_cycle(const MultiGraph& g, std::size_t dim, const std::vector<bool>& live)
{
    const std::size_t n = g.vertex_count();
    std::size_t live_count = 0;
    for (bool b : live) live_count += b ? 1 : 0;

    // A virtual source at distance 0 from every live vertex.
    std::vector<T> dist(n, T(0));
    std::vector<std::size_t> pred(n, SIZE_MAX);
    std::optional<std::size_t> touched;
    for (std::size_t round = 0; round < live_count; ++round) {
        touched.reset();
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto& ed = g.edge(e);
            if (!live[ed.src]) continue;
            T candidate = dist[ed.src] + scalar_weight<T>(ed, dim);
            if (candidate < dist[ed.dst]) {
                dist[ed.dst] = std::move(candidate);
                pred[ed.dst] = e;
                touched = ed.dst;
            }
        }
        if (!touched) return std::nullopt;
    }
    if (!touched) return std::nullopt;

    std::size_t v = *touched;
    for (std::size_t i = 0; i < live_count; ++i) {
        if (pred[v] == SIZE_MAX) throw std::logic_error("Bellman-Ford predecessor chain broke off");
        v = g.edge(pred[v]).src;
    }
    std::vector<std::size_t> cycle;
    std::size_t at = v;
    do {
        const std::size_t e = pred[at];
        cycle.push_back(e);
        at = g.edge(e).src;
    } while (at != v);
    std::reverse(cycle.begin(), cycle.end());
    Circuit c = Circuit::from_walk(std::move(cycle));
    if (sgn(walk_weight(g, c.edges)[dim]) >= 0) throw std::logic_error("Bellman-Ford recovered a non-negative cycle");
    return c;
}

template <typename T>
std::optional<Rational> karp_min_mean(const MultiGraph& g, std::size_t dim, const std::vector<std::size_t>& comp)
{
    const std::size_t n = comp.size();
    std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) local[comp[i]] = i;
    std::vector<std::size_t> internal;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (local[g.edge(e).src] != SIZE_MAX && local[g.edge(e).dst] != SIZE_MAX) internal.push_back(e);
    }
    if (internal.empty()) return std::nullopt;

    // walks[k][v]: minimum weight of a walk with exactly k edges from comp[0] to v.
    std::vector<std::vector<std::optional<T>>> walks(n + 1, std::vector<std::optional<T>>(n));
    walks[0][0] = T(0);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t e : internal) {
            const auto& ed = g.edge(e);
            const auto& from = walks[k - 1][local[ed.src]];
            if (!from) continue;
            T candidate = *from + scalar_weight<T>(ed, dim);
            auto& to = walks[k][local[ed.dst]];
            if (!to || candidate < *to) to = std::move(candidate);
        }
    }
    std::optional<Rational> best;
    for (std::size_t v = 0; v < n; ++v) {
        if (!walks[n][v]) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < n; ++k) {
            if (!walks[k][v]) continue;
            Rational mean(Integer(*walks[n][v] - *walks[k][v]), Integer(static_cast<unsigned long>(n - k)));
            mean.canonicalize();
            if (!worst || mean > *worst) worst = mean;
        }
        if (worst && (!best || *worst < *best)) best = worst;
    }
    return best;
}

void require_dimension(const MultiGraph& g, std::size_t dim)
{
    if (dim >= g.dimension()) {
        throw InvalidArgument("dimension index " + std::to_string(dim) + " out of range for k = " +
                              std::to_string(g.dimension()));
    }
}

} // namespace

std::optional<Circuit> negative_cycle_in_dimension(const MultiGraph& g, std::size_t dim, std::size_t from)
{
    require_dimension(g, dim);
    const auto live = reachable_from(g, from);
    if (fits_machine_word(g, dim)) return bellman_ford_negative_cycle<long>(g, dim, live);
    return bellman_ford_negative_cycle<Integer>(g, dim, live);
}

std::optional<Rational> min_mean_cycle(const MultiGraph& g, std::size_t dim)
{
    require_dimension(g, dim);
    std::vector<bool> live(g.vertex_count(), true);
    if (g.source()) live = reachable_from(g, *g.source());
    const bool small = fits_machine_word(g, dim);
    std::optional<Rational> best;
    for (const auto& comp : sccs(g)) {
        if (!live[comp.front()]) continue;
        auto mean = small ? karp_min_mean<long>(g, dim, comp) : karp_min_mean<Integer>(g, dim, comp);
        if (mean && (!best || *mean < *best)) best = mean;
    }
    return best;
}

bool dominance(const WeightVector& a, const WeightVector& b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("dominance of vectors with different lengths " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

namespace {

class BoundedSearch
{
public:
    BoundedSearch(const MultiGraph& g, unsigned bound, CircuitMode mode) : g_(g), bound_(bound), mode_(mode)
    {
        const std::size_t n = g.vertex_count();
        const std::size_t k = g.dimension();
        std::vector<bool> live(n, true);
        if (g.source()) live = reachable_from(g, *g.source());

        // Mutual reachability by transitive closure, kept separate from sccs().
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
        for (const auto& e : g.edges()) reach[e.src][e.dst] = true;
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t a = 0; a < n; ++a) {
                if (!reach[a][m]) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (reach[m][b]) reach[a][b] = true;
                }
            }
        }

        const std::size_t m = g.edges().size();
        usable_.assign(m, false);
        weights_.assign(m, std::vector<long>(k));
        rest_out_.assign(n, 0);
        rest_in_.assign(n, 0);
        rest_pos_.assign(k, 0);
        rest_neg_.assign(k, 0);
        for (std::size_t e = 0; e < m; ++e) {
            const auto& ed = g.edge(e);
            for (std::size_t d = 0; d < k; ++d) {
                if (!ed.weight[d].fits_slong_p() || abs(ed.weight[d]) > 1'000'000) {
                    throw InvalidArgument("bounded_circulation_oracle needs small weights");
                }
                weights_[e][d] = ed.weight[d].get_si();
            }
            usable_[e] = live[ed.src] && live[ed.dst] && reach[ed.dst][ed.src];
            if (!usable_[e]) continue;
            if (ed.src != ed.dst) {
                rest_out_[ed.src] += bound;
                rest_in_[ed.dst] += bound;
            }
            for (std::size_t d = 0; d < k; ++d) {
                (weights_[e][d] > 0 ? rest_pos_[d] : rest_neg_[d]) += static_cast<long>(bound) * weights_[e][d];
            }
        }
        balance_.assign(n, 0);
        sums_.assign(k, 0);
        counts_.assign(m, 0);
    }

    std::optional<Circuit> run()
    {
        if (!descend(0)) return std::nullopt;
        Circulation c;
        for (std::size_t e = 0; e < counts_.size(); ++e) {
            if (counts_[e] > 0) c[e] = counts_[e];
        }
        return eulerian_circuit_from_circulation(g_, c);
    }

private:
    bool prunable() const
    {
        for (std::size_t v = 0; v < balance_.size(); ++v) {
            if (balance_[v] + rest_out_[v] < 0 || balance_[v] - rest_in_[v] > 0) return true;
        }
        for (std::size_t d = 0; d < sums_.size(); ++d) {
            if (sums_[d] + rest_pos_[d] < 0) return true;
            if (mode_ == CircuitMode::Zero && sums_[d] + rest_neg_[d] > 0) return true;
        }
        return false;
    }

    bool accept() const
    {
        if (total_ == 0) return false;
        for (long b : balance_) {
            if (b != 0) return false;
        }
        for (long s : sums_) {
            if (s < 0 || (mode_ == CircuitMode::Zero && s != 0)) return false;
        }
        std::vector<std::size_t> parent(g_.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::optional<std::size_t> root;
        for (std::size_t e = 0; e < counts_.size(); ++e) {
            if (counts_[e] == 0) continue;
            parent[find(g_.edge(e).src)] = find(g_.edge(e).dst);
        }
        for (std::size_t e = 0; e < counts_.size(); ++e) {
            if (counts_[e] == 0) continue;
            const std::size_t r = find(g_.edge(e).src);
            if (!root) root = r;
            if (*root != r) return false;
        }
        return true;
    }

    void apply(std::size_t e, long delta)
    {
        const auto& ed = g_.edge(e);
        balance_[ed.src] += delta;
        balance_[ed.dst] -= delta;
        for (std::size_t d = 0; d < sums_.size(); ++d) sums_[d] += delta * weights_[e][d];
        total_ += delta;
    }

    void release(std::size_t e, long sign)
    {
        const auto& ed = g_.edge(e);
        const long b = static_cast<long>(bound_) * sign;
        if (ed.src != ed.dst) {
            rest_out_[ed.src] -= b;
            rest_in_[ed.dst] -= b;
        }
        for (std::size_t d = 0; d < sums_.size(); ++d) {
            (weights_[e][d] > 0 ? rest_pos_[d] : rest_neg_[d]) -= b * weights_[e][d];
        }
    }

    bool descend(std::size_t e)
    {
        if (e == counts_.size()) return accept();
        if (!usable_[e]) return descend(e + 1);
        release(e, 1);
        for (unsigned value = 0; value <= bound_; ++value) {
            if (value > 0) apply(e, 1);
            counts_[e] = value;
            if (!prunable() && descend(e + 1)) return true;
        }
        apply(e, -static_cast<long>(bound_));
        counts_[e] = 0;
        release(e, -1);
        return false;
    }

    const MultiGraph& g_;
    unsigned bound_;
    CircuitMode mode_;
    std::vector<bool> usable_;
    std::vector<std::vector<long>> weights_;
    std::vector<long> rest_out_, rest_in_, rest_pos_, rest_neg_;
    std::vector<long> balance_, sums_;
    std::vector<unsigned> counts_;
    long total_ = 0;
};

} // namespace

std::optional<Circuit> bounded_circulation_oracle(const MultiGraph& g, unsigned bound, CircuitMode mode)
{
    return BoundedSearch(g, bound, mode).run();
}

} // namespace mwg
