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

#ifndef MWG_WEIGHTS_HPP
#define MWG_WEIGHTS_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mwg/numeric.hpp"

namespace mwg {

/// A k-dimensional integer vector: edge weights, energy levels, credits.
class WeightVector
{
public:
    WeightVector() = default;
    WeightVector(std::initializer_list<long> values);
    explicit WeightVector(std::vector<Integer> values) : values_(std::move(values)) {}

    static WeightVector zero(std::size_t dimension) { return WeightVector(std::vector<Integer>(dimension)); }
    /// Every component equal to `value`.
    static WeightVector uniform(std::size_t dimension, const Integer& value)
    {
        return WeightVector(std::vector<Integer>(dimension, value));
    }

    std::size_t size() const { return values_.size(); }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    Integer& operator[](std::size_t i) { return values_[i]; }
    const std::vector<Integer>& components() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    WeightVector& operator+=(const WeightVector& other);
    WeightVector& operator-=(const WeightVector& other);
    WeightVector& operator*=(const Integer& factor);

    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(WeightVector a, const Integer& c) { return a *= c; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.values_ == b.values_; }
    friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.values_ < b.values_; }

    bool is_zero() const;
    bool is_nonnegative() const;
    /// Largest absolute component, 0 for the empty vector.
    Integer max_abs() const;

private:
    void require_same_size(const WeightVector& other) const;

    std::vector<Integer> values_;
};

/// "(c1,...,ck)"
std::string to_string(const WeightVector& v);

} // namespace mwg

#endif
