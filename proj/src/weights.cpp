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

#include "mwg/weights.hpp"

#include "mwg/error.hpp"

namespace mwg {

WeightVector::WeightVector(std::initializer_list<long> values)
{
    values_.reserve(values.size());
    for (long v : values) values_.emplace_back(v);
}

void WeightVector::require_same_size(const WeightVector& other) const
{
    if (values_.size() != other.values_.size()) {
        throw InvalidArgument("dimension mismatch: " + std::to_string(values_.size()) + " vs " +
                              std::to_string(other.values_.size()));
    }
}

WeightVector& WeightVector::operator+=(const WeightVector& other)
{
    require_same_size(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other)
{
    require_same_size(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

WeightVector& WeightVector::operator*=(const Integer& factor)
{
    for (auto& v : values_) v *= factor;
    return *this;
}

bool WeightVector::is_zero() const
{
    for (const auto& v : values_) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

bool WeightVector::is_nonnegative() const
{
    for (const auto& v : values_) {
        if (sgn(v) < 0) return false;
    }
    return true;
}

Integer WeightVector::max_abs() const
{
    Integer m = 0;
    for (const auto& v : values_) {
        Integer a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

std::string to_string(const WeightVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out + ")";
}

} // namespace mwg
