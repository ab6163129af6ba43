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

#ifndef MWG_ERROR_HPP
#define MWG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwg {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (dimension mismatch,
/// malformed walk, strategy for the wrong game, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, std::string reason)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
          line_(line), column_(column), reason_(std::move(reason))
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// One broken structural rule of a game, a strategy or a circuit.
struct Violation
{
    std::string subject; // e.g. "state q1", "edge e4"
    std::string rule;    // short rule tag, e.g. "out-degree"
    std::string message;
};

/// Parsed input that does not satisfy the structural invariants.
class ValidationError : public Error
{
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(summarize(violations)), violations_(std::move(violations))
    {
    }

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& violations)
    {
        std::string out = "validation failed";
        for (const auto& v : violations) out += "\n  " + v.subject + " [" + v.rule + "]: " + v.message;
        return out;
    }

    std::vector<Violation> violations_;
};

} // namespace mwg

#endif
