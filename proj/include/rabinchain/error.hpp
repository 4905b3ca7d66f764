/*
 * Copyright 2026 The rabinchain Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace rc {

/// Base of every error raised by the library. Callers that only care about
/// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Object is not well-formed as a graph (dead ends, bad edges, bad lasso).
class structural_error : public error
{
public:
    using error::error;
};

/// Values out of range or inconsistent with each other.
class validation_error : public error
{
public:
    using error::error;
};

/// A configured size limit would be exceeded.
class resource_error : public error
{
public:
    using error::error;
};

/// A caller broke an operation's precondition (e.g. decoding a
/// non-satisfying permutation).
class contract_error : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    parse_error(int line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace rc
