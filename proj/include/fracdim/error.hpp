/*
Copyright 2026 The fracdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdim {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called outside its domain (wrong degrees, disconnected input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its resource cap (e.g. clique count).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Bad parameter value or unknown name.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace fracdim
