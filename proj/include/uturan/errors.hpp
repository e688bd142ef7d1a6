#pragma once

#include <stdexcept>
#include <string>

namespace uturan {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text could not be parsed. `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// An instance exceeds the configured exhaustive-search bounds.
struct BoundError : Error {
    explicit BoundError(const std::string& what) : Error(what) {}
};

} // namespace uturan
