#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffram {

// Malformed domain object: a coloring that is not a partition, a bad target
// tuple, a clique that is not monochromatic.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text input that does not parse. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & message) :
        std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line)
    {
    }

    [[nodiscard]] auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

// A search level outgrew the configured memory budget and no beam cap was given.
class MemoryBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace diffram
