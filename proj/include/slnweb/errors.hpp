#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slnweb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Invalid input that parses fine: bad ranges, killed strings, blocked crossings...
class SemanticError : public Error {
public:
    using Error::Error;
};

class KilledError : public SemanticError {
public:
    explicit KilledError(std::size_t step)
        : SemanticError("program is killed at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class GreedyStuck : public SemanticError {
public:
    explicit GreedyStuck(std::size_t step)
        : SemanticError("greedy canonical placement is stuck at step " + std::to_string(step)),
          step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace slnweb
