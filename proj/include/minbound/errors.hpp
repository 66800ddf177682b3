#pragma once

#include <stdexcept>
#include <string>

namespace minbound {

// Base class for every error this library throws on bad input or an
// exhausted budget. Algorithmic findings (violated inequalities, not-real
// bound values) are never errors; they come back as data.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

class VertexOutOfRangeError : public Error {
public:
    VertexOutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," +
                std::to_string(n) + ")"),
          vertex(v) {}
    int vertex;
};

class EmptyGraphError : public Error {
public:
    EmptyGraphError() : Error("operation requires at least one vertex") {}
};

class BadParamsError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    BudgetExceededError(int n, int budget)
        : Error("instance with n=" + std::to_string(n) +
                " exceeds budget " + std::to_string(budget)),
          size(n), limit(budget) {}
    int size;
    int limit;
};

// Bound formulas are stated for connected graphs; m < n-1 (or n = 0) can
// never come from one.
class NotConnectedError : public Error {
public:
    using Error::Error;
};

class NotConnectedAfterRetriesError : public Error {
public:
    NotConnectedAfterRetriesError(int retries)
        : Error("no connected sample after " + std::to_string(retries) +
                " attempts") {}
};

class NonpositiveDenominatorError : public Error {
public:
    using Error::Error;
};

class NotMaximumSetError : public Error {
public:
    using Error::Error;
};

// Structured parser failure; line numbers are 1-based, 0 when the failure is
// not tied to a specific line.
class ParseError : public Error {
public:
    enum class Kind { missing_header, malformed_line, vertex_out_of_range };

    ParseError(Kind k, int lineno, const std::string& what)
        : Error(lineno > 0 ? "line " + std::to_string(lineno) + ": " + what
                           : what),
          kind(k), line(lineno) {}

    Kind kind;
    int line;
};

}  // namespace minbound
