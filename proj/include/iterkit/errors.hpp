#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iterkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Rejected data or arguments; nothing was computed.
class InputError : public Error {
public:
    using Error::Error;
};

/// Failure detected while running the numerics.
class NumericError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public InputError {
public:
    LengthMismatchError(std::size_t nodes, std::size_t values)
        : InputError("node/value length mismatch: " + std::to_string(nodes) +
                     " nodes vs " + std::to_string(values) + " values"),
          node_count(nodes), value_count(values) {}

    std::size_t node_count;
    std::size_t value_count;
};

class DuplicateNodeError : public InputError {
public:
    DuplicateNodeError(std::size_t i, std::size_t j, const std::string& detail = "")
        : InputError("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                     " are not separated" + (detail.empty() ? "" : " (" + detail + ")")),
          first(i), second(j) {}

    std::size_t first;
    std::size_t second;
};

class NonFiniteError : public InputError {
public:
    NonFiniteError(std::size_t i, const std::string& which)
        : InputError("non-finite " + which + " at index " + std::to_string(i)), index(i) {}

    std::size_t index;
};

class IndexOutOfRangeError : public InputError {
public:
    IndexOutOfRangeError(const std::string& name, std::size_t got, std::size_t lo, std::size_t hi)
        : InputError(name + " = " + std::to_string(got) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          value(got) {}

    std::size_t value;
};

class OrderExceedsStencilError : public InputError {
public:
    OrderExceedsStencilError(std::size_t order, std::size_t degree)
        : InputError("derivative order " + std::to_string(order) + " exceeds stencil degree " +
                     std::to_string(degree) + "; pass the override to allow it"),
          order(order), degree(degree) {}

    std::size_t order;
    std::size_t degree;
};

class BadCoefficientsError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& detail)
        : InputError("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + detail),
          line(line), column(column) {}

    std::size_t line;
    std::size_t column;
};

class SingularSystemError : public InputError {
public:
    using InputError::InputError;
};

/// The evaluation point coincides with node `node_index`.
class EvalPointCollisionError : public NumericError {
public:
    EvalPointCollisionError(std::size_t j, double x)
        : NumericError("evaluation point x = " + std::to_string(x) +
                       " collides with node " + std::to_string(j) +
                       "; drop that node or move x"),
          node_index(j) {}

    std::size_t node_index;
};

class DegenerateNodesError : public NumericError {
public:
    DegenerateNodesError(std::size_t i, std::size_t j)
        : NumericError("tableau denominator underflow between nodes " + std::to_string(i) +
                       " and " + std::to_string(j)),
          first(i), second(j) {}

    std::size_t first;
    std::size_t second;
};

class OverflowError : public NumericError {
public:
    OverflowError(std::size_t power, std::size_t j)
        : NumericError("non-finite base value at inverse power " + std::to_string(power) +
                       ", node " + std::to_string(j)),
          power(power), node_index(j) {}

    std::size_t power;
    std::size_t node_index;
};

class InsufficientDepthError : public NumericError {
public:
    InsufficientDepthError(std::size_t want, std::size_t have)
        : NumericError("coefficient recursion needs depth " + std::to_string(want) +
                       " but the workspace holds " + std::to_string(have)),
          wanted(want), held(have) {}

    std::size_t wanted;
    std::size_t held;
};

class EmptyStencilError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace iterkit
