#pragma once

#include <stdexcept>
#include <string>

namespace dstoch {

// Operand sizes do not line up (matrix products, conjugation, partition
// operations over different ground sets).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input violates a doubly-stochastic precondition.
class NotDoublyStochasticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Matrix is not an idempotent of D_n.
class NotIdempotentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two partitions were expected to have the same block-size multiset.
class ShapeMismatchError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A size guard tripped (Bell-number blow-up protection).
class LimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// An internal cross-check failed. Indicates a bug, not bad input.
class InternalCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed textual input. line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        std::string out = msg + " (line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        return out + ")";
    }

    int line_;
    int column_;
};

}  // namespace dstoch
