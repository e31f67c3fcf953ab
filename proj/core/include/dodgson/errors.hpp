#ifndef DODGSON_ERRORS_HPP
#define DODGSON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dodgson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Polynomial division left a nonzero remainder.
class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what) : Error(what) {}
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::size_t var)
        : Error("unbound variable x" + std::to_string(var)), var_(var) {}

    std::size_t variable() const noexcept { return var_; }

private:
    std::size_t var_;
};

/// An identically-zero divisor was met during condensation.
///
/// `level` is the size of the condensation iterate whose interior holds the
/// zero; `row`/`col` are 1-based coordinates inside that iterate.
class DivisorZero : public Error {
public:
    DivisorZero(std::size_t level, std::size_t row, std::size_t col)
        : Error("identically zero divisor at (" + std::to_string(row) + "," +
                std::to_string(col) + ") of the " + std::to_string(level) + "x" +
                std::to_string(level) + " level"),
          level_(level), row_(row), col_(col) {}

    std::size_t level() const noexcept { return level_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t level_;
    std::size_t row_;
    std::size_t col_;
};

class RoundsExhausted : public Error {
public:
    using Error::Error;
};

class StrategyInapplicable : public Error {
public:
    using Error::Error;
};

}  // namespace dodgson

#endif  // DODGSON_ERRORS_HPP
