#ifndef NSDIV_ERRORS_HPP
#define NSDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsdiv {

/// Malformed input text (polynomials, JSON documents, vectors).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (at column " + std::to_string(column + 1) + ")"), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_ = 0;
};

/// Well-formed input that is mathematically invalid: an asymmetric period
/// matrix, a class outside NS(A), a basis that does not span.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two polynomials built over different symbol tables meet.
class SymbolMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace nsdiv

#endif  // NSDIV_ERRORS_HPP
