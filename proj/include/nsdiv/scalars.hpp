#ifndef NSDIV_SCALARS_HPP
#define NSDIV_SCALARS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "nsdiv/errors.hpp"

namespace nsdiv {

using Integer = mpz_class;
using Rational = mpq_class;

/// An ordered list of symbol names. A symbol may carry a relation t^2 = square.
class SymbolTable {
public:
    struct Symbol {
        std::string name;
        std::optional<Rational> square;
        bool operator==(const Symbol&) const = default;
    };

    SymbolTable() = default;
    explicit SymbolTable(std::vector<Symbol> symbols);

    /// Convenience: free symbols only.
    static std::shared_ptr<const SymbolTable> free(const std::vector<std::string>& names);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const SymbolTable&) const = default;

private:
    std::vector<Symbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Exponent vector with trailing zeros trimmed; the empty vector is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
    std::size_t length() const { return exps_.size(); }
    std::uint32_t total_degree() const;
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    /// Returns the quotient when `divisor` divides this monomial.
    std::optional<Monomial> divide(const Monomial& divisor) const;

    bool operator==(const Monomial&) const = default;

private:
    friend class PolyScalar;
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, larger monomials first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over the rationals in the symbols of a SymbolTable.
///
/// Values are kept reduced: no zero coefficients, and a symbol with a declared
/// square never appears with exponent above 1. Constants may carry a null
/// table; they combine with polynomials over any table.
class PolyScalar {
public:
    using Terms = std::map<Monomial, Rational, GrlexDescending>;

    PolyScalar() = default;
    PolyScalar(const Rational& c);  // NOLINT: implicit on purpose
    PolyScalar(long c) : PolyScalar(Rational(c)) {}  // NOLINT
    PolyScalar(int c) : PolyScalar(Rational(c)) {}   // NOLINT
    PolyScalar(SymbolTablePtr table, Terms terms);

    static PolyScalar constant(SymbolTablePtr table, const Rational& c);
    static PolyScalar variable(SymbolTablePtr table, std::size_t index);
    static PolyScalar variable(SymbolTablePtr table, std::string_view name);

    const SymbolTablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    std::uint32_t total_degree() const;
    Rational coefficient(const Monomial& m) const;

    PolyScalar operator-() const;
    PolyScalar& operator+=(const PolyScalar& rhs);
    PolyScalar& operator-=(const PolyScalar& rhs);
    PolyScalar& operator*=(const PolyScalar& rhs);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);

    PolyScalar pow(unsigned e) const;

    /// Exact division in the polynomial ring. Requires a table without
    /// quadratic relations; throws std::domain_error when `divisor` does not
    /// divide this polynomial.
    PolyScalar divide_exact(const PolyScalar& divisor) const;

    /// Substitutes a polynomial for every symbol. `values` must have one entry
    /// per symbol of this polynomial's table.
    PolyScalar substitute(std::span<const PolyScalar> values) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Coefficient vector of this polynomial in the given monomial order.
    std::vector<Rational> coordinates(std::span<const Monomial> basis) const;
    static PolyScalar from_coordinates(SymbolTablePtr table, std::span<const Monomial> basis,
                                       std::span<const Rational> coords);

    /// Canonical text, e.g. "3*s^2 - 1/2*s + 1".
    std::string to_string() const;

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
        return a.terms_ == b.terms_;
    }

private:
    void add_term(const Monomial& m, const Rational& c);
    SymbolTablePtr merged_table(const PolyScalar& other) const;
    void reduce_monomial(Monomial& m, Rational& c) const;

    SymbolTablePtr table_;
    Terms terms_;
};

/// Parses the polynomial grammar: rationals `p/q`, symbols, `+ - * ^`, and
/// parentheses. Symbols must exist in `table`.
PolyScalar parse_poly(std::string_view text, const SymbolTablePtr& table);

/// Parses an integer or `p/q` literal.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace nsdiv

#endif  // NSDIV_SCALARS_HPP
