#include "nsdiv/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nsdiv {

// ---------------------------------------------------------------------------
// SymbolTable

SymbolTable::SymbolTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.name.empty()) throw std::invalid_argument("empty symbol name");
        if (!std::isalpha(static_cast<unsigned char>(s.name[0])) && s.name[0] != '_')
            throw std::invalid_argument("symbol name must start with a letter: " + s.name);
        for (char ch : s.name)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw std::invalid_argument("invalid character in symbol name: " + s.name);
        if (!seen.insert(s.name).second)
            throw std::invalid_argument("duplicate symbol name: " + s.name);
    }
}

SymbolTablePtr SymbolTable::free(const std::vector<std::string>& names) {
    std::vector<Symbol> syms;
    syms.reserve(names.size());
    for (const auto& n : names) syms.push_back({n, std::nullopt});
    return std::make_shared<const SymbolTable>(std::move(syms));
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
    return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    if (divisor.exps_.size() > exps_.size()) return std::nullopt;
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < divisor.exps_.size(); ++i) {
        if (divisor.exps_[i] > e[i]) return std::nullopt;
        e[i] -= divisor.exps_[i];
    }
    return Monomial(std::move(e));
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        const auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

// ---------------------------------------------------------------------------
// PolyScalar

PolyScalar::PolyScalar(const Rational& c) { add_term(Monomial{}, c); }

PolyScalar::PolyScalar(SymbolTablePtr table, Terms terms) : table_(std::move(table)) {
    for (auto& [m, c] : terms) {
        if (table_ == nullptr && !m.is_one())
            throw std::invalid_argument("non-constant polynomial needs a symbol table");
        if (table_ != nullptr && m.length() > table_->size())
            throw std::invalid_argument("monomial refers to a symbol outside the table");
        add_term(m, c);
    }
}

PolyScalar PolyScalar::constant(SymbolTablePtr table, const Rational& c) {
    PolyScalar p(c);
    p.table_ = std::move(table);
    return p;
}

PolyScalar PolyScalar::variable(SymbolTablePtr table, std::size_t index) {
    if (!table || index >= table->size()) throw std::out_of_range("symbol index out of range");
    PolyScalar p;
    p.table_ = std::move(table);
    p.terms_.emplace(Monomial::variable(index), Rational(1));
    return p;
}

PolyScalar PolyScalar::variable(SymbolTablePtr table, std::string_view name) {
    if (!table) throw std::invalid_argument("no symbol table");
    auto idx = table->index_of(name);
    if (!idx) throw std::invalid_argument("unknown symbol: " + std::string(name));
    return variable(std::move(table), *idx);
}

bool PolyScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational PolyScalar::constant_term() const { return coefficient(Monomial{}); }

std::uint32_t PolyScalar::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

Rational PolyScalar::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PolyScalar::reduce_monomial(Monomial& m, Rational& c) const {
    if (!table_) return;
    bool changed = false;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) {
        const auto& sq = (*table_)[i].square;
        if (!sq || m.exps_[i] < 2) continue;
        Rational factor;
        mpz_pow_ui(factor.get_num_mpz_t(), sq->get_num_mpz_t(), m.exps_[i] / 2);
        mpz_pow_ui(factor.get_den_mpz_t(), sq->get_den_mpz_t(), m.exps_[i] / 2);
        factor.canonicalize();
        c *= factor;
        m.exps_[i] %= 2;
        changed = true;
    }
    if (changed) m = Monomial(std::move(m.exps_));
}

void PolyScalar::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Monomial mm = m;
    Rational cc = c;
    cc.canonicalize();  // callers may pass mpq_class(p, q) unreduced
    reduce_monomial(mm, cc);
    if (cc == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mm), cc);
    if (!inserted) {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolTablePtr PolyScalar::merged_table(const PolyScalar& other) const {
    if (!table_) return other.table_;
    if (!other.table_ || table_ == other.table_) return table_;
    if (*table_ == *other.table_) return table_;
    throw SymbolMismatch("polynomials use different symbol tables");
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& rhs) {
    table_ = merged_table(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& rhs) {
    table_ = merged_table(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    PolyScalar r;
    r.table_ = a.merged_table(b);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& rhs) { return *this = *this * rhs; }

PolyScalar PolyScalar::pow(unsigned e) const {
    PolyScalar result = PolyScalar::constant(table_, 1);
    PolyScalar base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

PolyScalar PolyScalar::divide_exact(const PolyScalar& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    auto table = merged_table(divisor);
    if (table)
        for (const auto& s : table->symbols())
            if (s.square) throw std::domain_error("exact division needs free symbols");
    PolyScalar quotient = PolyScalar::constant(table, 0);
    PolyScalar rest = *this;
    const auto& [lead_m, lead_c] = *divisor.terms_.begin();
    while (!rest.is_zero()) {
        const auto& [rm, rc] = *rest.terms_.begin();
        auto qm = rm.divide(lead_m);
        if (!qm) throw std::domain_error("polynomial division is not exact");
        PolyScalar step(table, Terms{{*qm, rc / lead_c}});
        quotient += step;
        rest -= step * divisor;
    }
    return quotient;
}

PolyScalar PolyScalar::substitute(std::span<const PolyScalar> values) const {
    const std::size_t nsym = table_ ? table_->size() : 0;
    if (values.size() != nsym) throw std::invalid_argument("substitute: wrong number of values");
    PolyScalar result;
    for (const auto& [m, c] : terms_) {
        PolyScalar term = c;
        for (std::size_t i = 0; i < m.length(); ++i)
            if (m.exponent(i) > 0) term *= values[i].pow(m.exponent(i));
        result += term;
    }
    return result;
}

Rational PolyScalar::evaluate(std::span<const Rational> point) const {
    const std::size_t nsym = table_ ? table_->size() : 0;
    if (point.size() != nsym) throw std::invalid_argument("evaluate: wrong number of values");
    Rational result = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.length(); ++i)
            for (std::uint32_t k = 0; k < m.exponent(i); ++k) term *= point[i];
        result += term;
    }
    return result;
}

std::vector<Rational> PolyScalar::coordinates(std::span<const Monomial> basis) const {
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [m, c] : terms_) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end())
            throw std::invalid_argument("monomial missing from coordinate basis");
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

PolyScalar PolyScalar::from_coordinates(SymbolTablePtr table, std::span<const Monomial> basis,
                                        std::span<const Rational> coords) {
    if (basis.size() != coords.size())
        throw std::invalid_argument("from_coordinates: length mismatch");
    PolyScalar p = PolyScalar::constant(std::move(table), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string PolyScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_one() || mag != 1) {
            out << nsdiv::to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < m.length(); ++i) {
            const auto e = m.exponent(i);
            if (e == 0) continue;
            if (need_star) out << "*";
            out << (table_ ? (*table_)[i].name : "?");
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    auto slash = text.find('/');
    std::string num(trim(text.substr(0, slash)));
    std::string den = slash == std::string_view::npos ? "1" : std::string(trim(text.substr(slash + 1)));
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (num[0] == '+') num.erase(0, 1);
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
    q.canonicalize();
    return q;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const SymbolTablePtr& table) : text_(text), table_(table) {}

    PolyScalar parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        PolyScalar p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    PolyScalar expr() {
        PolyScalar acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    PolyScalar term() {
        PolyScalar acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    PolyScalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    PolyScalar power() {
        PolyScalar base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected nonnegative integer exponent");
            if (pos_ - start > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    PolyScalar atom() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            PolyScalar inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = digits();
            Integer den = 1;
            if (accept('/')) {
                skip_ws();
                if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator after '/'");
                den = digits();
                if (den == 0) fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            return PolyScalar::constant(table_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto idx = table_ ? table_->index_of(name) : std::nullopt;
            if (!idx) {
                pos_ = start;
                fail("unknown symbol '" + std::string(name) + "'");
            }
            return PolyScalar::variable(table_, *idx);
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    const SymbolTablePtr& table_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyScalar parse_poly(std::string_view text, const SymbolTablePtr& table) {
    return PolyParser(text, table).parse();
}

}  // namespace nsdiv
