#ifndef NSDIV_EXTERIOR_HPP
#define NSDIV_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nsdiv/scalars.hpp"

namespace nsdiv {

/// Largest dimension n supported; blades live in a 64-bit mask over 2n generators.
inline constexpr int kMaxDimension = 32;

/// A basis monomial dx_{i1} ^ ... ^ dx_{ik} with i1 < ... < ik, stored as a
/// bit mask (bit i-1 set for dx_i).
class Blade {
public:
    constexpr Blade() = default;
    constexpr explicit Blade(std::uint64_t mask) : mask_(mask) {}
    /// From 1-based indices; they must be distinct but may come in any order
    /// (the caller handles the reordering sign, see `sort_sign`).
    static Blade of(std::initializer_list<int> indices);
    static Blade of(const std::vector<int>& indices);

    constexpr std::uint64_t mask() const { return mask_; }
    int degree() const { return std::popcount(mask_); }
    std::vector<int> indices() const;
    bool contains(int index) const { return (mask_ >> (index - 1)) & 1U; }

    constexpr auto operator<=>(const Blade&) const = default;

private:
    std::uint64_t mask_ = 0;
};

/// Sign of dx_A ^ dx_B relative to the sorted blade A|B; zero when A and B overlap.
int merge_sign(Blade a, Blade b);

/// Parity of the permutation sorting `sequence` (distinct entries), as +1/-1.
int sort_sign(const std::vector<int>& sequence);

/// The reference top form eta = dx_1 ^ dx_{n+1} ^ dx_2 ^ dx_{n+2} ^ ... ^ dx_n ^ dx_{2n},
/// as its index sequence.
std::vector<int> eta_sequence(int n);

/// Sign s with eta = s * (dx_1 ^ ... ^ dx_{2n}).
int eta_sign(int n);

inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const PolyScalar& c) { return c.is_zero(); }

template <class Coeff>
Coeff coeff_from_integer(const Integer& x) {
    if constexpr (std::is_same_v<Coeff, PolyScalar>) return PolyScalar(Rational(x));
    else return Coeff(x);
}

/// Homogeneous element of the exterior algebra on dx_1..dx_{2n} with
/// coefficients in `Coeff` (Integer, Rational or PolyScalar).
template <class Coeff>
class Multivector {
public:
    using Terms = std::map<Blade, Coeff>;

    Multivector(int n, int degree) : n_(n), degree_(degree) { check_dimension(n); }

    static Multivector scalar(int n, const Coeff& c) {
        Multivector m(n, 0);
        m.add(Blade{}, c);
        return m;
    }

    /// c * dx_{i1} ^ ... ^ dx_{ik}, indices given in wedge order.
    static Multivector monomial(int n, const std::vector<int>& indices, const Coeff& c) {
        Multivector m(n, static_cast<int>(indices.size()));
        for (int i : indices)
            if (i < 1 || i > 2 * n) throw std::out_of_range("generator index out of range");
        const Blade b = Blade::of(indices);
        if (b.degree() != static_cast<int>(indices.size())) return m;  // repeated index
        if (sort_sign(indices) < 0) m.add(b, -c);
        else m.add(b, c);
        return m;
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(Blade b, const Coeff& c) {
        if (b.degree() != degree_) throw std::invalid_argument("blade degree differs from multivector degree");
        if (n_ < 32 && (b.mask() >> (2 * n_)) != 0) throw std::out_of_range("blade outside 2n generators");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& rhs) {
        adopt_degree(rhs);
        for (const auto& [b, c] : rhs.terms_) add(b, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& rhs) {
        adopt_degree(rhs);
        for (const auto& [b, c] : rhs.terms_) add(b, -c);
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

    Multivector scaled(const Coeff& s) const {
        Multivector r(n_, degree_);
        if (coeff_is_zero(s)) return r;
        for (const auto& [b, c] : terms_) r.add(b, c * s);
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    static void check_dimension(int n) {
        if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
    }
    // A zero multivector takes the degree of whatever is added to it.
    void adopt_degree(const Multivector& rhs) {
        if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
        if (rhs.is_zero()) return;
        if (is_zero()) degree_ = rhs.degree_;
        else if (rhs.degree_ != degree_) throw std::invalid_argument("degree mismatch in multivector sum");
    }

    int n_;
    int degree_;
    Terms terms_;
};

/// Exterior product. Degrees above 2n give the zero multivector.
template <class Coeff>
Multivector<Coeff> wedge(const Multivector<Coeff>& u, const Multivector<Coeff>& v) {
    if (u.n() != v.n()) throw std::invalid_argument("wedge: dimension mismatch");
    Multivector<Coeff> out(u.n(), u.degree() + v.degree());
    if (u.degree() + v.degree() > 2 * u.n()) return out;
    for (const auto& [bu, cu] : u.terms()) {
        for (const auto& [bv, cv] : v.terms()) {
            const int s = merge_sign(bu, bv);
            if (s == 0) continue;
            Coeff c = cu * cv;
            if (s < 0) c = -c;
            out.add(Blade(bu.mask() | bv.mask()), c);
        }
    }
    return out;
}

/// r-fold wedge of `w` with itself; r = 0 gives the unit scalar.
template <class Coeff>
Multivector<Coeff> power(const Multivector<Coeff>& w, int r) {
    if (r < 0) throw std::invalid_argument("power: negative exponent");
    auto result = Multivector<Coeff>::scalar(w.n(), Coeff(1));
    for (int i = 0; i < r; ++i) {
        result = wedge(result, w);
        if (result.is_zero()) {
            return Multivector<Coeff>(w.n(), w.degree() * r);
        }
    }
    return result;
}

/// The coefficient c with w = c * eta. `w` must be a top-degree form.
template <class Coeff>
Coeff eta_coefficient(const Multivector<Coeff>& w) {
    if (w.degree() != 2 * w.n()) throw std::invalid_argument("eta_coefficient: form is not of top degree");
    const int n = w.n();
    const Blade full(n == 32 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * n)) - 1));
    Coeff c = w.coefficient(full);
    // dx_1^...^dx_2n = eta_sign * eta, eta_sign is +-1.
    if (eta_sign(n) < 0) c = -c;
    return c;
}

/// C(2n, 2), the rank of H^2 of a 2n-torus.
std::size_t ambient_rank(int n);
/// Position of the pair (i, j) in the lexicographic list of pairs.
std::size_t pair_position(int n, int i, int j);

/// Positions of the pairs (i, j), 1 <= i < j <= 2n, in lexicographic order.
class AmbientIndexing {
public:
    explicit AmbientIndexing(int n);

    int n() const { return n_; }
    std::size_t rank() const { return pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    std::size_t index_of(int i, int j) const;
    /// Positions of (i, i+n), i = 1..n.
    std::vector<std::size_t> diagonal_positions() const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

/// Integral 2-form sum_{i<j} a_ij dx_i ^ dx_j.
class TwoForm {
public:
    explicit TwoForm(int n);
    TwoForm(int n, std::vector<Integer> coeffs);

    /// -sum_i dx_i ^ dx_{i+n}.
    static TwoForm theta(int n);
    /// c * dx_i ^ dx_j for i < j.
    static TwoForm basis(int n, int i, int j, const Integer& c = 1);

    int n() const { return n_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& at(int i, int j) const;
    void set(int i, int j, const Integer& v);

    TwoForm& operator+=(const TwoForm& rhs);
    TwoForm& operator-=(const TwoForm& rhs);
    friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
    friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
    friend TwoForm operator*(const Integer& s, TwoForm w) {
        for (auto& c : w.coeffs_) c *= s;
        return w;
    }
    TwoForm operator-() const { return Integer(-1) * *this; }
    bool operator==(const TwoForm&) const = default;

    template <class Coeff>
    Multivector<Coeff> to_multivector() const {
        Multivector<Coeff> m(n_, 2);
        const AmbientIndexing idx(n_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const auto [i, j] = idx.pairs()[k];
            m.add(Blade::of({i, j}), coeff_from_integer<Coeff>(coeffs_[k]));
        }
        return m;
    }

private:
    int n_;
    std::vector<Integer> coeffs_;
};

}  // namespace nsdiv

#endif  // NSDIV_EXTERIOR_HPP
