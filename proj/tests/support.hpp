// Shared fixtures, reference values and independent oracles for the tests.
#ifndef NSDIV_TESTS_SUPPORT_HPP
#define NSDIV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "nsdiv/criteria.hpp"
#include "nsdiv/intersection.hpp"
#include "nsdiv/linalg.hpp"
#include "nsdiv/nslattice.hpp"
#include "nsdiv/scalars.hpp"
#include "nsdiv/search.hpp"

namespace nsdiv::testing {

// ---------------------------------------------------------------------------
// Fixtures

/// tau = s * tau0 with tau0 = 4 I - J (n = 3), s a free symbol.
inline PeriodMatrix family_f3_tau() {
    auto table = SymbolTable::free({"s"});
    const PolyScalar s = PolyScalar::variable(table, 0);
    std::vector<std::vector<PolyScalar>> e(3, std::vector<PolyScalar>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = s * PolyScalar(i == j ? 3 : -1);
    return PeriodMatrix(3, table, e);
}

/// The five quotient generators (a, b, c, d, e) in the 14 theta-projected coordinates.
inline const std::array<std::array<long, 14>, 5>& family_f3_basis14() {
    static const std::array<std::array<long, 14>, 5> rows{{
        {0, 0, 0, 1, 3, 0, 0, 0, 0, 3, 1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 0, -2, 0, -2, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
    }};
    return rows;
}

inline IntMatrix family_f3_basis_ambient() {
    IntMatrix m(0, 15);
    for (const auto& r : family_f3_basis14()) {
        std::vector<Integer> b(r.begin(), r.end());
        m.append_row(theta_embed(3, b));
    }
    return m;
}

inline PolarizedNS family_f3_ns() { return ns_basis(family_f3_tau()).with_quotient_basis(family_f3_basis_ambient()); }

inline PeriodMatrix generic3_tau() {
    auto table = SymbolTable::free({"t11", "t12", "t13", "t22", "t23", "t33"});
    auto v = [&](const char* name) { return PolyScalar::variable(table, name); };
    return PeriodMatrix(3, table,
                        {{v("t11"), v("t12"), v("t13")}, {v("t12"), v("t22"), v("t23")}, {v("t13"), v("t23"), v("t33")}});
}

inline PeriodMatrix product3_tau() {
    auto table = SymbolTable::free({"s1", "s2", "s3"});
    auto v = [&](std::size_t i) { return PolyScalar::variable(table, i); };
    const PolyScalar z(0);
    return PeriodMatrix(3, table, {{v(0), z, z}, {z, v(1), z}, {z, z, v(2)}});
}

/// D_i = -dx_i ^ dx_{i+n}: the coordinate divisors of a product of elliptic curves.
inline TwoForm coordinate_divisor(int n, int i) { return TwoForm::basis(n, i, i + n, Integer(-1)); }

/// alpha_k = -k D1 + k(k+1) D2 + (k+1) D3 on the product of three elliptic curves.
inline TwoForm alpha_k(long k) {
    return Integer(-k) * coordinate_divisor(3, 1) + Integer(k * (k + 1)) * coordinate_divisor(3, 2) +
           Integer(k + 1) * coordinate_divisor(3, 3);
}

// ---------------------------------------------------------------------------
// Reference values transcribed from the published displays

/// q_2 for n = 3, term by term.
inline const char* reference_q2_text() {
    return "12*a12*a45 + 12*a13*a46 + 4*a14^2 - 4*a14*a25 - 4*a14*a36 + 12*a15*a24 + "
           "12*a16*a34 + 12*a23*a56 + 4*a25^2 - 4*a25*a36 + 12*a26*a35 + 4*a36^2";
}

/// q_3 for n = 3, verbatim (including the a14*a24*a56 term).
inline const char* reference_q3_text() {
    return "36*a12*a14*a45 + 36*a12*a25*a45 - 108*a12*a34*a56 + 108*a12*a35*a46 - "
           "72*a12*a36*a45 + 36*a13*a14*a46 + 108*a13*a24*a56 - 72*a13*a25*a46 + "
           "108*a13*a26*a45 + 36*a13*a36*a46 + 8*a14^3 - 12*a14^2*a25 - "
           "12*a14^2*a36 + 36*a14*a15*a24 + 36*a14*a16*a34 - 72*a14*a24*a56 - "
           "12*a14*a25^2 + 48*a14*a25*a36 - 72*a14*a26*a35 - 12*a14*a36^2 + "
           "108*a15*a23*a46 + 36*a15*a24*a25 - 72*a15*a24*a36 + 108*a15*a26*a34 - "
           "108*a16*a23*a45 + 108*a16*a24*a35 - 72*a16*a25*a34 + 36*a16*a34*a36 + "
           "36*a23*a25*a56 + 36*a23*a36*a56 + 8*a25^3 - 12*a25^2*a36 + 36*a25*a26*a35 - "
           "12*a25*a36^2 + 36*a26*a35*a36 + 8*a36^3";
}

/// q_2, q_3 of the family in the five quotient coordinates (a, b, c, d, e).
inline const char* reference_family_q2_text() {
    return "108*a^2+16*b^2+36*c^2+48*d^2+16*e^2+72*a*b+96*a*c+12*a*d+"
           "12*a*e+24*b*c+12*b*d-4*b*e-24*c*d+24*c*e-48*d*e";
}

inline const char* reference_family_q3_text() {
    return "576*e*a*d-504*b*c*d+936*c*e*a+24*e^2*b+24*e*b^2-504*b*a*d-"
           "1080*c*a*d+576*c*e*d+360*b*a*e+360*b*c*e-144*b*c*a-64*e^3-64*b^3+"
           "216*b*c^2-72*b*d^2+216*c^2*e-144*c*e^2-288*e*d^2+288*d*e^2-72*a*e^2+"
           "216*c^3+648*e*a^2+648*c*a^2+864*c^2*a-216*c^2*d-432*c*d^2-"
           "648*a^2*d-648*d^2*a-432*a*b^2-144*b^2*c-72*d*b^2-648*b*a^2";
}

struct TableRow {
    std::array<long, 5> coords;
    long degree;
    long complement;
};

inline const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows{
        {{0, 0, 0, -1, -2}, 4, 2}, {{1, -1, -1, -1, -1}, 4, 2}, {{0, -1, 1, 0, -1}, 4, 2},
        {{1, -2, -1, 0, 0}, 4, 2}, {{0, 1, 0, 0, 0}, 4, 2},     {{-1, 1, 1, 0, 0}, 4, 2},
        {{0, 0, 0, 0, 1}, 4, 2},   {{0, 0, 0, 1, 1}, 4, 2},     {{-1, 2, 0, 1, 2}, 4, 2},
        {{0, 0, 1, -1, -3}, 6, 3}, {{0, 0, -1, 0, 0}, 6, 3},    {{1, -3, 0, 0, 0}, 6, 3},
        {{-1, 3, 0, 1, 3}, 6, 3},
    };
    return rows;
}

/// The six linear conditions in b1..b14 for a symbolic 3x3 tau; entries are
/// polynomial strings in t11..t33 (m(ij,kl) is the 2x2 minor with rows i, j
/// and columns k, l of tau).
inline std::vector<std::array<std::string, 14>> reference_symbolic_equations() {
    auto m = [](const char* a, const char* b, const char* c, const char* d) {
        return "(" + std::string(a) + "*" + d + " - " + b + "*" + c + ")";
    };
    const std::string det = "(t11*t22*t33 + 2*t12*t23*t13 - t11*t23^2 - t22*t13^2 - t33*t12^2)";
    // 2x2 minors that appear, written [[x, y], [z, w]].
    const std::string m12_13_22_23 = m("t12", "t13", "t22", "t23");
    const std::string m12_13_23_33 = m("t12", "t13", "t23", "t33");
    const std::string m22_23_23_33 = m("t22", "t23", "t23", "t33");
    const std::string m11_12_13_23 = m("t11", "t12", "t13", "t23");
    const std::string m11_13_13_33 = m("t11", "t13", "t13", "t33");
    const std::string m11_12_12_22 = m("t11", "t12", "t12", "t22");
    auto neg = [](const std::string& s) { return "-" + s; };
    std::vector<std::array<std::string, 14>> rows(6);
    for (auto& r : rows) r.fill("0");
    // row 1
    rows[0][5] = "1"; rows[0][6] = "-t13"; rows[0][7] = "-t23"; rows[0][8] = "-t33";
    rows[0][9] = "t12"; rows[0][10] = "t22"; rows[0][11] = m12_13_22_23; rows[0][12] = m12_13_23_33;
    rows[0][13] = m22_23_23_33;
    // row 2
    rows[1][1] = "1"; rows[1][2] = "-t13"; rows[1][3] = "-t23"; rows[1][4] = "-t33";
    rows[1][9] = "t11"; rows[1][10] = "t12"; rows[1][11] = m11_12_13_23; rows[1][12] = m11_13_13_33;
    rows[1][13] = m12_13_23_33;
    // row 3
    rows[2][0] = "1"; rows[2][2] = "-t12"; rows[2][3] = "-t22"; rows[2][4] = "-t23";
    rows[2][6] = "t11"; rows[2][7] = "t12"; rows[2][8] = "t13"; rows[2][11] = m11_12_12_22;
    rows[2][12] = m11_12_13_23; rows[2][13] = m12_13_22_23;
    // row 4
    rows[3][0] = "t13"; rows[3][1] = "-t12"; rows[3][3] = m12_13_22_23; rows[3][4] = m12_13_23_33;
    rows[3][5] = "t11"; rows[3][7] = neg(m11_12_13_23); rows[3][8] = neg(m11_13_13_33);
    rows[3][10] = m11_12_12_22; rows[3][13] = det;
    // row 5
    rows[4][0] = "-t23"; rows[4][1] = "t22"; rows[4][2] = m12_13_22_23; rows[4][4] = neg(m22_23_23_33);
    rows[4][5] = "-t12"; rows[4][6] = neg(m11_12_13_23); rows[4][8] = m12_13_23_33;
    rows[4][9] = m11_12_12_22; rows[4][12] = det;
    // row 6
    rows[5][0] = "t33"; rows[5][1] = "-t23"; rows[5][2] = neg(m12_13_23_33); rows[5][3] = neg(m22_23_23_33);
    rows[5][5] = "t13"; rows[5][6] = m11_13_13_33; rows[5][7] = m12_13_23_33; rows[5][9] = neg(m11_12_13_23);
    rows[5][10] = neg(m12_13_22_23); rows[5][11] = det;
    return rows;
}

/// The six conditions for tau = s tau0, in b1..b14.
inline std::vector<std::array<const char*, 14>> reference_family_equations() {
    return {
        {"0", "0", "0", "0", "0", "1", "s", "s", "-3*s", "-s", "3*s", "4*s^2", "-4*s^2", "8*s^2"},
        {"0", "1", "s", "s", "-3*s", "0", "0", "0", "0", "3*s", "-s", "-4*s^2", "8*s^2", "-4*s^2"},
        {"1", "0", "s", "-3*s", "s", "0", "3*s", "-s", "-s", "0", "0", "8*s^2", "-4*s^2", "4*s^2"},
        {"-s", "s", "0", "4*s^2", "-4*s^2", "3*s", "0", "4*s^2", "-8*s^2", "0", "8*s^2", "0", "0", "16*s^3"},
        {"s", "3*s", "4*s^2", "0", "-8*s^2", "s", "4*s^2", "0", "-4*s^2", "8*s^2", "0", "0", "16*s^3", "0"},
        {"3*s", "s", "4*s^2", "-8*s^2", "0", "-s", "8*s^2", "-4*s^2", "0", "4*s^2", "-4*s^2", "16*s^3", "0", "0"},
    };
}

// ---------------------------------------------------------------------------
// Independent oracles (no exterior-algebra code)

/// Sign of a permutation by counting inversions.
inline int inversion_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// Antisymmetric 2n x 2n matrix of a 2-form.
inline std::vector<std::vector<Integer>> antisymmetric_matrix(const TwoForm& w) {
    const int m = 2 * w.n();
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m), std::vector<Integer>(static_cast<std::size_t>(m), 0));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            a[i - 1][j - 1] = w.at(i, j);
            a[j - 1][i - 1] = -w.at(i, j);
        }
    return a;
}

/// (L_1 ... L_n) by the permutation sum 2^{-n} sum_sigma sgn(sigma) prod_k A_k[sigma(2k-1), sigma(2k)],
/// times the sign taking the sorted volume form to eta, times (-1)^n.
inline Integer intersection_oracle(const std::vector<TwoForm>& forms) {
    const int n = forms.front().n();
    std::vector<std::vector<std::vector<Integer>>> mats;
    for (const auto& f : forms) mats.push_back(antisymmetric_matrix(f));
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    std::iota(p.begin(), p.end(), 0);
    Integer sum = 0;
    do {
        Integer prod = 1;
        for (int k = 0; k < n && prod != 0; ++k) prod *= mats[k][p[2 * k]][p[2 * k + 1]];
        if (prod != 0) sum += inversion_sign(p) * prod;
    } while (std::next_permutation(p.begin(), p.end()));
    const Integer scale = Integer(1) << n;
    const Integer volume = sum / scale;  // coefficient of dx_1 ^ ... ^ dx_2n
    std::vector<int> eta;
    for (int i = 1; i <= n; ++i) {
        eta.push_back(i);
        eta.push_back(i + n);
    }
    const Integer eta_coeff = volume * inversion_sign(eta);
    return n % 2 == 0 ? eta_coeff : Integer(-eta_coeff);
}

/// q_r straight from the definition, using intersection_oracle for every product.
inline Rational q_oracle(const TwoForm& w, int r) {
    const int n = w.n();
    const TwoForm theta = TwoForm::theta(n);
    std::vector<TwoForm> thetas(static_cast<std::size_t>(n), theta);
    const Integer top = intersection_oracle(thetas);
    std::vector<TwoForm> with_w = thetas;
    with_w[0] = w;
    const Integer deg = intersection_oracle(with_w);
    const TwoForm sharp = top * w - deg * theta;
    std::vector<TwoForm> fs(static_cast<std::size_t>(n), theta);
    for (int i = 0; i < r; ++i) fs[static_cast<std::size_t>(i)] = sharp;
    Rational q(-intersection_oracle(fs), Integer(r - 1) * top);
    q.canonicalize();
    return q;
}

/// Multilinear intersection numbers on E1 x E2 x E3 with Theta = D1 + D2 + D3:
/// (D_i D_j D_k) = 1 for distinct i, j, k and 0 otherwise.
inline Integer product_triple(const std::array<Integer, 3>& x, const std::array<Integer, 3>& y,
                              const std::array<Integer, 3>& z) {
    Integer s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (i != j && j != k && i != k) s += x[i] * y[j] * z[k];
    return s;
}

/// x_r by its recursive definition.
inline Integer xr_recursive(const Integer& d, const Integer& k, int r) {
    auto pw = [](const Integer& b, int e) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return p;
    };
    auto binom = [](int a, int b) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return c;
    };
    std::vector<Integer> x(static_cast<std::size_t>(r + 1));
    x[2] = d * d - k * k;
    for (int s = 3; s <= r; ++s) {
        Integer v = Integer(s - 1) * ((s % 2 == 0) ? 1 : -1) * (pw(d, s) - pw(k, s));
        for (int m = 2; m < s; ++m)
            v += binom(s, m) * (((s - m + 1) % 2 == 0) ? 1 : -1) * pw(d, s - m) * x[static_cast<std::size_t>(m)];
        x[static_cast<std::size_t>(s)] = v;
    }
    return x[static_cast<std::size_t>(r)];
}

/// Random integral 2-form with entries in [-bound, bound].
inline TwoForm random_form(std::mt19937_64& rng, int n, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Integer> c(ambient_rank(n));
    for (auto& x : c) x = dist(rng);
    return TwoForm(n, std::move(c));
}

}  // namespace nsdiv::testing

#endif  // NSDIV_TESTS_SUPPORT_HPP
