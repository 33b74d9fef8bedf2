#include "nsdiv/linalg.hpp"

#include <algorithm>

namespace nsdiv {

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWorker {
    IntMatrix a, u, v;

    void row_axpy(std::size_t dst, std::size_t src, const Integer& q) {  // row_dst -= q row_src
        for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) -= q * u(src, j);
    }
    void col_axpy(std::size_t dst, std::size_t src, const Integer& q) {  // col_dst -= q col_src
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) -= q * v(i, src);
    }
    void swap_rows(std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        u.swap_rows(x, y);
    }
    void swap_cols(std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        v.swap_cols(x, y);
    }

    // Moves the smallest nonzero |entry| of the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {{i, j}};
            }
        if (!best) return false;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    void run() {
        const std::size_t limit = std::min(a.rows(), a.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < a.rows(); ++i) {
                    if (a(i, t) == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                    row_axpy(i, t, q);
                    if (a(i, t) != 0) dirty = true;
                }
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(t, j) == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                    col_axpy(j, t, q);
                    if (a(t, j) != 0) dirty = true;
                }
                if (dirty) {
                    place_pivot(t);
                    continue;
                }
                // Divisibility condition on the trailing block.
                std::optional<std::size_t> bad_row;
                for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
                    for (std::size_t j = t + 1; j < a.cols(); ++j)
                        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                            bad_row = i;
                            break;
                        }
                if (!bad_row) break;
                row_axpy(t, *bad_row, Integer(-1));
            }
            if (a(t, t) < 0) {
                for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
                for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
            }
        }
    }
};

}  // namespace

std::vector<Integer> SmithForm::divisors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithWorker w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    w.run();
    SmithForm s{std::move(w.u), std::move(w.a), std::move(w.v), 0};
    const std::size_t limit = std::min(s.D.rows(), s.D.cols());
    while (s.rank < limit && s.D(s.rank, s.rank) != 0) ++s.rank;
    return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a) { return smith_normal_form(a).divisors(); }

// ---------------------------------------------------------------------------
// Rational elimination

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix copy = m;
    return rref(copy).size();
}

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        const Integer g = content(out.row(i));
        if (g > 1)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) /= g;
    }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

IntMatrix integer_kernel(const RatMatrix& m) {
    const std::size_t n = m.cols();
    RatMatrix reduced = m;
    const auto pivots = rref(reduced);
    RatMatrix independent(pivots.size(), n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) independent(i, j) = reduced(i, j);
    if (pivots.empty()) return IntMatrix::identity(n);

    const SmithForm s = smith_normal_form(clear_denominators(independent));
    // A V = U^{-1} D, so the columns of V past the rank span the kernel.
    IntMatrix kernel(n - s.rank, n);
    for (std::size_t k = s.rank; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) kernel(k - s.rank, j) = s.V(j, k);
    return kernel;
}

std::optional<std::vector<Rational>> solve_left(const RatMatrix& basis, std::span<const Rational> v) {
    if (v.size() != basis.cols()) throw std::invalid_argument("solve_left: length mismatch");
    // c * B = v  <=>  B^T c^T = v^T; eliminate on the augmented transpose.
    const std::size_t k = basis.rows();
    RatMatrix aug(basis.cols(), k + 1);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        for (std::size_t i = 0; i < k; ++i) aug(j, i) = basis(i, j);
        aug(j, k) = v[j];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    std::vector<Rational> c(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = aug(r, k);
    return c;
}

std::optional<std::vector<Integer>> lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v) {
    std::vector<Rational> rv(v.begin(), v.end());
    const RatMatrix rb = to_rational(basis);
    if (rank(rb) != basis.rows()) throw std::invalid_argument("lattice basis rows are dependent");
    auto c = solve_left(rb, rv);
    if (!c) return std::nullopt;
    std::vector<Integer> out;
    out.reserve(c->size());
    for (const auto& x : *c) {
        if (x.get_den() != 1) return std::nullopt;
        out.push_back(x.get_num());
    }
    return out;
}

bool lattice_contains(const IntMatrix& basis, const IntMatrix& vectors) {
    // A generating set need not be independent: reduce it to a basis first.
    IntMatrix b = basis;
    if (rank(to_rational(basis)) != basis.rows()) {
        // basis^T V = U^{-1} D: the columns of basis^T V generate the same lattice
        // and all but the first `rank` of them vanish.
        const SmithForm s = smith_normal_form(basis.transposed());
        const IntMatrix bt = basis.transposed() * s.V;
        b = IntMatrix(s.rank, basis.cols());
        for (std::size_t i = 0; i < s.rank; ++i)
            for (std::size_t j = 0; j < basis.cols(); ++j) b(i, j) = bt(j, i);
    }
    for (std::size_t i = 0; i < vectors.rows(); ++i)
        if (!lattice_coordinates(b, vectors.row(i))) return false;
    return true;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return lattice_contains(a, b) && lattice_contains(b, a);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(m(i, j));
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::invalid_argument("matrix is singular");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = aug(i, n + j);
            if (x.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
            inv(i, j) = x.get_num();
        }
    return inv;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over Q[symbols]

std::size_t fraction_field_rank(Matrix<PolyScalar> m) {
    PolyScalar prev(1);
    std::size_t r = 0;
    auto cost = [](const PolyScalar& p) { return std::pair(p.total_degree(), p.terms().size()); };
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero() && (!best || cost(m(i, c)) < cost(m(*best, c)))) best = i;
        if (!best) continue;
        m.swap_rows(r, *best);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                PolyScalar num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = num.divide_exact(prev);
            }
            m(i, c) = PolyScalar(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

}  // namespace nsdiv
