#include "nsdiv/nslattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nsdiv/errors.hpp"

namespace nsdiv {

PeriodMatrix::PeriodMatrix(int n, SymbolTablePtr symbols, std::vector<std::vector<PolyScalar>> entries)
    : n_(n), symbols_(std::move(symbols)), entries_(std::move(entries)) {
    if (n < 1 || n > kMaxDimension) throw DomainError("dimension n must lie in [1, 32]");
    if (entries_.size() != static_cast<std::size_t>(n))
        throw DomainError("tau must have n = " + std::to_string(n) + " rows, got " + std::to_string(entries_.size()));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].size() != static_cast<std::size_t>(n))
            throw DomainError("tau row " + std::to_string(i + 1) + " has " + std::to_string(entries_[i].size()) +
                              " entries, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!((*this)(i, j) == (*this)(j, i)))
                throw DomainError("tau is not symmetric: entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") = " + (*this)(i, j).to_string() + " but (" +
                                  std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                  ") = " + (*this)(j, i).to_string());
}

ConstraintForms ns_constraint_forms(const PeriodMatrix& tau) {
    const int n = tau.n();
    // dz_i = sum_j tau_ij dx_j + dx_{n+i}
    auto z = Multivector<PolyScalar>::scalar(n, PolyScalar::constant(tau.symbols(), 1));
    for (int i = 0; i < n; ++i) {
        Multivector<PolyScalar> dz(n, 1);
        for (int j = 0; j < n; ++j) dz.add(Blade::of({j + 1}), tau(i, j));
        dz.add(Blade::of({n + i + 1}), PolyScalar(1));
        z = wedge(z, dz);
    }
    const AmbientIndexing idx(n);
    std::vector<Multivector<PolyScalar>> columns;
    std::set<Blade> blades;
    for (const auto& [i, j] : idx.pairs()) {
        auto col = wedge(Multivector<PolyScalar>::monomial(n, {i, j}, PolyScalar(1)), z);
        for (const auto& [b, c] : col.terms()) blades.insert(b);
        columns.push_back(std::move(col));
    }
    ConstraintForms out{{blades.begin(), blades.end()}, Matrix<PolyScalar>(blades.size(), idx.rank())};
    for (std::size_t r = 0; r < out.blades.size(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) out.rows(r, c) = columns[c].coefficient(out.blades[r]);
    return out;
}

RatMatrix ns_constraints(const PeriodMatrix& tau) {
    const ConstraintForms forms = ns_constraint_forms(tau);
    RatMatrix out(0, forms.rows.cols());
    for (std::size_t r = 0; r < forms.rows.rows(); ++r) {
        std::set<Monomial, GrlexDescending> monomials;
        for (std::size_t c = 0; c < forms.rows.cols(); ++c)
            for (const auto& [m, coef] : forms.rows(r, c).terms()) monomials.insert(m);
        const std::vector<Monomial> basis(monomials.begin(), monomials.end());
        RatMatrix block(basis.size(), forms.rows.cols());
        for (std::size_t c = 0; c < forms.rows.cols(); ++c) {
            const auto coords = forms.rows(r, c).coordinates(basis);
            for (std::size_t k = 0; k < basis.size(); ++k) block(k, c) = coords[k];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) out.append_row(block.row(k));
    }
    return out;
}

// ---------------------------------------------------------------------------

PolarizedNS::PolarizedNS(int n, IntMatrix ns_basis, std::vector<Integer> theta_coords, IntMatrix quotient_basis)
    : n_(n),
      ns_basis_(std::move(ns_basis)),
      theta_coords_(std::move(theta_coords)),
      quotient_basis_(std::move(quotient_basis)) {
    adapted_ = IntMatrix(0, ns_basis_.cols());
    adapted_.append_row(TwoForm::theta(n_).coeffs());
    for (std::size_t i = 0; i < quotient_basis_.rows(); ++i) adapted_.append_row(quotient_basis_.row(i));
}

PolarizedNS PolarizedNS::from_basis(int n, IntMatrix basis) {
    const TwoForm theta = TwoForm::theta(n);
    if (basis.cols() != nsdiv::ambient_rank(n))
        throw DomainError("NS basis vectors must have C(2n,2) = " + std::to_string(nsdiv::ambient_rank(n)) + " entries");
    if (basis.rows() == 0) throw DomainError("NS basis is empty");
    if (nsdiv::rank(to_rational(basis)) != basis.rows()) throw DomainError("NS basis vectors are linearly dependent");
    auto t = lattice_coordinates(basis, theta.coeffs());
    if (!t) throw DomainError("theta does not lie in the NS lattice");
    if (content(*t) != 1) throw DomainError("theta is not primitive in the NS lattice");

    // t V = +-e_1 for the unimodular V of the Smith form of the row t, so the
    // rows of V^{-1} B are a basis whose first row is +-theta.
    IntMatrix trow(1, t->size());
    for (std::size_t j = 0; j < t->size(); ++j) trow(0, j) = (*t)[j];
    const SmithForm s = smith_normal_form(trow);
    const IntMatrix adapted = inverse_unimodular(s.V) * basis;
    IntMatrix quotient(adapted.rows() - 1, adapted.cols());
    for (std::size_t i = 1; i < adapted.rows(); ++i)
        for (std::size_t j = 0; j < adapted.cols(); ++j) quotient(i - 1, j) = adapted(i, j);
    return PolarizedNS(n, std::move(basis), std::move(*t), std::move(quotient));
}

bool PolarizedNS::contains(std::span<const Integer> v) const {
    if (v.size() != ambient_rank()) return false;
    return lattice_coordinates(ns_basis_, v).has_value();
}

std::vector<Integer> PolarizedNS::adapted_coordinates(std::span<const Integer> v) const {
    if (v.size() != ambient_rank())
        throw DomainError("class has " + std::to_string(v.size()) + " entries, expected " +
                          std::to_string(ambient_rank()));
    auto c = lattice_coordinates(adapted_, v);
    if (!c) throw DomainError("class is not in NS(A)");
    return *c;
}

std::vector<Integer> PolarizedNS::project(std::span<const Integer> v) const {
    auto c = adapted_coordinates(v);
    return {c.begin() + 1, c.end()};
}

TwoForm PolarizedNS::lift(std::span<const Integer> q) const {
    if (q.size() != quotient_rank())
        throw DomainError("quotient coordinates have " + std::to_string(q.size()) + " entries, expected " +
                          std::to_string(quotient_rank()));
    std::vector<Integer> v(ambient_rank(), Integer(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += q[i] * quotient_basis_(i, j);
    }
    return TwoForm(n_, std::move(v));
}

std::vector<TwoForm> PolarizedNS::quotient_generators() const {
    std::vector<TwoForm> out;
    for (std::size_t i = 0; i < quotient_rank(); ++i) out.emplace_back(n_, quotient_basis_.row_vector(i));
    return out;
}

PolarizedNS PolarizedNS::with_quotient_basis(IntMatrix rows) const {
    if (rows.rows() != quotient_rank())
        throw DomainError("quotient basis needs " + std::to_string(quotient_rank()) + " vectors, got " +
                          std::to_string(rows.rows()));
    if (rows.rows() > 0 && rows.cols() != ambient_rank())
        throw DomainError("quotient basis vectors must have " + std::to_string(ambient_rank()) + " entries");
    for (std::size_t i = 0; i < rows.rows(); ++i)
        if (!contains(rows.row(i)))
            throw DomainError("quotient basis vector " + std::to_string(i + 1) + " is not in NS(A)");
    IntMatrix adapted(0, ambient_rank());
    adapted.append_row(TwoForm::theta(n_).coeffs());
    for (std::size_t i = 0; i < rows.rows(); ++i) adapted.append_row(rows.row(i));
    if (!same_lattice(adapted, ns_basis_))
        throw DomainError("theta and the given quotient basis do not span NS(A)");
    return PolarizedNS(n_, ns_basis_, theta_coords_, std::move(rows));
}

PolarizedNS ns_basis(const PeriodMatrix& tau) {
    const int n = tau.n();
    const RatMatrix m = ns_constraints(tau);
    const TwoForm theta = TwoForm::theta(n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * theta.coeffs()[j];
        if (acc != 0) throw DomainError("theta violates the NS conditions; tau is not a valid period matrix");
    }
    return PolarizedNS::from_basis(n, integer_kernel(m));
}

// ---------------------------------------------------------------------------

std::vector<Integer> theta_project(int n, std::span<const Integer> v) {
    if (v.size() != ambient_rank(n)) throw DomainError("theta_project: wrong vector length");
    const std::size_t last = pair_position(n, n, 2 * n);
    std::vector<Integer> out;
    out.reserve(v.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k == last) continue;
        Integer x = v[k];
        for (int i = 1; i < n; ++i)
            if (k == pair_position(n, i, i + n)) x -= v[last];
        out.push_back(x);
    }
    return out;
}

std::vector<Integer> theta_embed(int n, std::span<const Integer> b) {
    if (b.size() + 1 != ambient_rank(n)) throw DomainError("theta_embed: wrong vector length");
    const std::size_t last = pair_position(n, n, 2 * n);
    std::vector<Integer> out(b.begin(), b.end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(last), Integer(0));
    return out;
}

bool siegel_sample_check(const PeriodMatrix& tau, std::span<const std::complex<double>> sample) {
    const std::size_t nsym = tau.symbols() ? tau.symbols()->size() : 0;
    if (sample.size() != nsym) throw std::invalid_argument("sample needs one value per symbol");
    std::vector<std::complex<double>> point(sample.begin(), sample.end());
    for (std::size_t k = 0; k < nsym; ++k) {
        const auto& sq = (*tau.symbols())[k].square;
        if (sq) point[k] = std::sqrt(std::complex<double>(sq->get_d(), 0.0));
    }
    const int n = tau.n();
    std::vector<double> im(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> v = 0;
            for (const auto& [m, c] : tau(i, j).terms()) {
                std::complex<double> t = c.get_d();
                for (std::size_t k = 0; k < m.length(); ++k)
                    for (std::uint32_t e = 0; e < m.exponent(k); ++e) t *= point[k];
                v += t;
            }
            im[static_cast<std::size_t>(i * n + j)] = v.imag();
        }
    // Cholesky succeeds iff the symmetric matrix is positive definite.
    for (int k = 0; k < n; ++k) {
        double d = im[static_cast<std::size_t>(k * n + k)];
        for (int p = 0; p < k; ++p) d -= im[static_cast<std::size_t>(k * n + p)] * im[static_cast<std::size_t>(k * n + p)];
        if (!(d > 1e-12)) return false;
        d = std::sqrt(d);
        im[static_cast<std::size_t>(k * n + k)] = d;
        for (int i = k + 1; i < n; ++i) {
            double s = im[static_cast<std::size_t>(i * n + k)];
            for (int p = 0; p < k; ++p) s -= im[static_cast<std::size_t>(i * n + p)] * im[static_cast<std::size_t>(k * n + p)];
            im[static_cast<std::size_t>(i * n + k)] = s / d;
        }
    }
    return true;
}

}  // namespace nsdiv
