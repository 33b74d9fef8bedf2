#ifndef NSDIV_NSLATTICE_HPP
#define NSDIV_NSLATTICE_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "nsdiv/exterior.hpp"
#include "nsdiv/linalg.hpp"
#include "nsdiv/scalars.hpp"

namespace nsdiv {

/// Symmetric n x n period matrix tau with polynomial entries; the lattice is
/// (tau I) Z^{2n}.
class PeriodMatrix {
public:
    /// Throws DomainError unless `entries` is square of size n and symmetric.
    PeriodMatrix(int n, SymbolTablePtr symbols, std::vector<std::vector<PolyScalar>> entries);

    int n() const { return n_; }
    const SymbolTablePtr& symbols() const { return symbols_; }
    const PolyScalar& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

private:
    int n_;
    SymbolTablePtr symbols_;
    std::vector<std::vector<PolyScalar>> entries_;
};

/// Polynomial conditions on the a_ij: row b (an (n+2)-blade) holds the
/// coefficient of b in (dx_i ^ dx_j) ^ dz_1 ^ ... ^ dz_n for every column (i, j).
struct ConstraintForms {
    std::vector<Blade> blades;
    Matrix<PolyScalar> rows;
};

ConstraintForms ns_constraint_forms(const PeriodMatrix& tau);

/// The rational conditions cutting out NS(A) in Z^{C(2n,2)}: every polynomial
/// row split into one row per monomial.
RatMatrix ns_constraints(const PeriodMatrix& tau);

/// NS(A) inside Z^{C(2n,2)} together with theta and a basis of NS(A)/Z theta.
class PolarizedNS {
public:
    /// From a basis of NS(A); derives theta's coordinates and a complement basis.
    static PolarizedNS from_basis(int n, IntMatrix ns_basis);

    int n() const { return n_; }
    std::size_t ambient_rank() const { return ns_basis_.cols(); }
    std::size_t rank() const { return ns_basis_.rows(); }
    std::size_t quotient_rank() const { return quotient_basis_.rows(); }

    const IntMatrix& ns_basis() const { return ns_basis_; }
    const std::vector<Integer>& theta_coords() const { return theta_coords_; }
    const IntMatrix& quotient_basis() const { return quotient_basis_; }

    bool contains(std::span<const Integer> v) const;
    /// Coordinates of v mod Z theta in the quotient basis; DomainError if v is not in NS(A).
    std::vector<Integer> project(std::span<const Integer> v) const;
    std::vector<Integer> project(const TwoForm& w) const { return project(w.coeffs()); }
    /// sum_i q_i quotient_basis[i].
    TwoForm lift(std::span<const Integer> q) const;
    /// Lifts of the quotient basis vectors.
    std::vector<TwoForm> quotient_generators() const;

    /// Same lattice with another quotient basis. The rows must be classes in
    /// NS(A) that together with theta form a basis of NS(A).
    PolarizedNS with_quotient_basis(IntMatrix rows) const;

private:
    PolarizedNS(int n, IntMatrix ns_basis, std::vector<Integer> theta_coords, IntMatrix quotient_basis);
    std::vector<Integer> adapted_coordinates(std::span<const Integer> v) const;

    int n_;
    IntMatrix ns_basis_;
    std::vector<Integer> theta_coords_;
    IntMatrix quotient_basis_;
    IntMatrix adapted_;  // theta followed by the quotient basis
};

/// Builds NS(A) as the saturated integer kernel of ns_constraints(tau).
PolarizedNS ns_basis(const PeriodMatrix& tau);

/// Z^{C(2n,2)} / Z theta ~ Z^{C(2n,2)-1}: drop a_{n,2n} and replace
/// a_{i,i+n} by a_{i,i+n} - a_{n,2n} for i < n.
std::vector<Integer> theta_project(int n, std::span<const Integer> v);
/// The section of theta_project with a_{n,2n} = 0.
std::vector<Integer> theta_embed(int n, std::span<const Integer> b);

/// Numerically evaluates tau at a sample point (one complex value per
/// symbol; symbols with a declared square use sqrt(square)) and reports
/// whether Im tau is positive definite. Advisory only.
bool siegel_sample_check(const PeriodMatrix& tau, std::span<const std::complex<double>> sample);

}  // namespace nsdiv

#endif  // NSDIV_NSLATTICE_HPP
