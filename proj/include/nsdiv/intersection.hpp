#ifndef NSDIV_INTERSECTION_HPP
#define NSDIV_INTERSECTION_HPP

#include <span>
#include <string>
#include <vector>

#include "nsdiv/exterior.hpp"
#include "nsdiv/scalars.hpp"

namespace nsdiv {

/// A principally polarized 2n-torus: dimension plus the class
/// theta = -sum_i dx_i ^ dx_{i+n}. Construction checks (Theta^n) = n! by wedging.
class PolarizedContext {
public:
    explicit PolarizedContext(int n);

    int n() const { return n_; }
    const TwoForm& theta() const { return theta_; }
    /// (Theta^n).
    const Integer& theta_top() const { return theta_top_; }
    /// theta^k as a 2k-form, k = 0..n.
    const Multivector<Integer>& theta_power(int k) const { return theta_powers_.at(static_cast<std::size_t>(k)); }

private:
    int n_;
    TwoForm theta_;
    std::vector<Multivector<Integer>> theta_powers_;
    Integer theta_top_;
};

Integer factorial(int k);

/// (L_1 ... L_n) = (-1)^n times the eta-coefficient of the wedge of the classes.
Integer intersection_number(const PolarizedContext& ctx, std::span<const TwoForm> forms);

/// (w^r . Theta^{n-r}), 0 <= r <= n.
Integer mixed_power(const PolarizedContext& ctx, const TwoForm& w, int r);

/// (w . Theta^{n-1}) from the closed form -(n-1)! * sum_i a_{i,i+n}.
Integer degree(const PolarizedContext& ctx, const TwoForm& w);

/// (Theta^n) w - deg(w) theta. Always of degree zero.
TwoForm natural_sharp(const PolarizedContext& ctx, const TwoForm& w);

/// q_r(w) = -((w^natural)^r . Theta^{n-r}) / ((r-1) (Theta^n)), 2 <= r <= n.
Rational q_form(const PolarizedContext& ctx, const TwoForm& w, int r);

/// q_r(w) for r = 2..n, in order.
std::vector<Rational> q_values(const PolarizedContext& ctx, const TwoForm& w);

/// Symbol names a_ij for the ambient coordinates, in lexicographic (i, j) order.
/// Indices are concatenated ("a14") while 2n <= 9, and separated ("a1_10") beyond.
std::vector<std::string> ambient_symbol_names(int n);

/// q_r as a polynomial in the coefficients a_ij of a generic 2-form.
PolyScalar q_symbolic(int n, int r);

/// q_r restricted to the span of `generators`: a polynomial in one symbol per
/// generator, named by `names`.
PolyScalar q_symbolic_on(const PolarizedContext& ctx, std::span<const TwoForm> generators,
                         const std::vector<std::string>& names, int r);

struct EffectivityIndicator {
    /// All (w^i . Theta^{n-i}) >= 0, i = 1..n: numerically effective.
    bool effective = false;
    /// All strictly positive: ample by Nakai-Moishezon.
    bool ample = false;
};

EffectivityIndicator effectivity_indicator(const PolarizedContext& ctx, const TwoForm& w);

}  // namespace nsdiv

#endif  // NSDIV_INTERSECTION_HPP
