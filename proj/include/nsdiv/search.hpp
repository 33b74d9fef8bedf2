#ifndef NSDIV_SEARCH_HPP
#define NSDIV_SEARCH_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nsdiv/intersection.hpp"
#include "nsdiv/nslattice.hpp"

namespace nsdiv {

struct SearchQuery {
    int coord_bound = 1;               // box [-B, B]^rank
    std::optional<long> max_degree;    // absent: no cap
    std::vector<long> targets;         // if nonempty, only these d
};

struct DivisorRecord {
    std::vector<Integer> quotient_coords;
    Integer divisor_degree;
    /// d / (n-1)! when integral.
    std::optional<Integer> complement_degree;
    std::vector<Rational> q_values;  // q_2 .. q_n
    TwoForm ns_representative;
    /// n = 2 only: -alpha is also emitted and satisfies the same target.
    bool sign_pair = false;
};

/// A polynomial with integer coefficients over a common denominator,
/// evaluated at small integer points.
class CompiledForm {
public:
    CompiledForm() = default;
    explicit CompiledForm(const PolyScalar& p);

    std::size_t variables() const { return vars_; }
    /// Numerator of the value; the value is numerator / denominator().
    Integer numerator(std::span<const long> x) const;
    const Integer& denominator() const { return den_; }
    Rational operator()(std::span<const long> x) const;

private:
    struct Term {
        std::vector<std::uint32_t> exps;
        Integer coeff;
    };
    std::vector<Term> terms_;
    Integer den_ = 1;
    std::size_t vars_ = 0;
};

/// q_2 .. q_n restricted to the quotient basis of `pns`.
std::vector<CompiledForm> compile_q_forms(const PolarizedContext& ctx, const PolarizedNS& pns);

/// Calls `accept` on every nonzero point of [-B, B]^rank (primitive points only
/// if asked) and returns the accepted points in lexicographic order. Work is
/// split over the first coordinate; `accept` must be thread-safe.
std::vector<std::vector<long>> scan_box(std::size_t rank, int bound, bool primitive_only,
                                        const std::function<bool(std::span<const long>)>& accept);

/// Worker count: hardware concurrency capped by NS_DIVISOR_THREADS.
unsigned search_threads();

bool is_primitive(std::span<const Integer> coords);
bool is_primitive(std::span<const long> coords);

/// q_r(lift(q)) = (-1)^r d^r for 2 <= r <= n, by wedge computation.
bool satisfies_target(const PolarizedContext& ctx, const PolarizedNS& pns, std::span<const Integer> q,
                      const Integer& d);

/// deg(w) = d mod n!.
bool congruence_filter(const PolarizedContext& ctx, const TwoForm& w, const Integer& d);

/// beta = alpha - ((deg alpha - d) / n!) theta with alpha = lift(q). Throws
/// std::logic_error if the division is inexact or beta fails its checks.
TwoForm divisor_representative(const PolarizedContext& ctx, const PolarizedNS& pns, std::span<const Integer> q,
                               const Integer& d);

/// Primitive quotient classes in the box with q_r = (-1)^r d^r, sorted by d
/// and then coordinates.
std::vector<DivisorRecord> enumerate(const PolarizedContext& ctx, const PolarizedNS& pns, const SearchQuery& query);

/// m^(n-1) divides n!. Throws std::invalid_argument for m in {-1, 0, 1} or n < 1.
bool divisibility_predicate(const Integer& m, int n);

/// (d - k)^(r-1) (d + (r-1) k), r >= 2.
Integer xr_closed_form(const Integer& d, const Integer& k, int r);

/// If deg w > 0 and (w^r . Theta^{n-r}) = 0 for r >= 2, w is algebraically
/// equivalent to m Z for an abelian divisor Z; returns m.
std::optional<Integer> abelian_divisor_multiplicity(const PolarizedContext& ctx, const TwoForm& w);

}  // namespace nsdiv

#endif  // NSDIV_SEARCH_HPP
