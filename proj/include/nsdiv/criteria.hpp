#ifndef NSDIV_CRITERIA_HPP
#define NSDIV_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "nsdiv/search.hpp"

namespace nsdiv {

/// A class alpha with prescribed (q_2, ..., q_n).
struct Representation {
    std::vector<Integer> quotient_coords;
    std::vector<Rational> q_values;
    TwoForm lift;
};

/// Searches [-B, B]^rank for a class with q_r = target[r - 2]. Returns the
/// lexicographically first hit, re-verified by wedge computation.
std::optional<Representation> represents(const PolarizedContext& ctx, const PolarizedNS& pns,
                                         const std::vector<Rational>& target, int bound, bool primitive_only = false);

/// ((-1)^r (n-1)!^r)_r: the classes of elliptic curves E with (E . Theta) = 1.
std::vector<Rational> elliptic_factor_target(int n);

std::optional<Representation> splits_off_elliptic_factor(const PolarizedContext& ctx, const PolarizedNS& pns,
                                                         int bound);

enum class Verdict { holds, holds_up_to_bound, fails_up_to_bound, fails };

std::string to_string(Verdict v);

struct CriterionResult {
    std::string criterion;
    Verdict verdict = Verdict::fails_up_to_bound;
    std::optional<Representation> representation;
    std::vector<DivisorRecord> witnesses;
    int bound = 0;
    std::string note;
};

struct ClassificationReport {
    int n = 0;
    std::vector<CriterionResult> verdicts;
};

/// Jacobian test and split-Jacobian test for n = 3, up to the box bound.
ClassificationReport jacobian_split_report_dim3(const PolarizedContext& ctx, const PolarizedNS& pns, int bound);

/// Elliptic-factor verdict for any n, plus the n = 3 verdicts.
ClassificationReport classify(const PolarizedContext& ctx, const PolarizedNS& pns, int bound);

struct EllipticCover {
    Integer degree;  // k
    DivisorRecord witness;
};

/// Minimal elliptic covers of a genus-g curve from its Jacobian: primitive
/// classes with q_r = (-1)^r ((g-1)! k)^r, k <= max_k when given.
std::vector<EllipticCover> elliptic_covers(const PolarizedContext& ctx, const PolarizedNS& pns, int genus, int bound,
                                           std::optional<long> max_k = std::nullopt);

}  // namespace nsdiv

#endif  // NSDIV_CRITERIA_HPP
