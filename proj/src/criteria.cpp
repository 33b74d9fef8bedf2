#include "nsdiv/criteria.hpp"

#include <stdexcept>

namespace nsdiv {

std::optional<Representation> represents(const PolarizedContext& ctx, const PolarizedNS& pns,
                                         const std::vector<Rational>& target, int bound, bool primitive_only) {
    if (target.size() != static_cast<std::size_t>(ctx.n() - 1))
        throw std::invalid_argument("target must have n - 1 = " + std::to_string(ctx.n() - 1) + " entries");
    if (pns.quotient_rank() == 0) return std::nullopt;
    const auto forms = compile_q_forms(ctx, pns);
    // numerator(x) / den = p / q  <=>  numerator(x) * q = p * den
    std::vector<Integer> scaled_target;
    for (std::size_t i = 0; i < forms.size(); ++i) scaled_target.push_back(target[i].get_num() * forms[i].denominator());

    const auto hits = scan_box(pns.quotient_rank(), bound, primitive_only, [&](std::span<const long> x) {
        for (std::size_t i = 0; i < forms.size(); ++i)
            if (forms[i].numerator(x) * target[i].get_den() != scaled_target[i]) return false;
        return true;
    });
    if (hits.empty()) return std::nullopt;

    std::vector<Integer> q(hits.front().begin(), hits.front().end());
    TwoForm lift = pns.lift(q);
    auto qs = q_values(ctx, lift);
    if (qs != target) throw std::logic_error("compiled q-forms disagree with the wedge computation");
    return Representation{std::move(q), std::move(qs), std::move(lift)};
}

std::vector<Rational> elliptic_factor_target(int n) {
    std::vector<Rational> out;
    const Integer f = factorial(n - 1);
    Integer p = f;
    for (int r = 2; r <= n; ++r) {
        p *= f;
        out.emplace_back(r % 2 == 0 ? p : Integer(-p));
    }
    return out;
}

std::optional<Representation> splits_off_elliptic_factor(const PolarizedContext& ctx, const PolarizedNS& pns,
                                                         int bound) {
    return represents(ctx, pns, elliptic_factor_target(ctx.n()), bound);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_up_to_bound: return "holds-up-to-bound";
        case Verdict::fails_up_to_bound: return "fails-up-to-bound";
        case Verdict::fails: return "fails";
    }
    return "?";
}

namespace {

CriterionResult elliptic_factor_verdict(const PolarizedContext& ctx, const PolarizedNS& pns, int bound) {
    CriterionResult out{"elliptic-factor", Verdict::fails_up_to_bound, std::nullopt, {}, bound, ""};
    if (auto rep = splits_off_elliptic_factor(ctx, pns, bound)) {
        out.verdict = Verdict::holds;
        out.representation = std::move(rep);
        out.note = "contains an elliptic curve E with (E . Theta) = 1";
    } else if (pns.quotient_rank() == 0) {
        out.verdict = Verdict::fails;
        out.note = "NS(A, Theta) is zero";
    }
    return out;
}

}  // namespace

ClassificationReport jacobian_split_report_dim3(const PolarizedContext& ctx, const PolarizedNS& pns, int bound) {
    if (ctx.n() != 3) throw std::invalid_argument("the Jacobian report needs n = 3, got n = " + std::to_string(ctx.n()));
    ClassificationReport report{3, {}};

    CriterionResult jac{"jacobian", Verdict::holds_up_to_bound, std::nullopt, {}, bound, ""};
    auto rep = represents(ctx, pns, elliptic_factor_target(3), bound);
    if (rep) {
        jac.verdict = Verdict::fails;
        jac.representation = rep;
        jac.note = "(4, -8) is represented";
    } else {
        jac.note = "(4, -8) not represented in the box";
    }

    CriterionResult split{"split-jacobian", Verdict::fails_up_to_bound, std::nullopt, {}, bound, ""};
    if (rep) {
        split.verdict = Verdict::fails;
        split.note = "not a Jacobian";
    } else if (pns.quotient_rank() == 0) {
        split.verdict = Verdict::fails;
        split.note = "NS(A, Theta) is zero";
    } else {
        for (auto& r : enumerate(ctx, pns, SearchQuery{bound, std::nullopt, {}}))
            if (r.divisor_degree > 2) split.witnesses.push_back(std::move(r));
        if (split.witnesses.size() >= 2) {
            split.verdict = Verdict::holds;
            split.note = std::to_string(split.witnesses.size()) + " primitive classes with (d^2, -d^3), d > 2";
        } else {
            split.note = "fewer than two primitive classes with (d^2, -d^3), d > 2, in the box";
        }
    }
    report.verdicts.push_back(std::move(jac));
    report.verdicts.push_back(std::move(split));
    return report;
}

ClassificationReport classify(const PolarizedContext& ctx, const PolarizedNS& pns, int bound) {
    ClassificationReport report{ctx.n(), {}};
    if (ctx.n() >= 2) report.verdicts.push_back(elliptic_factor_verdict(ctx, pns, bound));
    if (ctx.n() == 3)
        for (auto& v : jacobian_split_report_dim3(ctx, pns, bound).verdicts) report.verdicts.push_back(std::move(v));
    return report;
}

std::vector<EllipticCover> elliptic_covers(const PolarizedContext& ctx, const PolarizedNS& pns, int genus, int bound,
                                           std::optional<long> max_k) {
    if (genus != ctx.n())
        throw std::invalid_argument("genus " + std::to_string(genus) + " does not match n = " + std::to_string(ctx.n()));
    if (max_k && *max_k < 1) throw std::invalid_argument("max cover degree must be at least 1");
    const Integer cofactor = factorial(genus - 1);
    SearchQuery query{bound, std::nullopt, {}};
    if (max_k)
        for (long k = 1; k <= *max_k; ++k) query.targets.push_back(cofactor.get_si() * k);
    std::vector<EllipticCover> out;
    for (auto& r : enumerate(ctx, pns, query)) {
        if (!mpz_divisible_p(r.divisor_degree.get_mpz_t(), cofactor.get_mpz_t())) continue;
        Integer k = r.divisor_degree / cofactor;
        out.push_back(EllipticCover{std::move(k), std::move(r)});
    }
    return out;
}

}  // namespace nsdiv
