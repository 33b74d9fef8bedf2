#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace nsdiv;

namespace {

void reverify(const PolarizedContext& ctx, const Representation& r, const std::vector<Rational>& target) {
    for (int k = 2; k <= ctx.n(); ++k) CHECK(q_form(ctx, r.lift, k) == target[static_cast<std::size_t>(k - 2)]);
}

// tau = s * M for a small symmetric integer matrix M.
PeriodMatrix scaled_tau(int n, const std::vector<std::vector<long>>& m) {
    auto t = SymbolTable::free({"s"});
    const PolyScalar s = PolyScalar::variable(t, 0);
    std::vector<std::vector<PolyScalar>> e(static_cast<std::size_t>(n), std::vector<PolyScalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = s * PolyScalar(m[i][j]);
    return PeriodMatrix(n, t, e);
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("elliptic factor target") {
    CHECK(elliptic_factor_target(3) == std::vector<Rational>{4, -8});
    CHECK(elliptic_factor_target(2) == std::vector<Rational>{1});
    CHECK(elliptic_factor_target(4) == std::vector<Rational>{36, -216, 1296});
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::holds) == "holds");
    CHECK(to_string(Verdict::holds_up_to_bound) == "holds-up-to-bound");
    CHECK(to_string(Verdict::fails_up_to_bound) == "fails-up-to-bound");
    CHECK(to_string(Verdict::fails) == "fails");
}

TEST_CASE("product splits off an elliptic curve") {
    const PolarizedContext ctx(3);
    const auto pns = ns_basis(testing::product3_tau());
    const auto w = splits_off_elliptic_factor(ctx, pns, 2);
    REQUIRE(w.has_value());
    reverify(ctx, *w, {4, -8});
    CHECK(represents(ctx, pns, {4, -8}, 2).has_value());
    CHECK_THROWS_AS(represents(ctx, pns, {4}, 2), std::invalid_argument);
    const auto report = jacobian_split_report_dim3(ctx, pns, 2);
    CHECK(report.verdicts[0].verdict == Verdict::fails);
    CHECK(report.verdicts[1].verdict == Verdict::fails);
}

TEST_CASE("family F3 is indecomposable up to the bound") {
    const PolarizedContext ctx(3);
    const auto pns = testing::family_f3_ns();
    CHECK_FALSE(represents(ctx, pns, {4, -8}, 5).has_value());
    const auto report = jacobian_split_report_dim3(ctx, pns, 3);
    REQUIRE(report.verdicts.size() == 2);
    CHECK(report.verdicts[0].criterion == "jacobian");
    CHECK(report.verdicts[0].verdict == Verdict::holds_up_to_bound);
    CHECK(report.verdicts[1].criterion == "split-jacobian");
    CHECK(report.verdicts[1].verdict == Verdict::holds);
    std::set<std::vector<Integer>> ws;
    for (const auto& w : report.verdicts[1].witnesses) {
        CHECK(w.divisor_degree > 2);
        ws.insert(w.quotient_coords);
        const Integer d = w.divisor_degree;
        CHECK(q_form(ctx, w.ns_representative, 2) == d * d);
        CHECK(q_form(ctx, w.ns_representative, 3) == -d * d * d);
    }
    CHECK(ws.count(std::vector<Integer>{0, 1, 0, 0, 0}) == 1);
    CHECK(ws.count(std::vector<Integer>{0, 0, -1, 0, 0}) == 1);
}

TEST_CASE("generic tau has empty criteria") {
    const PolarizedContext ctx(3);
    const auto pns = ns_basis(testing::generic3_tau());
    CHECK_FALSE(splits_off_elliptic_factor(ctx, pns, 3).has_value());
    const auto report = classify(ctx, pns, 3);
    REQUIRE(report.verdicts.size() == 3);
    CHECK(report.verdicts[0].verdict == Verdict::fails);
    CHECK(report.verdicts[1].verdict == Verdict::holds_up_to_bound);
    CHECK(report.verdicts[2].verdict == Verdict::fails);
    for (const auto& v : report.verdicts) {
        CHECK_FALSE(v.representation.has_value());
        CHECK(v.witnesses.empty());
    }
    CHECK(elliptic_covers(ctx, pns, 3, 3).empty());
}

TEST_CASE("wrong dimension") {
    const PolarizedContext ctx(2);
    auto t = SymbolTable::free({"a", "b"});
    const PolyScalar z(0);
    const PeriodMatrix tau(2, t, {{PolyScalar::variable(t, 0), z}, {z, PolyScalar::variable(t, 1)}});
    CHECK_THROWS_AS(jacobian_split_report_dim3(ctx, ns_basis(tau), 2), std::invalid_argument);
    CHECK(classify(ctx, ns_basis(tau), 1).verdicts.size() == 1);
    CHECK_THROWS_AS(elliptic_covers(ctx, ns_basis(tau), 3, 1), std::invalid_argument);
}

TEST_CASE("elliptic covers of the family") {
    const PolarizedContext ctx(3);
    const auto pns = testing::family_f3_ns();
    const auto covers = elliptic_covers(ctx, pns, 3, 3, 3);
    std::map<long, int> by_k;
    for (const auto& c : covers) {
        ++by_k[c.degree.get_si()];
        CHECK(c.witness.divisor_degree == 2 * c.degree);
    }
    CHECK(by_k[1] == 0);
    CHECK(by_k[2] == 9);
    CHECK(by_k[3] == 4);
    // without a cap every multiple of (g-1)! in the box shows up
    for (const auto& c : elliptic_covers(ctx, pns, 3, 3)) CHECK(c.witness.divisor_degree % 2 == 0);
}

TEST_CASE("covers of degree one match the elliptic factor") {
    const PolarizedContext ctx(3);
    const auto pns = ns_basis(testing::product3_tau());
    const auto covers = elliptic_covers(ctx, pns, 3, 2, 1);
    CHECK_FALSE(covers.empty());
    CHECK(splits_off_elliptic_factor(ctx, pns, 2).has_value());
}

TEST_CASE("enlarging the bound keeps witnesses") {
    const PolarizedContext ctx(3);
    const auto pns = testing::family_f3_ns();
    bool seen = false;
    for (int b = 1; b <= 4; ++b) {
        const auto report = jacobian_split_report_dim3(ctx, pns, b);
        const bool holds = report.verdicts[1].verdict == Verdict::holds;
        if (seen) CHECK(holds);
        seen = seen || holds;
    }
    CHECK(seen);
    const auto prod = ns_basis(testing::product3_tau());
    for (int b = 1; b <= 3; ++b) CHECK(splits_off_elliptic_factor(ctx, prod, b).has_value());
}

TEST_CASE("splits_off and represents agree on random contexts") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> entry(-2, 2);
    int found = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 2;
        std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
        const PolarizedContext ctx(n);
        const auto pns = ns_basis(scaled_tau(n, m));
        const auto a = splits_off_elliptic_factor(ctx, pns, 1);
        const auto b = represents(ctx, pns, elliptic_factor_target(n), 1);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(a->quotient_coords == b->quotient_coords);
            reverify(ctx, *a, elliptic_factor_target(n));
            ++found;
        }
    }
    CHECK(found > 0);
}

}  // TEST_SUITE
