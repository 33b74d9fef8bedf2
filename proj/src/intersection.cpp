#include "nsdiv/intersection.hpp"

#include <stdexcept>

namespace nsdiv {

namespace {

Integer sign_pow(int n) { return (n % 2 == 0) ? Integer(1) : Integer(-1); }

void check_r(const PolarizedContext& ctx, int r, int lo) {
    if (r < lo || r > ctx.n())
        throw std::out_of_range("r = " + std::to_string(r) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(ctx.n()) + "]");
}

}  // namespace

Integer factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial of a negative number");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

PolarizedContext::PolarizedContext(int n) : n_(n), theta_(TwoForm::theta(n)) {
    const auto t = theta_.to_multivector<Integer>();
    theta_powers_.reserve(static_cast<std::size_t>(n) + 1);
    theta_powers_.push_back(Multivector<Integer>::scalar(n, Integer(1)));
    for (int k = 1; k <= n; ++k) theta_powers_.push_back(wedge(theta_powers_.back(), t));
    theta_top_ = sign_pow(n) * eta_coefficient(theta_powers_.back());
    if (theta_top_ != factorial(n))
        throw std::logic_error("polarization check failed: (Theta^n) = " + theta_top_.get_str());
}

Integer intersection_number(const PolarizedContext& ctx, std::span<const TwoForm> forms) {
    if (forms.size() != static_cast<std::size_t>(ctx.n()))
        throw std::invalid_argument("intersection_number needs exactly n = " + std::to_string(ctx.n()) +
                                    " classes, got " + std::to_string(forms.size()));
    auto acc = Multivector<Integer>::scalar(ctx.n(), Integer(1));
    for (const auto& f : forms) {
        if (f.n() != ctx.n()) throw std::invalid_argument("intersection_number: dimension mismatch");
        acc = wedge(acc, f.to_multivector<Integer>());
        if (acc.is_zero()) return 0;
    }
    return sign_pow(ctx.n()) * eta_coefficient(acc);
}

Integer mixed_power(const PolarizedContext& ctx, const TwoForm& w, int r) {
    check_r(ctx, r, 0);
    if (w.n() != ctx.n()) throw std::invalid_argument("mixed_power: dimension mismatch");
    const auto top = wedge(power(w.to_multivector<Integer>(), r), ctx.theta_power(ctx.n() - r));
    if (top.is_zero()) return 0;
    return sign_pow(ctx.n()) * eta_coefficient(top);
}

Integer degree(const PolarizedContext& ctx, const TwoForm& w) {
    if (w.n() != ctx.n()) throw std::invalid_argument("degree: dimension mismatch");
    Integer trace = 0;
    for (int i = 1; i <= ctx.n(); ++i) trace += w.at(i, i + ctx.n());
    return -factorial(ctx.n() - 1) * trace;
}

TwoForm natural_sharp(const PolarizedContext& ctx, const TwoForm& w) {
    return ctx.theta_top() * w - degree(ctx, w) * ctx.theta();
}

Rational q_form(const PolarizedContext& ctx, const TwoForm& w, int r) {
    check_r(ctx, r, 2);
    Rational q(-mixed_power(ctx, natural_sharp(ctx, w), r), Integer(r - 1) * ctx.theta_top());
    q.canonicalize();
    return q;
}

std::vector<Rational> q_values(const PolarizedContext& ctx, const TwoForm& w) {
    std::vector<Rational> out;
    const TwoForm sharp = natural_sharp(ctx, w);
    const auto sharp_mv = sharp.to_multivector<Integer>();
    auto sharp_pow = wedge(sharp_mv, sharp_mv);
    for (int r = 2; r <= ctx.n(); ++r) {
        if (r > 2) sharp_pow = wedge(sharp_pow, sharp_mv);
        const auto top = wedge(sharp_pow, ctx.theta_power(ctx.n() - r));
        Integer inter = top.is_zero() ? Integer(0) : Integer(sign_pow(ctx.n()) * eta_coefficient(top));
        Rational q(-inter, Integer(r - 1) * ctx.theta_top());
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::vector<std::string> ambient_symbol_names(int n) {
    std::vector<std::string> names;
    const AmbientIndexing idx(n);
    const bool compact = 2 * n <= 9;
    for (const auto& [i, j] : idx.pairs())
        names.push_back("a" + std::to_string(i) + (compact ? "" : "_") + std::to_string(j));
    return names;
}

PolyScalar q_symbolic_on(const PolarizedContext& ctx, std::span<const TwoForm> generators,
                         const std::vector<std::string>& names, int r) {
    check_r(ctx, r, 2);
    if (names.size() != generators.size()) throw std::invalid_argument("one symbol name per generator");
    const int n = ctx.n();
    auto table = SymbolTable::free(names);

    // omega = sum_k x_k g_k with its degree, both linear in the x_k.
    Multivector<PolyScalar> omega(n, 2);
    PolyScalar deg = PolyScalar::constant(table, 0);
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto x = PolyScalar::variable(table, k);
        const TwoForm& g = generators[k];
        if (g.n() != n) throw std::invalid_argument("q_symbolic_on: dimension mismatch");
        const AmbientIndexing idx(n);
        for (std::size_t p = 0; p < idx.rank(); ++p) {
            if (g.coeffs()[p] == 0) continue;
            const auto [i, j] = idx.pairs()[p];
            omega.add(Blade::of({i, j}), x * PolyScalar(Rational(g.coeffs()[p])));
        }
        deg += x * PolyScalar(Rational(degree(ctx, g)));
    }
    const PolyScalar top_theta(Rational(ctx.theta_top()));
    Multivector<PolyScalar> sharp = omega.scaled(top_theta);
    sharp -= ctx.theta().to_multivector<PolyScalar>().scaled(deg);

    Multivector<Integer> tp = ctx.theta_power(n - r);
    Multivector<PolyScalar> theta_rest(n, tp.degree());
    for (const auto& [b, c] : tp.terms()) theta_rest.add(b, PolyScalar(Rational(c)));

    const auto top = wedge(power(sharp, r), theta_rest);
    PolyScalar inter = top.is_zero() ? PolyScalar::constant(table, 0) : eta_coefficient(top);
    Rational scale(sign_pow(n) * Integer(-1), Integer(r - 1) * ctx.theta_top());
    scale.canonicalize();
    PolyScalar result = inter * PolyScalar(scale);
    return PolyScalar(table, result.terms());
}

PolyScalar q_symbolic(int n, int r) {
    const PolarizedContext ctx(n);
    const AmbientIndexing idx(n);
    std::vector<TwoForm> gens;
    gens.reserve(idx.rank());
    for (const auto& [i, j] : idx.pairs()) gens.push_back(TwoForm::basis(n, i, j));
    return q_symbolic_on(ctx, gens, ambient_symbol_names(n), r);
}

EffectivityIndicator effectivity_indicator(const PolarizedContext& ctx, const TwoForm& w) {
    EffectivityIndicator out{true, true};
    for (int i = 1; i <= ctx.n(); ++i) {
        const Integer m = mixed_power(ctx, w, i);
        if (m < 0) out.effective = false;
        if (m <= 0) out.ample = false;
    }
    return out;
}

}  // namespace nsdiv
