#include "nsdiv/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace nsdiv {

CompiledForm::CompiledForm(const PolyScalar& p) {
    if (p.table()) vars_ = p.table()->size();
    for (const auto& [m, c] : p.terms()) den_ = lcm(den_, c.get_den());
    for (const auto& [m, c] : p.terms()) {
        Term t;
        for (std::size_t i = 0; i < m.length(); ++i) t.exps.push_back(m.exponent(i));
        t.coeff = c.get_num() * (den_ / c.get_den());
        terms_.push_back(std::move(t));
    }
}

Integer CompiledForm::numerator(std::span<const long> x) const {
    Integer acc = 0;
    Integer tmp;
    for (const auto& t : terms_) {
        long mono = 1;
        bool zero = false;
        for (std::size_t i = 0; i < t.exps.size() && !zero; ++i)
            for (std::uint32_t e = 0; e < t.exps[i]; ++e) {
                if (x[i] == 0) {
                    zero = true;
                    break;
                }
                mono *= x[i];
            }
        if (zero) continue;
        mpz_mul_si(tmp.get_mpz_t(), t.coeff.get_mpz_t(), mono);
        acc += tmp;
    }
    return acc;
}

Rational CompiledForm::operator()(std::span<const long> x) const {
    Rational q(numerator(x), den_);
    q.canonicalize();
    return q;
}

std::vector<CompiledForm> compile_q_forms(const PolarizedContext& ctx, const PolarizedNS& pns) {
    const auto gens = pns.quotient_generators();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<CompiledForm> out;
    for (int r = 2; r <= ctx.n(); ++r) out.emplace_back(q_symbolic_on(ctx, gens, names, r));
    return out;
}

unsigned search_threads() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NS_DIVISOR_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

namespace {

long gcd_long(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Odometer over coordinates 1..size-1; coordinate 0 is fixed per slice.
bool advance(std::vector<long>& x, long b) {
    for (std::size_t i = x.size(); i-- > 1;) {
        if (x[i] < b) {
            ++x[i];
            return true;
        }
        x[i] = -b;
    }
    return false;
}

}  // namespace

std::vector<std::vector<long>> scan_box(std::size_t rank, int bound, bool primitive_only,
                                        const std::function<bool(std::span<const long>)>& accept) {
    if (bound < 1) throw std::invalid_argument("coordinate bound must be at least 1");
    if (rank == 0) return {};
    const long b = bound;
    const long slices = 2 * b + 1;
    std::vector<std::vector<std::vector<long>>> found(static_cast<std::size_t>(slices));
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (long s = next++; s < slices; s = next++) {
            try {
                std::vector<long> x(rank, -b);
                x[0] = s - b;
                auto& out = found[static_cast<std::size_t>(s)];
                do {
                    long g = 0;
                    for (long v : x) g = gcd_long(g, v);
                    if (g != 0 && (!primitive_only || g == 1) && accept(x)) out.push_back(x);
                } while (advance(x, b));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const unsigned nthreads = std::min<unsigned>(search_threads(), static_cast<unsigned>(slices));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<std::vector<long>> out;
    for (auto& slice : found)
        for (auto& x : slice) out.push_back(std::move(x));
    return out;  // slices and odometer are both lexicographic
}

bool is_primitive(std::span<const Integer> coords) { return content(coords) == 1; }

bool is_primitive(std::span<const long> coords) {
    long g = 0;
    for (long v : coords) g = gcd_long(g, v);
    return g == 1;
}

namespace {

Integer signed_power(const Integer& d, int r) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(r));
    return (r % 2 == 0) ? p : Integer(-p);
}

}  // namespace

bool satisfies_target(const PolarizedContext& ctx, const PolarizedNS& pns, std::span<const Integer> q,
                      const Integer& d) {
    if (d < 1) return false;
    const auto qs = q_values(ctx, pns.lift(q));
    for (int r = 2; r <= ctx.n(); ++r)
        if (qs[static_cast<std::size_t>(r - 2)] != Rational(signed_power(d, r))) return false;
    return true;
}

bool congruence_filter(const PolarizedContext& ctx, const TwoForm& w, const Integer& d) {
    return mpz_divisible_p(Integer(degree(ctx, w) - d).get_mpz_t(), ctx.theta_top().get_mpz_t()) != 0;
}

TwoForm divisor_representative(const PolarizedContext& ctx, const PolarizedNS& pns, std::span<const Integer> q,
                               const Integer& d) {
    const TwoForm alpha = pns.lift(q);
    if (!congruence_filter(ctx, alpha, d))
        throw std::logic_error("deg(alpha) - d is not divisible by n!: the class does not satisfy the target");
    const Integer shift = (degree(ctx, alpha) - d) / ctx.theta_top();
    TwoForm beta = alpha - shift * ctx.theta();
    if (degree(ctx, beta) != d) throw std::logic_error("beta has the wrong degree");
    for (int r = 2; r <= ctx.n(); ++r)
        if (mixed_power(ctx, beta, r) != 0)
            throw std::logic_error("beta^" + std::to_string(r) + " . Theta^" + std::to_string(ctx.n() - r) +
                                   " is nonzero");
    if (!is_primitive(beta.coeffs())) throw std::logic_error("beta is not primitive");
    return beta;
}

std::vector<DivisorRecord> enumerate(const PolarizedContext& ctx, const PolarizedNS& pns, const SearchQuery& query) {
    if (query.coord_bound < 1) throw std::invalid_argument("coordinate bound must be at least 1");
    if (query.max_degree && *query.max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
    const std::size_t rank = pns.quotient_rank();
    if (rank == 0) return {};
    const auto forms = compile_q_forms(ctx, pns);
    const int n = ctx.n();

    auto degree_allowed = [&](const Integer& d) {
        if (!query.targets.empty())
            return std::any_of(query.targets.begin(), query.targets.end(), [&](long t) { return d == t; });
        return !query.max_degree || d <= *query.max_degree;
    };
    // Returns d when the point meets the target for some admissible d.
    auto candidate = [&](std::span<const long> x) -> std::optional<Integer> {
        const Integer num = forms[0].numerator(x);
        if (num <= 0 || !mpz_divisible_p(num.get_mpz_t(), forms[0].denominator().get_mpz_t())) return std::nullopt;
        const Integer q2 = num / forms[0].denominator();
        if (!mpz_perfect_square_p(q2.get_mpz_t())) return std::nullopt;
        const Integer d = sqrt(q2);
        if (!degree_allowed(d)) return std::nullopt;
        for (int r = 3; r <= n; ++r) {
            const auto& f = forms[static_cast<std::size_t>(r - 2)];
            if (f.numerator(x) != signed_power(d, r) * f.denominator()) return std::nullopt;
        }
        return d;
    };

    const auto hits = scan_box(rank, query.coord_bound, true, [&](std::span<const long> x) {
        return candidate(x).has_value();
    });

    std::vector<DivisorRecord> out;
    const Integer cofactor = factorial(n - 1);
    for (const auto& x : hits) {
        std::vector<Integer> q(x.begin(), x.end());
        const Integer d = *candidate(x);
        if (!satisfies_target(ctx, pns, q, d))
            throw std::logic_error("compiled q-forms disagree with the wedge computation");
        TwoForm beta = divisor_representative(ctx, pns, q, d);
        std::optional<Integer> complement;
        if (mpz_divisible_p(d.get_mpz_t(), cofactor.get_mpz_t())) complement = d / cofactor;
        std::vector<Rational> qs;
        for (int r = 2; r <= n; ++r) qs.emplace_back(signed_power(d, r));
        out.push_back(DivisorRecord{std::move(q), d, std::move(complement), std::move(qs), std::move(beta), n == 2});
    }
    std::stable_sort(out.begin(), out.end(), [](const DivisorRecord& a, const DivisorRecord& b) {
        if (a.divisor_degree != b.divisor_degree) return a.divisor_degree < b.divisor_degree;
        return a.quotient_coords < b.quotient_coords;
    });
    return out;
}

bool divisibility_predicate(const Integer& m, int n) {
    if (m == -1 || m == 0 || m == 1) throw std::invalid_argument("divisibility_predicate: m must not be -1, 0 or 1");
    if (n < 1) throw std::invalid_argument("divisibility_predicate: n must be positive");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return mpz_divisible_p(factorial(n).get_mpz_t(), p.get_mpz_t()) != 0;
}

Integer xr_closed_form(const Integer& d, const Integer& k, int r) {
    if (r < 2) throw std::invalid_argument("xr_closed_form: r must be at least 2");
    Integer p;
    const Integer diff = d - k;
    mpz_pow_ui(p.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(r - 1));
    return p * (d + (r - 1) * k);
}

std::optional<Integer> abelian_divisor_multiplicity(const PolarizedContext& ctx, const TwoForm& w) {
    if (degree(ctx, w) <= 0) return std::nullopt;
    for (int r = 2; r <= ctx.n(); ++r)
        if (mixed_power(ctx, w, r) != 0) return std::nullopt;
    return content(w.coeffs());
}

}  // namespace nsdiv
