#include "nsdiv/exterior.hpp"

#include <algorithm>

namespace nsdiv {

Blade Blade::of(std::initializer_list<int> indices) {
    return of(std::vector<int>(indices));
}

Blade Blade::of(const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > 2 * kMaxDimension) throw std::out_of_range("blade index out of range");
        mask |= std::uint64_t{1} << (i - 1);
    }
    return Blade(mask);
}

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

int merge_sign(Blade a, Blade b) {
    if ((a.mask() & b.mask()) != 0) return 0;
    // Each generator of b must move left past every generator of a with a larger index.
    unsigned swaps = 0;
    for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        swaps += static_cast<unsigned>(std::popcount(j == 63 ? 0 : a.mask() >> (j + 1)));
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

int sort_sign(const std::vector<int>& sequence) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i + 1; j < sequence.size(); ++j)
            if (sequence[i] > sequence[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<int> eta_sequence(int n) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        seq.push_back(i);
        seq.push_back(i + n);
    }
    return seq;
}

int eta_sign(int n) { return sort_sign(eta_sequence(n)); }

// ---------------------------------------------------------------------------

std::size_t ambient_rank(int n) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n - 1);
}

AmbientIndexing::AmbientIndexing(int n) : n_(n) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) pairs_.emplace_back(i, j);
}

std::size_t AmbientIndexing::index_of(int i, int j) const { return pair_position(n_, i, j); }

std::size_t pair_position(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= 2 * n)) throw std::out_of_range("pair index out of range");
    // Pairs starting with 1..i-1 come first: sum_{k<i} (2n - k).
    const auto N = static_cast<std::size_t>(2 * n);
    const auto ii = static_cast<std::size_t>(i);
    return (ii - 1) * N - (ii - 1) * ii / 2 + static_cast<std::size_t>(j - i - 1);
}

std::vector<std::size_t> AmbientIndexing::diagonal_positions() const {
    std::vector<std::size_t> out;
    for (int i = 1; i <= n_; ++i) out.push_back(index_of(i, i + n_));
    return out;
}

// ---------------------------------------------------------------------------

TwoForm::TwoForm(int n) : n_(n), coeffs_(ambient_rank(n), Integer(0)) {}

TwoForm::TwoForm(int n, std::vector<Integer> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ambient_rank(n))
        throw std::invalid_argument("2-form needs C(2n,2) = " + std::to_string(ambient_rank(n)) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

TwoForm TwoForm::theta(int n) {
    TwoForm t(n);
    for (int i = 1; i <= n; ++i) t.set(i, i + n, -1);
    return t;
}

TwoForm TwoForm::basis(int n, int i, int j, const Integer& c) {
    TwoForm t(n);
    t.set(i, j, c);
    return t;
}

const Integer& TwoForm::at(int i, int j) const { return coeffs_[pair_position(n_, i, j)]; }

void TwoForm::set(int i, int j, const Integer& v) { coeffs_[pair_position(n_, i, j)] = v; }

TwoForm& TwoForm::operator+=(const TwoForm& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("2-form dimension mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("2-form dimension mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

}  // namespace nsdiv
