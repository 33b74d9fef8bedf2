#ifndef NSDIV_LINALG_HPP
#define NSDIV_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nsdiv/scalars.hpp"

namespace nsdiv {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
        return out;
    }

    void append_row(std::span<const T> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;
    std::vector<Integer> divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero elementary divisors of `a`.
std::vector<Integer> elementary_divisors(const IntMatrix& a);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rows scaled to integers with content 1.
IntMatrix clear_denominators(const RatMatrix& m);

/// Rows form a Z-basis of {v in Z^cols : m v = 0}; this lattice is saturated.
IntMatrix integer_kernel(const RatMatrix& m);

/// Some c with c * basis = v over Q, if one exists.
std::optional<std::vector<Rational>> solve_left(const RatMatrix& basis, std::span<const Rational> v);

/// Coordinates of v in the lattice spanned by the (independent) rows of `basis`.
std::optional<std::vector<Integer>> lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v);

/// Every row of `vectors` lies in the Z-span of the rows of `basis`.
bool lattice_contains(const IntMatrix& basis, const IntMatrix& vectors);

/// Double inclusion of Z-spans.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

RatMatrix to_rational(const IntMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Rank over the fraction field of the polynomial ring, by fraction-free
/// (Bareiss) elimination. Entries must use free symbols only.
std::size_t fraction_field_rank(Matrix<PolyScalar> m);

Integer content(std::span<const Integer> v);

}  // namespace nsdiv

#endif  // NSDIV_LINALG_HPP
