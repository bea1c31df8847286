#ifndef RINGCERT_MATRIX_HPP
#define RINGCERT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringcert/bigint.hpp"
#include "ringcert/fp.hpp"
#include "ringcert/poly.hpp"

namespace ringcert {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, T()) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        Matrix m;
        m.r_ = rows.size();
        m.c_ = rows.empty() ? 0 : rows[0].size();
        for (const auto& row : rows) {
            if (row.size() != m.c_)
                throw std::invalid_argument("ragged matrix rows");
            m.a_.insert(m.a_.end(), row.begin(), row.end());
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> out;
        out.reserve(r_);
        for (std::size_t i = 0; i < r_; ++i)
            out.push_back((*this)(i, j));
        return out;
    }
    void swap_rows(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < c_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < r_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < r_; ++i)
            out.push_back(row(i));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<T> a_;
};

using ZMatrix = Matrix<BigInt>;
using QMatrix = Matrix<Rat>;
using FpMatrix = Matrix<Fp>;

ZMatrix identity_matrix(std::size_t n);
ZMatrix matmul(const ZMatrix& a, const ZMatrix& b);
ZMatrix transpose(const ZMatrix& a);

/// Determinant over Z by fraction-free (Bareiss) elimination.
BigInt det_bareiss(ZMatrix m);

/// Determinant over a field by Gaussian elimination.
template <class F>
F det_field(Matrix<F> m, const F& one)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    F det = one;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && coeff_is_zero(m(piv, k)))
            ++piv;
        if (piv == n)
            return one - one;
        if (piv != k) {
            m.swap_rows(piv, k);
            det = -det;
        }
        det *= m(k, k);
        F inv = CoeffTraits<F>::inverse(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (coeff_is_zero(m(i, k)))
                continue;
            F factor = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

/// Reduced row echelon form over a field, in place. Returns the pivot column
/// of each nonzero row. If `transform` is given it receives the row operations
/// (transform * original = reduced).
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m, Matrix<F>* transform = nullptr)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && coeff_is_zero(m(piv, c)))
            ++piv;
        if (piv == rows)
            continue;
        m.swap_rows(piv, r);
        if (transform)
            transform->swap_rows(piv, r);
        F inv = CoeffTraits<F>::inverse(m(r, c));
        for (std::size_t j = 0; j < cols; ++j)
            m(r, j) *= inv;
        if (transform) {
            for (std::size_t j = 0; j < transform->cols(); ++j)
                (*transform)(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || coeff_is_zero(m(i, c)))
                continue;
            F factor = m(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) -= factor * m(r, j);
            if (transform) {
                for (std::size_t j = 0; j < transform->cols(); ++j)
                    (*transform)(i, j) -= factor * (*transform)(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

FpMatrix reduce_mod_p(const ZMatrix& m, Modulus p);
ZMatrix lift(const FpMatrix& m);
QMatrix to_qmatrix(const ZMatrix& m);

/// Solves A x = b over Q for square nonsingular A; nullopt if singular.
std::optional<std::vector<Rat>> solve_rational(const QMatrix& a, const std::vector<Rat>& b);

/// Back-substitution for an upper-triangular integer matrix with nonzero
/// diagonal: returns x with U x = b, or nullopt if x is not integral.
std::optional<std::vector<BigInt>> solve_upper_integral(const ZMatrix& u, const std::vector<BigInt>& b);

/// Same, over Q.
std::vector<Rat> solve_upper_rational(const ZMatrix& u, const std::vector<Rat>& b);

}  // namespace ringcert

#endif
