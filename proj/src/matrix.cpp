#include "ringcert/matrix.hpp"

namespace ringcert {

ZMatrix identity_matrix(std::size_t n)
{
    ZMatrix m(n, n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

ZMatrix matmul(const ZMatrix& a, const ZMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul dimension mismatch");
    ZMatrix out(a.rows(), b.cols(), BigInt(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

ZMatrix transpose(const ZMatrix& a)
{
    ZMatrix out(a.cols(), a.rows(), BigInt(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

BigInt det_bareiss(ZMatrix m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    BigInt det = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

FpMatrix reduce_mod_p(const ZMatrix& m, Modulus p)
{
    FpMatrix out(m.rows(), m.cols(), Fp(0L, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Fp(m(i, j), p);
    return out;
}

ZMatrix lift(const FpMatrix& m)
{
    ZMatrix out(m.rows(), m.cols(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).value();
    return out;
}

QMatrix to_qmatrix(const ZMatrix& m)
{
    QMatrix out(m.rows(), m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rat(m(i, j));
    return out;
}

std::optional<std::vector<Rat>> solve_rational(const QMatrix& a, const std::vector<Rat>& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_rational dimension mismatch");
    QMatrix aug(n, n + 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug(i, n);
    return x;
}

std::vector<Rat> solve_upper_rational(const ZMatrix& u, const std::vector<Rat>& b)
{
    const std::size_t n = u.rows();
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= Rat(u(i, j)) * x[j];
        if (u(i, i) == 0)
            throw std::domain_error("zero on the diagonal");
        x[i] = acc / Rat(u(i, i));
    }
    return x;
}

std::optional<std::vector<BigInt>> solve_upper_integral(const ZMatrix& u, const std::vector<BigInt>& b)
{
    const std::size_t n = u.rows();
    std::vector<BigInt> x(n);
    for (std::size_t i = n; i-- > 0;) {
        BigInt acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= u(i, j) * x[j];
        if (u(i, i) == 0)
            throw std::domain_error("zero on the diagonal");
        if (!mpz_divisible_p(acc.get_mpz_t(), u(i, i).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(x[i].get_mpz_t(), acc.get_mpz_t(), u(i, i).get_mpz_t());
    }
    return x;
}

}  // namespace ringcert
