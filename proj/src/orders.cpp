#include "ringcert/orders.hpp"

#include <stdexcept>
#include <string>

namespace ringcert {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n)
{
    if (i > j)
        std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

namespace {

// b_j as a polynomial: column j of B.
ZPoly column_poly(const ZMatrix& b, std::size_t j)
{
    return ZPoly(b.col(j));
}

ZPoly combination(const std::vector<ZPoly>& b, const std::vector<BigInt>& c)
{
    std::vector<BigInt> acc;
    for (std::size_t k = 0; k < c.size() && k < b.size(); ++k) {
        if (c[k] == 0)
            continue;
        acc = list_add(acc, mul_pointwise(c[k], b[k].coeffs()));
    }
    return ZPoly(std::move(acc));
}

std::string pair_path(std::size_t i, std::size_t j)
{
    return "i=" + std::to_string(i) + "/j=" + std::to_string(j);
}

}  // namespace

bool is_upper_triangular_nonsingular(const ZMatrix& b)
{
    if (b.rows() != b.cols())
        return false;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (b(i, i) == 0)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (b(i, j) != 0)
                return false;
    }
    return true;
}

Verdict verify_order_builder(const OrderDescription& o, unsigned threads)
{
    const std::size_t n = o.B.rows();
    if (n == 0 || o.T.degree() != static_cast<int>(n))
        return Verdict::reject("order/degree-mismatch");
    if (o.T.leading() != 1)
        return Verdict::reject("order/T-not-monic");
    if (o.d <= 0)
        return Verdict::reject("order/denominator");
    if (o.B.cols() != n)
        return Verdict::reject("order/B-not-square");
    for (std::size_t i = 0; i < n; ++i) {
        if (o.B(i, i) == 0)
            return Verdict::reject("order/B-diagonal/i=" + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j)
            if (o.B(i, j) != 0)
                return Verdict::reject("order/B-not-upper-triangular/" + pair_path(i, j));
    }
    const std::size_t np = pair_count(n);
    if (o.a.size() != np || o.s.size() != np)
        return Verdict::reject("order/dims");
    for (const auto& row : o.a)
        if (row.size() != n)
            return Verdict::reject("order/dims");
    if (o.one.size() != n || o.theta.size() != n)
        return Verdict::reject("order/dims");

    std::vector<ZPoly> b;
    for (std::size_t j = 0; j < n; ++j)
        b.push_back(column_poly(o.B, j));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            pairs.emplace_back(i, j);

    Verdict v = first_failure(pairs.size(), threads, [&](std::size_t k) {
        auto [i, j] = pairs[k];
        ZPoly lhs = b[i] * b[j];
        ZPoly rhs = o.d * combination(b, o.a[k]) - o.T * o.s[k];
        if (lhs != rhs)
            return Verdict::reject("order/identity/" + pair_path(i, j));
        return Verdict::accept();
    });
    if (!v)
        return v;

    if (combination(b, o.one) - o.T * o.one_s != ZPoly(std::vector<BigInt>{o.d}))
        return Verdict::reject("order/unit");
    ZPoly dx(std::vector<BigInt>{BigInt(0), o.d});
    if (combination(b, o.theta) - o.T * o.theta_s != dx)
        return Verdict::reject("order/theta");
    return Verdict::accept();
}

TimesTable times_table_of(const OrderDescription& o)
{
    const std::size_t n = o.rank();
    TimesTable tt;
    tt.n = n;
    tt.zero = 0;
    tt.entries.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            tt.entries[i * n + j] = o.a[pair_index(i, j, n)];
    tt.unit = o.one;
    return tt;
}

FpTimesTable reduce_mod_p(const TimesTable& tt, Modulus p)
{
    FpTimesTable out;
    out.n = tt.n;
    out.zero = Fp(0L, p);
    auto conv = [&](const std::vector<BigInt>& v) {
        std::vector<Fp> r;
        r.reserve(v.size());
        for (const BigInt& x : v)
            r.emplace_back(x, p);
        return r;
    };
    for (const auto& e : tt.entries)
        out.entries.push_back(conv(e));
    out.unit = conv(tt.unit);
    return out;
}

HermiteForm hnf(const ZMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("hnf expects a square matrix");
    ZMatrix h = m;
    ZMatrix u = identity_matrix(n);

    auto col_combine = [&](ZMatrix& x, std::size_t ci, std::size_t ck, const BigInt& p, const BigInt& q,
                           const BigInt& r, const BigInt& s) {
        // (col_i, col_k) <- (p col_i + q col_k, r col_k + s col_i)
        for (std::size_t row = 0; row < x.rows(); ++row) {
            BigInt a = x(row, ci), b = x(row, ck);
            x(row, ci) = p * a + q * b;
            x(row, ck) = r * b + s * a;
        }
    };

    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            if (h(i, k) == 0)
                continue;
            BigInt a = h(i, i), b = h(i, k);
            ExtendedGcd g = xgcd(a, b);
            BigInt ag = a / g.g, bg = b / g.g;
            col_combine(h, i, k, g.x, g.y, ag, BigInt(-bg));
            col_combine(u, i, k, g.x, g.y, ag, BigInt(-bg));
        }
        if (h(i, i) == 0)
            throw std::domain_error("hnf: matrix is singular");
        if (h(i, i) < 0) {
            for (std::size_t row = 0; row < n; ++row) {
                h(row, i) = -h(row, i);
                u(row, i) = -u(row, i);
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            BigInt q = floor_div(h(i, j), h(i, i));
            if (q == 0)
                continue;
            for (std::size_t row = 0; row < n; ++row) {
                h(row, j) -= q * h(row, i);
                u(row, j) -= q * u(row, i);
            }
        }
    }
    return {h, u};
}

BigInt index_z(const ZMatrix& m, const ZMatrix& nmat)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || nmat.rows() != n || nmat.cols() != n)
        throw std::invalid_argument("index_z dimension mismatch");
    HermiteForm hf = hnf(m);
    ZMatrix y(n, n, BigInt(0));
    for (std::size_t j = 0; j < n; ++j) {
        auto x = solve_upper_integral(hf.H, nmat.col(j));
        if (!x)
            throw std::domain_error("index_z: lattice is not contained in the reference lattice");
        for (std::size_t i = 0; i < n; ++i)
            y(i, j) = (*x)[i];
    }
    return abs_value(det_bareiss(y));
}

std::vector<Rat> coordinates_of(const OrderDescription& o, const ZPoly& numerator)
{
    const std::size_t n = o.rank();
    ZPoly rem = divmod_monic(numerator, o.T).remainder;
    std::vector<Rat> rhs(n, Rat(0));
    for (std::size_t i = 0; i < rem.size(); ++i)
        rhs[i] = Rat(rem[i]);
    return solve_upper_rational(o.B, rhs);
}

namespace {

bool integral(const std::vector<Rat>& v, std::vector<BigInt>& out)
{
    out.clear();
    for (const Rat& x : v) {
        if (x.get_den() != 1)
            return false;
        out.emplace_back(x.get_num());
    }
    return true;
}

}  // namespace

std::variant<OrderDescription, OrderBuildError> build_order(const ZPoly& T, const BigInt& d, const ZMatrix& basis)
{
    const std::size_t n = basis.rows();
    if (T.degree() != static_cast<int>(n) || T.leading() != 1)
        return OrderBuildError{"defining polynomial must be monic of degree equal to the basis size"};
    if (basis.cols() != n)
        return OrderBuildError{"basis matrix must be square"};
    if (d <= 0)
        return OrderBuildError{"denominator must be positive"};

    OrderDescription o;
    o.T = T;
    o.d = d;
    if (is_upper_triangular_nonsingular(basis)) {
        o.B = basis;
    } else {
        try {
            o.B = hnf(basis).H;
        } catch (const std::domain_error&) {
            return OrderBuildError{"basis vectors are linearly dependent"};
        }
    }

    std::vector<ZPoly> b;
    for (std::size_t j = 0; j < n; ++j)
        b.push_back(column_poly(o.B, j));

    const Rat dq(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto [q, rem] = divmod_monic(b[i] * b[j], T);
            std::vector<Rat> rhs(n, Rat(0));
            for (std::size_t k = 0; k < rem.size(); ++k)
                rhs[k] = Rat(rem[k]) / dq;
            std::vector<BigInt> coords;
            if (!integral(solve_upper_rational(o.B, rhs), coords))
                return OrderBuildError{"basis does not span a ring: product w_" + std::to_string(i) + "*w_" +
                                       std::to_string(j) + " is not an integral combination"};
            o.a.push_back(std::move(coords));
            o.s.push_back(-q);
        }
    }

    auto exhibit = [&](const ZPoly& target, std::vector<BigInt>& coords, ZPoly& s) {
        auto [q, rem] = divmod_monic(target, T);
        std::vector<Rat> rhs(n, Rat(0));
        for (std::size_t k = 0; k < rem.size(); ++k)
            rhs[k] = Rat(rem[k]);
        s = -q;
        return integral(solve_upper_rational(o.B, rhs), coords);
    };
    if (!exhibit(ZPoly(std::vector<BigInt>{d}), o.one, o.one_s))
        return OrderBuildError{"1 is not in the span of the basis"};
    if (!exhibit(ZPoly(std::vector<BigInt>{BigInt(0), d}), o.theta, o.theta_s))
        return OrderBuildError{"theta is not in the span of the basis"};
    return o;
}

OrderDescription monogenic_order(const ZPoly& T)
{
    auto r = build_order(T, 1, identity_matrix(static_cast<std::size_t>(T.degree())));
    if (auto* err = std::get_if<OrderBuildError>(&r))
        throw std::invalid_argument(err->message);
    return std::get<OrderDescription>(std::move(r));
}

}  // namespace ringcert
