#include <hyperloc/matrix.hpp>

namespace hyperloc
{

RatMatrix to_rational(const IntMatrix &m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = Rational(m(i, j));
        }
    }
    return r;
}

RatVector to_rational(const IntVector &v)
{
    return RatVector(v.begin(), v.end());
}

Integer determinant(const IntMatrix &input)
{
    if (input.rows() != input.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    }
    const std::size_t n = input.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        }
        prev = m(k, k);
    }
    return sign > 0 ? Integer(m(n - 1, n - 1)) : Integer(-m(n - 1, n - 1));
}

RowEchelon rref(const RatMatrix &input)
{
    RowEchelon out{input, {}};
    RatMatrix &m = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(r, p);
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) -= f * m(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const RatMatrix &m)
{
    return rref(m).pivots.size();
}

std::size_t rank(const IntMatrix &m)
{
    return rank(to_rational(m));
}

std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b)
{
    if (b.size() != m.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "solve: right-hand side has wrong length");
    }
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    const RowEchelon e = rref(aug);
    RatVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) {
            return std::nullopt;
        }
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix &m)
{
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.reduced(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

IntVector clear_denominators(const RatVector &v)
{
    const Integer l = common_denominator(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto &q : v) {
        Integer z = q.num() * l;
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), q.den().get_mpz_t());
        out.push_back(z);
    }
    return out;
}

IntVector primitive_integer(const RatVector &v)
{
    IntVector z = clear_denominators(v);
    Integer g = 0;
    for (const auto &x : z) {
        g = gcd(g, x);
    }
    if (g > 1) {
        for (auto &x : z) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
    return z;
}

Rational dot(const RatVector &a, const RatVector &b)
{
    if (a.size() != b.size()) {
        throw Error(ErrorKind::ShapeMismatch, "dot product length mismatch");
    }
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Integer dot(const IntVector &a, const IntVector &b)
{
    if (a.size() != b.size()) {
        throw Error(ErrorKind::ShapeMismatch, "dot product length mismatch");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::string to_string(const IntVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const RatVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].to_string();
    }
    return s + ")";
}

} // namespace hyperloc
