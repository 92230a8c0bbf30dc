// Independent reference computations used by the test suites. Everything
// here is deliberately naive (int64 brute force, Laplace expansion) so it
// shares no code path with the library.
#ifndef HYPERLOC_TEST_ORACLES_HPP
#define HYPERLOC_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <hyperloc/lattice.hpp>

namespace oracle
{

using I64Matrix = std::vector<std::vector<std::int64_t>>;

inline I64Matrix to_i64(const hyperloc::IntMatrix &m)
{
    I64Matrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j).get_si();
        }
    }
    return out;
}

inline hyperloc::IntMatrix from_i64(const I64Matrix &m)
{
    hyperloc::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = static_cast<long>(m[i][j]);
        }
    }
    return out;
}

// Laplace expansion along the first row.
inline std::int64_t laplace_det(const I64Matrix &m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    std::int64_t det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        I64Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) {
                    row.push_back(m[i][j]);
                }
            }
            minor.push_back(row);
        }
        const std::int64_t s = (c % 2 == 0) ? 1 : -1;
        det += s * m[0][c] * laplace_det(minor);
    }
    return det;
}

inline std::vector<std::int64_t> all_minors(const I64Matrix &a)
{
    const std::size_t d = a.size();
    const std::size_t n = a[0].size();
    std::vector<std::int64_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) {
            continue;
        }
        I64Matrix sub(d);
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                for (std::size_t i = 0; i < d; ++i) {
                    sub[i].push_back(a[i][j]);
                }
            }
        }
        out.push_back(laplace_det(sub));
    }
    return out;
}

inline bool unimodular(const I64Matrix &a)
{
    for (auto m : all_minors(a)) {
        if (m < -1 || m > 1) {
            return false;
        }
    }
    return true;
}

inline bool has_zero_column(const I64Matrix &a)
{
    for (std::size_t j = 0; j < a[0].size(); ++j) {
        bool zero = true;
        for (const auto &row : a) {
            zero = zero && row[j] == 0;
        }
        if (zero) {
            return true;
        }
    }
    return false;
}

inline I64Matrix random_matrix(std::mt19937_64 &rng, std::size_t d, std::size_t n, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    I64Matrix m(d, std::vector<std::int64_t>(n));
    for (auto &row : m) {
        for (auto &x : row) {
            x = dist(rng);
        }
    }
    return m;
}

// Random unimodular d x n matrix without zero columns: U [I | C] with small
// entries, shuffled columns, filtered by the minor test above.
inline I64Matrix random_unimodular(std::mt19937_64 &rng, std::size_t d, std::size_t n)
{
    std::uniform_int_distribution<int> tri(-1, 1);
    while (true) {
        I64Matrix base(d, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < d; ++i) {
            base[i][i] = 1;
            for (std::size_t j = d; j < n; ++j) {
                base[i][j] = tri(rng);
            }
        }
        // Elementary row operation keeps the minors unchanged up to sign.
        if (d > 1) {
            std::uniform_int_distribution<std::size_t> pick(0, d - 1);
            const std::size_t r1 = pick(rng);
            const std::size_t r2 = pick(rng);
            if (r1 != r2) {
                const int f = tri(rng);
                for (std::size_t j = 0; j < n; ++j) {
                    base[r1][j] += f * base[r2][j];
                }
            }
        }
        std::vector<std::size_t> perm(n);
        for (std::size_t j = 0; j < n; ++j) {
            perm[j] = j;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        I64Matrix out(d, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] = base[i][perm[j]];
            }
        }
        if (!has_zero_column(out) && unimodular(out)) {
            return out;
        }
    }
}

// Plain Gauss-Jordan over Q on an augmented system; returns a solution of
// m x = b or nothing. Kept separate from the library's elimination.
inline std::optional<std::vector<hyperloc::Rational>> gauss_solve(std::vector<std::vector<hyperloc::Rational>> m,
                                                                  std::vector<hyperloc::Rational> b)
{
    using hyperloc::Rational;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && !m[i][c].is_zero()) {
                const Rational f = m[i][c] / m[r][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    m[i][j] -= f * m[r][j];
                }
                b[i] -= f * b[r];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!b[i].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
    }
    return x;
}

// Left kernel {w : w^T M = 0} of a d x k matrix: reduce M^T and read the
// kernel off its free columns.
inline std::vector<std::vector<hyperloc::Rational>> left_kernel(const std::vector<std::vector<hyperloc::Rational>> &m,
                                                                std::size_t d)
{
    using hyperloc::Rational;
    const std::size_t k = m.empty() ? 0 : m[0].size();
    std::vector<std::vector<Rational>> t(k, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            t[j][i] = m[i][j];
        }
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < k; ++c) {
        std::size_t p = r;
        while (p < k && t[p][c].is_zero()) {
            ++p;
        }
        if (p == k) {
            continue;
        }
        std::swap(t[p], t[r]);
        const Rational inv = Rational(1) / t[r][c];
        for (auto &x : t[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i != r && !t[i][c].is_zero()) {
                const Rational f = t[i][c];
                for (std::size_t j = 0; j < d; ++j) {
                    t[i][j] -= f * t[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < d; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) {
            continue;
        }
        std::vector<Rational> w(d);
        w[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            w[pivots[i]] = -t[i][f];
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

// Attachment by exhaustive search: integer parts on the support of lambda
// with |gamma_i| <= bound, and the lift condition on the zero set (every
// coordinate that is constant on the solution space must be non-integral).
// chi is given by rational and T parts.
inline bool attached_brute(const I64Matrix &a, const std::vector<int> &lambda,
                           const std::vector<hyperloc::Rational> &rat, const std::vector<hyperloc::Rational> &tau,
                           long bound)
{
    using hyperloc::Integer;
    using hyperloc::Rational;
    const std::size_t d = a.size(), n = a[0].size();
    std::vector<std::size_t> zero, free;
    for (std::size_t i = 0; i < n; ++i) {
        (lambda[i] == 0 ? zero : free).push_back(i);
    }
    std::vector<std::vector<Rational>> az(d, std::vector<Rational>(zero.size()));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < zero.size(); ++k) {
            az[r][k] = Rational(Integer(static_cast<long>(a[r][zero[k]])));
        }
    }
    // Linear functionals f(chi - v) = c - sum_j g_j gamma_j over Q, scaled to
    // integers with a common denominator.
    struct Functional {
        std::int64_t scale;
        std::int64_t c;
        std::vector<std::int64_t> g;
        bool must_vanish; // else: must be a non-integer
    };
    std::vector<Functional> tests;
    auto add = [&](const std::vector<Rational> &w, bool vanish) {
        Rational c;
        std::vector<Rational> g(free.size());
        for (std::size_t r = 0; r < d; ++r) {
            c += w[r] * rat[r];
            for (std::size_t t = 0; t < free.size(); ++t) {
                g[t] += w[r] * Rational(Integer(static_cast<long>(a[r][free[t]])));
            }
        }
        Integer l = c.den();
        for (const auto &x : g) {
            l = hyperloc::lcm(l, x.den());
        }
        Functional f{l.get_si(), (c * Rational(l)).num().get_si(), {}, vanish};
        for (const auto &x : g) {
            f.g.push_back((x * Rational(l)).num().get_si());
        }
        tests.push_back(f);
    };
    for (const auto &w : left_kernel(az, d)) {
        Rational tw;
        for (std::size_t r = 0; r < d; ++r) {
            tw += w[r] * tau[r];
        }
        if (!tw.is_zero()) {
            return false;
        }
        add(w, true);
    }
    for (std::size_t k = 0; k < zero.size(); ++k) {
        // y^T A_Z = e_k^T  <=>  A_Z^T y = e_k.
        std::vector<std::vector<Rational>> t(zero.size(), std::vector<Rational>(d));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t j = 0; j < zero.size(); ++j) {
                t[j][r] = az[r][j];
            }
        }
        std::vector<Rational> e(zero.size());
        e[k] = 1;
        const auto y = gauss_solve(t, e);
        if (!y) {
            continue;
        }
        Rational ty;
        for (std::size_t r = 0; r < d; ++r) {
            ty += (*y)[r] * tau[r];
        }
        if (ty.is_zero()) {
            add(*y, false);
        }
    }
    std::vector<long> lo, hi;
    for (auto i : free) {
        lo.push_back(lambda[i] > 0 ? 0 : -bound);
        hi.push_back(lambda[i] > 0 ? bound : -1);
    }
    std::vector<long> cur = lo;
    while (true) {
        bool ok = true;
        for (const auto &f : tests) {
            std::int64_t v = f.c;
            for (std::size_t t = 0; t < free.size(); ++t) {
                v -= f.g[t] * cur[t];
            }
            ok = f.must_vanish ? v == 0 : v % f.scale != 0;
            if (!ok) {
                break;
            }
        }
        if (ok) {
            return true;
        }
        std::size_t t = 0;
        while (t < free.size() && cur[t] == hi[t]) {
            cur[t] = lo[t];
            ++t;
        }
        if (t == free.size()) {
            return false;
        }
        ++cur[t];
    }
}

} // namespace oracle

#endif
