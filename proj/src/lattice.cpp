#include <algorithm>
#include <numeric>

#include <hyperloc/lattice.hpp>

namespace hyperloc
{

namespace
{

// Row and column operations on M mirrored onto the transforms, so that
// U * M0 * V == M holds after every step.
struct SmithWork {
    IntMatrix M;
    IntMatrix U;
    IntMatrix V;

    void swap_rows(std::size_t a, std::size_t b)
    {
        M.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        M.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    // row[t] += f * row[s]
    void add_row(std::size_t t, std::size_t s, const Integer &f)
    {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            M(t, j) += f * M(s, j);
        }
        for (std::size_t j = 0; j < U.cols(); ++j) {
            U(t, j) += f * U(s, j);
        }
    }
    // col[t] += f * col[s]
    void add_col(std::size_t t, std::size_t s, const Integer &f)
    {
        for (std::size_t i = 0; i < M.rows(); ++i) {
            M(i, t) += f * M(i, s);
        }
        for (std::size_t i = 0; i < V.rows(); ++i) {
            V(i, t) += f * V(i, s);
        }
    }
    void negate_row(std::size_t t)
    {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            M(t, j) = -M(t, j);
        }
        for (std::size_t j = 0; j < U.cols(); ++j) {
            U(t, j) = -U(t, j);
        }
    }
};

Integer floor_div(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

IntVector SmithForm::diagonal() const
{
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
        out.push_back(D(i, i));
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix &m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (w.M(i, j) != 0 && (pi == rows || abs(w.M(i, j)) < abs(w.M(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) {
                SmithForm out{std::move(w.U), std::move(w.M), std::move(w.V), t};
                return out;
            }
            if (pi != t) {
                w.swap_rows(pi, t);
            }
            if (pj != t) {
                w.swap_cols(pj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.M(i, t) != 0) {
                    w.add_row(i, t, -floor_div(w.M(i, t), w.M(t, t)));
                    clean = clean && w.M(i, t) == 0;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.M(t, j) != 0) {
                    w.add_col(j, t, -floor_div(w.M(t, j), w.M(t, t)));
                    clean = clean && w.M(t, j) == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Enforce d_t | every remaining entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(w.M(i, j).get_mpz_t(), w.M(t, t).get_mpz_t())) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (w.M(t, t) < 0) {
            w.negate_row(t);
        }
    }
    SmithForm out{std::move(w.U), std::move(w.M), std::move(w.V), t};
    return out;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t> &)> &fn)
{
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!fn(idx)) {
            return;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<Integer> maximal_minors(const IntMatrix &a)
{
    std::vector<Integer> out;
    for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t> &cols) {
        out.push_back(determinant(a.select_columns(cols)));
        return true;
    });
    return out;
}

bool is_unimodular(const IntMatrix &a)
{
    bool ok = true;
    for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t> &cols) {
        const Integer det = determinant(a.select_columns(cols));
        ok = det >= -1 && det <= 1;
        return ok;
    });
    return ok;
}

bool minors_coprime(const IntMatrix &a)
{
    Integer g = 0;
    for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t> &cols) {
        g = gcd(g, determinant(a.select_columns(cols)));
        return g != 1;
    });
    return g == 1;
}

std::vector<std::size_t> KernelBasis::zero_rows() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < B.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < B.cols(); ++j) {
            zero = zero && B(i, j) == 0;
        }
        if (zero) {
            out.push_back(i);
        }
    }
    return out;
}

KernelBasis kernel_basis(const IntMatrix &a)
{
    const SmithForm s = smith_normal_form(a);
    if (s.rank < a.rows()) {
        throw Error(ErrorKind::RankDeficient, "matrix does not have full row rank");
    }
    const std::size_t n = a.cols();
    IntMatrix b(n, n - s.rank);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = s.rank; j < n; ++j) {
            b(i, j - s.rank) = s.V(i, j);
        }
    }
    return KernelBasis{std::move(b)};
}

IntMatrix integer_kernel(const IntMatrix &m)
{
    const std::size_t n = m.cols();
    if (m.rows() == 0) {
        return IntMatrix::identity(n);
    }
    const SmithForm s = smith_normal_form(m);
    IntMatrix b(n, n - s.rank);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = s.rank; j < n; ++j) {
            b(i, j - s.rank) = s.V(i, j);
        }
    }
    return b;
}

std::optional<ParamVector> rational_span_witness(const IntMatrix &a, const ParamVector &v,
                                                 const std::vector<std::size_t> &subset)
{
    if (v.size() != a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "vector length differs from the number of rows");
    }
    const RatMatrix sub = to_rational(a.select_columns(subset));
    const auto x = solve(sub, pr(v));
    const auto y = solve(sub, tau_part(v));
    if (!x || !y) {
        return std::nullopt;
    }
    ParamVector w(a.cols());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        w[subset[k]] = ParamScalar((*x)[k], (*y)[k]);
    }
    return w;
}

std::optional<IntVector> integer_span_witness(const IntMatrix &a, const ParamVector &v,
                                              const std::vector<std::size_t> &subset)
{
    if (v.size() != a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "vector length differs from the number of rows");
    }
    for (const auto &x : v) {
        if (!x.is_rational()) {
            throw Error(ErrorKind::TauPresent, "integer span query on a vector with a T-part");
        }
    }
    IntVector target;
    for (const auto &x : v) {
        if (!x.rat().is_integer()) {
            return std::nullopt;
        }
        target.push_back(x.rat().num());
    }
    const IntMatrix sub = a.select_columns(subset);
    const SmithForm s = smith_normal_form(sub);
    const IntVector y = s.U.apply(target);
    IntVector z(subset.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) {
                return std::nullopt;
            }
            Integer q;
            mpz_divexact(q.get_mpz_t(), y[i].get_mpz_t(), s.D(i, i).get_mpz_t());
            z[i] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    const IntVector x = s.V.apply(z);
    IntVector w(a.cols());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        w[subset[k]] = x[k];
    }
    return w;
}

LatticeMembership in_lattice_image(const IntMatrix &a, const ParamVector &v, const std::vector<std::size_t> &subset)
{
    LatticeMembership m;
    m.integer_witness = integer_span_witness(a, v, subset);
    m.in_integer_span = m.integer_witness.has_value();
    m.rational_witness = rational_span_witness(a, v, subset);
    m.in_rational_span = m.rational_witness.has_value();
    return m;
}

ActionMatrix::ActionMatrix(IntMatrix a) : m_a(std::move(a))
{
    if (m_a.rows() < 1 || m_a.rows() >= m_a.cols()) {
        throw Error(ErrorKind::DimensionOrder, "action matrix must satisfy 1 <= d < n");
    }
    for (std::size_t j = 0; j < m_a.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m_a.rows(); ++i) {
            zero = zero && m_a(i, j) == 0;
        }
        if (zero) {
            throw Error(ErrorKind::ZeroColumn, "column " + std::to_string(j) + " of the action matrix is zero");
        }
    }
    if (!minors_coprime(m_a)) {
        throw Error(ErrorKind::MinorsNotCoprime, "maximal minors of the action matrix are not coprime");
    }
    m_unimodular = is_unimodular(m_a);
}

} // namespace hyperloc
