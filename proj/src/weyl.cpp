#include <algorithm>
#include <set>

#include <hyperloc/lattice.hpp>
#include <hyperloc/weyl.hpp>

namespace hyperloc
{

namespace
{

int doubled(const Rational &exp)
{
    const Rational two = exp * Rational(2);
    if (!two.is_integer() || !two.num().fits_sint_p()) {
        throw Error(ErrorKind::ParseError, "hbar exponent must be a half-integer");
    }
    return static_cast<int>(two.num().get_si());
}

Integer falling(unsigned top, unsigned k)
{
    Integer r = 1;
    for (unsigned t = 0; t < k; ++t) {
        r *= top - t;
    }
    return r;
}

Integer factorial(unsigned k)
{
    return falling(k, k);
}

} // namespace

WeylElement WeylElement::constant(std::size_t n, const Rational &c)
{
    WeylElement e(n);
    e.add(WeylMonomial{0, std::vector<unsigned>(n), std::vector<unsigned>(n)}, c);
    return e;
}

WeylElement WeylElement::term(const Rational &c, const Rational &hbar_exp, std::vector<unsigned> x,
                              std::vector<unsigned> xi)
{
    if (x.size() != xi.size()) {
        throw Error(ErrorKind::ShapeMismatch, "x and xi exponent vectors differ in length");
    }
    WeylElement e(x.size());
    e.add(WeylMonomial{doubled(hbar_exp), std::move(x), std::move(xi)}, c);
    return e;
}

WeylElement WeylElement::x(std::size_t n, std::size_t i)
{
    std::vector<unsigned> ex(n), exi(n);
    ex.at(i) = 1;
    return term(1, 0, ex, exi);
}

WeylElement WeylElement::xi(std::size_t n, std::size_t i)
{
    std::vector<unsigned> ex(n), exi(n);
    exi.at(i) = 1;
    return term(1, 0, ex, exi);
}

WeylElement WeylElement::hbar(std::size_t n, const Rational &exp)
{
    return term(1, exp, std::vector<unsigned>(n), std::vector<unsigned>(n));
}

void WeylElement::add(const WeylMonomial &m, const Rational &c)
{
    if (m.x.size() != m_n || m.xi.size() != m_n) {
        throw Error(ErrorKind::ShapeMismatch, "monomial has the wrong number of variables");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, fresh] = m_terms.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void WeylElement::check_same(const WeylElement &o) const
{
    if (o.m_n != m_n) {
        throw Error(ErrorKind::ShapeMismatch, "Weyl elements in different numbers of variables");
    }
}

WeylElement &WeylElement::operator+=(const WeylElement &o)
{
    check_same(o);
    for (const auto &[m, c] : o.m_terms) {
        add(m, c);
    }
    return *this;
}

WeylElement &WeylElement::operator-=(const WeylElement &o)
{
    check_same(o);
    for (const auto &[m, c] : o.m_terms) {
        add(m, -c);
    }
    return *this;
}

WeylElement &WeylElement::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, v] : m_terms) {
        v *= c;
    }
    return *this;
}

std::string WeylElement::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : m_terms) {
        std::string t = c.to_string();
        if (m.hbar2 != 0) {
            t += "*h^" + m.hbar_exp().to_string();
        }
        for (std::size_t i = 0; i < m_n; ++i) {
            if (m.x[i]) {
                t += "*x" + std::to_string(i + 1) + (m.x[i] > 1 ? "^" + std::to_string(m.x[i]) : "");
            }
            if (m.xi[i]) {
                t += "*xi" + std::to_string(i + 1) + (m.xi[i] > 1 ? "^" + std::to_string(m.xi[i]) : "");
            }
        }
        out += (out.empty() ? "" : " + ") + t;
    }
    return out;
}

WeylElement multiply(const WeylElement &a, const WeylElement &b)
{
    if (a.vars() != b.vars()) {
        throw Error(ErrorKind::ShapeMismatch, "Weyl elements in different numbers of variables");
    }
    WeylElement out(a.vars());
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            WeylMonomial m{ma.hbar2 + mb.hbar2, ma.x, ma.xi};
            for (std::size_t i = 0; i < a.vars(); ++i) {
                m.x[i] += mb.x[i];
                m.xi[i] += mb.xi[i];
            }
            out.add(m, ca * cb);
        }
    }
    return out;
}

WeylElement star(const WeylElement &a, const WeylElement &b)
{
    if (a.vars() != b.vars()) {
        throw Error(ErrorKind::ShapeMismatch, "Weyl elements in different numbers of variables");
    }
    const std::size_t n = a.vars();
    WeylElement out(n);
    std::vector<unsigned> alpha(n), limit(n);
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            // alpha ranges over the box where both derivatives survive.
            for (std::size_t i = 0; i < n; ++i) {
                limit[i] = std::min(ma.xi[i], mb.x[i]);
                alpha[i] = 0;
            }
            while (true) {
                WeylMonomial m{ma.hbar2 + mb.hbar2, ma.x, ma.xi};
                Integer num = 1, den = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    m.hbar2 += 2 * static_cast<int>(alpha[i]);
                    m.xi[i] = ma.xi[i] - alpha[i] + mb.xi[i];
                    m.x[i] = ma.x[i] + mb.x[i] - alpha[i];
                    num *= falling(ma.xi[i], alpha[i]) * falling(mb.x[i], alpha[i]);
                    den *= factorial(alpha[i]);
                }
                out.add(m, ca * cb * Rational(num, den));
                std::size_t i = 0;
                while (i < n && alpha[i] == limit[i]) {
                    alpha[i++] = 0;
                }
                if (i == n) {
                    break;
                }
                ++alpha[i];
            }
        }
    }
    return out;
}

WeylElement commutator(const WeylElement &a, const WeylElement &b)
{
    return star(a, b) - star(b, a);
}

namespace
{

bool is_symbol(const WeylElement &f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto &t) { return t.first.hbar2 == 0; });
}

WeylElement derivative(const WeylElement &f, std::size_t i, bool wrt_xi)
{
    WeylElement out(f.vars());
    for (const auto &[m, c] : f.terms()) {
        const unsigned e = wrt_xi ? m.xi[i] : m.x[i];
        if (e == 0) {
            continue;
        }
        WeylMonomial d = m;
        (wrt_xi ? d.xi[i] : d.x[i]) = e - 1;
        out.add(d, c * Rational(static_cast<long>(e)));
    }
    return out;
}

} // namespace

WeylElement poisson(const WeylElement &f, const WeylElement &g)
{
    if (!is_symbol(f) || !is_symbol(g)) {
        throw Error(ErrorKind::NonSymbol, "Poisson bracket of elements with hbar terms");
    }
    if (f.vars() != g.vars()) {
        throw Error(ErrorKind::ShapeMismatch, "Weyl elements in different numbers of variables");
    }
    WeylElement out(f.vars());
    for (std::size_t i = 0; i < f.vars(); ++i) {
        out += multiply(derivative(f, i, true), derivative(g, i, false));
        out -= multiply(derivative(f, i, false), derivative(g, i, true));
    }
    return out;
}

std::optional<Rational> order(const WeylElement &a)
{
    if (a.is_zero()) {
        return std::nullopt;
    }
    int lo = a.terms().begin()->first.hbar2;
    for (const auto &[m, c] : a.terms()) {
        lo = std::min(lo, m.hbar2);
    }
    return Rational(Integer(-lo), Integer(2));
}

WeylElement symbol(const WeylElement &a, const Rational &m)
{
    const int target = -doubled(m);
    WeylElement out(a.vars());
    for (const auto &[mono, c] : a.terms()) {
        if (mono.hbar2 < target) {
            throw Error(ErrorKind::NotInFiltration, "element has hbar exponent below -" + m.to_string());
        }
        if (mono.hbar2 == target) {
            out.add(mono, c);
        }
    }
    return out;
}

FWeight f_weight(const WeylElement &a)
{
    std::optional<long> w;
    for (const auto &[m, c] : a.terms()) {
        long t = m.hbar2;
        for (std::size_t i = 0; i < a.vars(); ++i) {
            t += m.x[i] + m.xi[i];
        }
        if (w && *w != t) {
            return MixedWeight{};
        }
        w = t;
    }
    if (!w) {
        return NoTerms{};
    }
    return Rational(*w);
}

IntVector t_weight(const IntMatrix &a, const WeylMonomial &m)
{
    IntVector w(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const long e = static_cast<long>(m.x.at(j)) - static_cast<long>(m.xi.at(j));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            w[r] += e * a(r, j);
        }
    }
    return w;
}

WeylElement mu_W(const IntMatrix &a, std::size_t i)
{
    if (i >= a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "generator index out of range");
    }
    const std::size_t n = a.cols();
    WeylElement out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<unsigned> e(n);
        e[j] = 1;
        out.add(WeylMonomial{-2, e, e}, Rational(a(i, j)));
    }
    return out;
}

namespace
{

WeylElement diagonal_term(std::size_t n, std::size_t j, const Rational &c)
{
    std::vector<unsigned> e(n);
    e[j] = 1;
    WeylElement out(n);
    out.add(WeylMonomial{0, e, e}, c);
    return out;
}

} // namespace

MomentIdeal moment_ideal(const IntMatrix &a)
{
    const std::size_t d = a.rows(), n = a.cols();
    const RowEchelon e = rref(to_rational(a));
    if (e.pivots.size() < d) {
        throw Error(ErrorKind::RankDeficient, "action matrix does not have full row rank");
    }
    MomentIdeal out;
    for (std::size_t i = 0; i < d; ++i) {
        WeylElement g(n);
        for (std::size_t j = 0; j < n; ++j) {
            g += diagonal_term(n, j, Rational(a(i, j)));
        }
        out.generators.push_back(std::move(g));
    }

    FlatnessCertificate &cert = out.certificate;
    cert.permutation = e.pivots;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::find(e.pivots.begin(), e.pivots.end(), j) == e.pivots.end()) {
            cert.permutation.push_back(j);
        }
    }
    // U = (A_B)^-1, column by column.
    const RatMatrix basis = to_rational(a.select_columns(e.pivots));
    cert.row_ops = RatMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        RatVector unit(d);
        unit[k] = 1;
        const auto col = solve(basis, unit);
        for (std::size_t r = 0; r < d; ++r) {
            cert.row_ops(r, k) = (*col)[r];
        }
    }
    cert.row_ops_unimodular = true;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            cert.row_ops_unimodular = cert.row_ops_unimodular && cert.row_ops(r, k).is_integer();
        }
    }
    const RatMatrix reduced = cert.row_ops * to_rational(a);
    cert.c = RatMatrix(d, n - d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t t = 0; t < d; ++t) {
            if (reduced(i, cert.permutation[t]) != Rational(i == t ? 1 : 0)) {
                throw Error(ErrorKind::InternalInconsistency, "row operations did not produce an identity block");
            }
        }
        for (std::size_t j = 0; j < n - d; ++j) {
            cert.c(i, j) = -reduced(i, cert.permutation[d + j]);
        }
    }

    cert.normal_form_verified = true;
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t lead = cert.permutation[i];
        WeylElement nf = diagonal_term(n, lead, 1);
        for (std::size_t j = 0; j < n - d; ++j) {
            nf -= diagonal_term(n, cert.permutation[d + j], cert.c(i, j));
        }
        WeylElement combo(n);
        for (std::size_t k = 0; k < d; ++k) {
            combo += out.generators[k] * cert.row_ops(i, k);
        }
        cert.normal_form_verified = cert.normal_form_verified && combo == nf;
        cert.normal_form.push_back(std::move(nf));
        cert.initial_ideal.push_back(diagonal_term(n, lead, 1));
    }
    if (!cert.normal_form_verified) {
        throw Error(ErrorKind::InternalInconsistency, "normal form does not match the row-reduced generators");
    }
    cert.dim_fiber = 2 * n - d;
    cert.dim_quotient = 2 * (n - d);

    cert.kernel = kernel_basis(a).B;
    cert.kernel_zero_rows = KernelBasis{cert.kernel}.zero_rows();
    // Row j of B vanishes exactly when j is a pivot whose row of c is zero:
    // non-pivot coordinates are free in the kernel.
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < d; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n - d; ++j) {
            zero = zero && cert.c(i, j).is_zero();
        }
        if (zero) {
            expected.push_back(cert.permutation[i]);
        }
    }
    std::sort(expected.begin(), expected.end());
    if (expected != cert.kernel_zero_rows) {
        throw Error(ErrorKind::InternalInconsistency, "kernel zero rows disagree with the normal form");
    }
    return out;
}

} // namespace hyperloc
