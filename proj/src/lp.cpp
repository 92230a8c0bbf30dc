#include <algorithm>
#include <map>
#include <optional>

#include <hyperloc/lp.hpp>

namespace hyperloc
{

void LinearSystem::add(RatVector coeffs, Relation rel, Rational rhs)
{
    if (coeffs.size() != dim) {
        throw Error(ErrorKind::ShapeMismatch, "constraint length differs from the system dimension");
    }
    rows.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

namespace
{

// A row derived from the input as the combination sum_i y_i (row i).
struct DerivedRow {
    RatVector c;
    Rational b;
    bool strict = false;
    RatVector y;
    std::vector<bool> history; // inequality rows with y_i > 0

    void axpy(const Rational &f, const DerivedRow &o)
    {
        for (std::size_t j = 0; j < c.size(); ++j) {
            c[j] += f * o.c[j];
        }
        b += f * o.b;
        for (std::size_t j = 0; j < y.size(); ++j) {
            y[j] += f * o.y[j];
        }
    }
    void scale(const Rational &f)
    {
        for (auto &v : c) {
            v *= f;
        }
        b *= f;
        for (auto &v : y) {
            v *= f;
        }
    }
    bool zero_coeffs() const
    {
        return std::all_of(c.begin(), c.end(), [](const Rational &v) { return v.is_zero(); });
    }
};

std::size_t count(const std::vector<bool> &h)
{
    return static_cast<std::size_t>(std::count(h.begin(), h.end(), true));
}

// An integer-friendly value in the interval given by optional bounds.
Rational pick_value(const std::optional<Rational> &lo, bool lo_strict, const std::optional<Rational> &hi,
                    bool hi_strict)
{
    auto ok = [&](const Rational &v) {
        if (lo && (lo_strict ? !(v > *lo) : !(v >= *lo))) {
            return false;
        }
        if (hi && (hi_strict ? !(v < *hi) : !(v <= *hi))) {
            return false;
        }
        return true;
    };
    std::vector<Rational> candidates{Rational(0)};
    if (lo) {
        candidates.emplace_back(lo->ceil());
        candidates.emplace_back(lo->floor() + 1);
    }
    if (hi) {
        candidates.emplace_back(hi->floor());
        candidates.emplace_back(hi->ceil() - 1);
    }
    std::optional<Rational> best;
    for (const auto &v : candidates) {
        if (ok(v) && (!best || v.abs() < best->abs())) {
            best = v;
        }
    }
    if (best) {
        return *best;
    }
    if (lo && hi) {
        return (*lo + *hi) / Rational(2);
    }
    // Unreachable for consistent bounds; one-sided intervals always admit an
    // integer candidate above.
    throw Error(ErrorKind::InternalInconsistency, "empty interval during back substitution");
}

Infeasible certificate_of(const DerivedRow &r, const Rational &sign)
{
    Infeasible out{r.y};
    for (auto &v : out.multipliers) {
        v *= sign;
    }
    return out;
}

} // namespace

LpResult solve_fourier_motzkin(const LinearSystem &sys)
{
    const std::size_t k = sys.dim;
    const std::size_t m = sys.rows.size();
    std::vector<DerivedRow> eqs;
    std::vector<DerivedRow> ineqs;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint &c = sys.rows[i];
        DerivedRow r{c.coeffs, c.rhs, c.rel == Relation::Gt, RatVector(m), std::vector<bool>(m, false)};
        r.y[i] = 1;
        if (c.rel == Relation::Eq) {
            eqs.push_back(std::move(r));
        } else {
            r.history[i] = true;
            ineqs.push_back(std::move(r));
        }
    }

    std::vector<bool> active(k, true);
    // (variable, defining equation) in elimination order.
    std::vector<std::pair<std::size_t, DerivedRow>> substitutions;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        DerivedRow &eq = eqs[e];
        std::size_t v = k;
        for (std::size_t j = 0; j < k; ++j) {
            if (!eq.c[j].is_zero()) {
                v = j;
                break;
            }
        }
        if (v == k) {
            if (!eq.b.is_zero()) {
                return certificate_of(eq, Rational(eq.b.sign()));
            }
            continue;
        }
        eq.scale(eq.c[v].inverse());
        for (std::size_t f = e + 1; f < eqs.size(); ++f) {
            if (!eqs[f].c[v].is_zero()) {
                eqs[f].axpy(-eqs[f].c[v], eq);
            }
        }
        for (auto &r : ineqs) {
            if (!r.c[v].is_zero()) {
                r.axpy(-r.c[v], eq);
            }
        }
        active[v] = false;
        substitutions.emplace_back(v, eq);
    }

    // Each stage keeps the rows present before its variable was eliminated.
    std::vector<std::pair<std::size_t, std::vector<DerivedRow>>> stages;
    std::size_t eliminated = 0;
    std::vector<DerivedRow> rows = std::move(ineqs);
    while (true) {
        std::vector<DerivedRow> kept;
        for (auto &r : rows) {
            if (r.zero_coeffs()) {
                if (r.strict ? r.b >= 0 : r.b > 0) {
                    return certificate_of(r, Rational(1));
                }
                continue;
            }
            kept.push_back(std::move(r));
        }
        rows = std::move(kept);
        if (rows.empty()) {
            break;
        }
        // Variable with the fewest generated pairs.
        std::size_t v = k;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (!active[j]) {
                continue;
            }
            std::size_t pos = 0, neg = 0, nz = 0;
            for (const auto &r : rows) {
                const int s = r.c[j].sign();
                pos += s > 0;
                neg += s < 0;
                nz += s != 0;
            }
            if (nz == 0) {
                continue;
            }
            const std::size_t cost = pos * neg + (rows.size() - pos - neg);
            if (v == k || cost < best_cost) {
                v = j;
                best_cost = cost;
            }
        }
        // rows nonempty with some nonzero coefficient, so v is set.
        active[v] = false;
        ++eliminated;
        std::vector<DerivedRow> next;
        std::vector<const DerivedRow *> pos, neg;
        for (const auto &r : rows) {
            const int s = r.c[v].sign();
            if (s > 0) {
                pos.push_back(&r);
            } else if (s < 0) {
                neg.push_back(&r);
            } else {
                next.push_back(r);
            }
        }
        for (const auto *p : pos) {
            for (const auto *q : neg) {
                std::vector<bool> h(m);
                for (std::size_t i = 0; i < m; ++i) {
                    h[i] = p->history[i] || q->history[i];
                }
                // Chernikov: a combination of more than eliminated+1 input
                // rows is implied by the others.
                if (count(h) > eliminated + 1) {
                    continue;
                }
                DerivedRow r = *p;
                r.scale(p->c[v].inverse());
                r.axpy(-q->c[v].inverse(), *q);
                r.c[v] = 0;
                r.strict = p->strict || q->strict;
                r.history = std::move(h);
                next.push_back(std::move(r));
            }
        }
        // Drop exact duplicates with identical history. Twins with different
        // histories must both stay: the pruning rule above may accept a
        // later combination with one and reject it with the other.
        std::map<std::string, std::size_t> seen;
        std::vector<DerivedRow> dedup;
        for (auto &r : next) {
            const auto lead = std::find_if(r.c.begin(), r.c.end(), [](const Rational &x) { return !x.is_zero(); });
            if (lead != r.c.end()) {
                r.scale(lead->abs().inverse());
            }
            std::string key = to_string(r.c) + (r.strict ? ">" : ">=") + r.b.to_string() + "|";
            for (bool bit : r.history) {
                key.push_back(bit ? '1' : '0');
            }
            if (seen.emplace(key, dedup.size()).second) {
                dedup.push_back(std::move(r));
            }
        }
        stages.emplace_back(v, std::move(rows));
        rows = std::move(dedup);
    }

    RatVector x(k);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t v = it->first;
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto &r : it->second) {
            if (r.c[v].is_zero()) {
                continue;
            }
            Rational rest = r.b;
            for (std::size_t j = 0; j < k; ++j) {
                if (j != v) {
                    rest -= r.c[j] * x[j];
                }
            }
            const Rational bound = rest / r.c[v];
            if (r.c[v] > 0) {
                if (!lo || bound > *lo || (bound == *lo && r.strict)) {
                    lo = bound;
                    lo_strict = r.strict;
                }
            } else {
                if (!hi || bound < *hi || (bound == *hi && r.strict)) {
                    hi = bound;
                    hi_strict = r.strict;
                }
            }
        }
        x[v] = pick_value(lo, lo_strict, hi, hi_strict);
    }
    for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
        const auto &[v, eq] = *it;
        Rational val = eq.b;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != v) {
                val -= eq.c[j] * x[j];
            }
        }
        x[v] = val;
    }
    return Feasible{std::move(x)};
}

namespace
{

// Dense phase I tableau for {z >= 0 : M z = b} with one artificial per row.
class PhaseOne
{
public:
    PhaseOne(const RatMatrix &m, const RatVector &b)
        : m_rows(m.rows()), m_n(m.cols()), m_t(m.rows(), m.cols() + m.rows()), m_rhs(b), m_sign(m.rows(), 1),
          m_basis(m.rows()), m_r(m.cols() + m.rows())
    {
        for (std::size_t i = 0; i < m_rows; ++i) {
            if (b[i] < 0) {
                m_sign[i] = -1;
                m_rhs[i] = -b[i];
            }
            for (std::size_t j = 0; j < m_n; ++j) {
                m_t(i, j) = m_sign[i] > 0 ? m(i, j) : -m(i, j);
                m_r[j] -= m_t(i, j);
            }
            m_t(i, m_n + i) = 1;
            m_basis[i] = m_n + i;
            m_obj += m_rhs[i];
        }
    }

    StandardResult run()
    {
        while (true) {
            std::size_t enter = m_n;
            for (std::size_t j = 0; j < m_n; ++j) {
                if (m_r[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == m_n) {
                break;
            }
            std::size_t leave = m_rows;
            Rational best;
            for (std::size_t i = 0; i < m_rows; ++i) {
                if (m_t(i, enter) > 0) {
                    const Rational ratio = m_rhs[i] / m_t(i, enter);
                    if (leave == m_rows || ratio < best || (ratio == best && m_basis[i] < m_basis[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            // Phase I is bounded below by 0, so some row limits the step.
            pivot(leave, enter);
        }
        if (m_obj > 0) {
            RatVector y(m_rows);
            for (std::size_t i = 0; i < m_rows; ++i) {
                Rational s;
                for (std::size_t r = 0; r < m_rows; ++r) {
                    if (m_basis[r] >= m_n) {
                        s += m_t(r, m_n + i);
                    }
                }
                y[i] = m_sign[i] > 0 ? s : -s;
            }
            return StandardFarkas{std::move(y)};
        }
        for (std::size_t r = 0; r < m_rows; ++r) {
            if (m_basis[r] < m_n) {
                continue;
            }
            for (std::size_t j = 0; j < m_n; ++j) {
                if (!m_t(r, j).is_zero()) {
                    pivot(r, j);
                    break;
                }
            }
        }
        RatVector z(m_n);
        for (std::size_t r = 0; r < m_rows; ++r) {
            if (m_basis[r] < m_n) {
                z[m_basis[r]] = m_rhs[r];
            }
        }
        return StandardVertex{std::move(z)};
    }

private:
    void pivot(std::size_t row, std::size_t col)
    {
        const std::size_t width = m_n + m_rows;
        const Rational inv = m_t(row, col).inverse();
        for (std::size_t j = 0; j < width; ++j) {
            m_t(row, j) *= inv;
        }
        m_rhs[row] *= inv;
        for (std::size_t i = 0; i < m_rows; ++i) {
            if (i == row || m_t(i, col).is_zero()) {
                continue;
            }
            const Rational f = m_t(i, col);
            for (std::size_t j = 0; j < width; ++j) {
                if (!m_t(row, j).is_zero()) {
                    m_t(i, j) -= f * m_t(row, j);
                }
            }
            m_rhs[i] -= f * m_rhs[row];
        }
        const Rational f = m_r[col];
        if (!f.is_zero()) {
            for (std::size_t j = 0; j < width; ++j) {
                m_r[j] -= f * m_t(row, j);
            }
            m_obj += f * m_rhs[row];
        }
        m_basis[row] = col;
    }

    std::size_t m_rows;
    std::size_t m_n;
    RatMatrix m_t;
    RatVector m_rhs;
    std::vector<int> m_sign;
    std::vector<std::size_t> m_basis;
    RatVector m_r; // reduced costs of the phase I objective
    Rational m_obj;
};

} // namespace

StandardResult feasible_standard_form(const RatMatrix &m, const RatVector &b)
{
    if (b.size() != m.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "standard form right-hand side has wrong length");
    }
    return PhaseOne(m, b).run();
}

LpResult solve_simplex(const LinearSystem &sys)
{
    const std::size_t k = sys.dim;
    const std::size_t m = sys.rows.size();
    std::size_t surplus = 1; // for t >= 1
    for (const auto &r : sys.rows) {
        surplus += r.rel != Relation::Eq;
    }
    // Columns: x+ (k), x- (k), t, surpluses.
    const std::size_t cols = 2 * k + 1 + surplus;
    const std::size_t t_col = 2 * k;
    RatMatrix mat(m + 1, cols);
    RatVector rhs(m + 1);
    std::size_t s = t_col + 1;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint &c = sys.rows[i];
        for (std::size_t j = 0; j < k; ++j) {
            mat(i, j) = c.coeffs[j];
            mat(i, k + j) = -c.coeffs[j];
        }
        mat(i, t_col) = -c.rhs;
        if (c.rel != Relation::Eq) {
            mat(i, s++) = -1;
        }
        rhs[i] = c.rel == Relation::Gt ? 1 : 0;
    }
    mat(m, t_col) = 1;
    mat(m, s) = -1;
    rhs[m] = 1;
    const StandardResult res = feasible_standard_form(mat, rhs);
    if (const auto *v = std::get_if<StandardVertex>(&res)) {
        RatVector x(k);
        for (std::size_t j = 0; j < k; ++j) {
            x[j] = (v->z[j] - v->z[k + j]) / v->z[t_col];
        }
        return Feasible{std::move(x)};
    }
    const RatVector &y = std::get<StandardFarkas>(res).y;
    return Infeasible{RatVector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m))};
}

LpResult solve(const LinearSystem &sys)
{
    return sys.dim <= 4 ? solve_fourier_motzkin(sys) : solve_simplex(sys);
}

bool satisfies(const LinearSystem &sys, const RatVector &x)
{
    if (x.size() != sys.dim) {
        return false;
    }
    for (const auto &r : sys.rows) {
        const Rational v = dot(r.coeffs, x);
        const bool ok = r.rel == Relation::Ge ? v >= r.rhs : (r.rel == Relation::Gt ? v > r.rhs : v == r.rhs);
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool is_certificate(const LinearSystem &sys, const RatVector &y)
{
    if (y.size() != sys.rows.size()) {
        return false;
    }
    RatVector sum(sys.dim);
    Rational b;
    bool strict_used = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Constraint &r = sys.rows[i];
        if (r.rel != Relation::Eq && y[i] < 0) {
            return false;
        }
        for (std::size_t j = 0; j < sys.dim; ++j) {
            sum[j] += y[i] * r.coeffs[j];
        }
        b += y[i] * r.rhs;
        strict_used = strict_used || (r.rel == Relation::Gt && y[i] > 0);
    }
    for (const auto &v : sum) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return b > 0 || (b == 0 && strict_used);
}

bool verify(const LinearSystem &sys, const LpResult &result)
{
    if (const auto *f = std::get_if<Feasible>(&result)) {
        return satisfies(sys, f->point);
    }
    return is_certificate(sys, std::get<Infeasible>(result).multipliers);
}

ConeResult cone_membership(const std::vector<IntVector> &generators, const RatVector &target)
{
    const std::size_t d = target.size();
    LinearSystem sys{d, {}};
    for (const auto &g : generators) {
        if (g.size() != d) {
            throw Error(ErrorKind::ShapeMismatch, "cone generator length differs from the target");
        }
        sys.add(to_rational(g), Relation::Ge);
    }
    RatVector neg(d);
    for (std::size_t j = 0; j < d; ++j) {
        neg[j] = -target[j];
    }
    sys.add(neg, Relation::Gt);
    const LpResult res = solve(sys);
    if (const auto *f = std::get_if<Feasible>(&res)) {
        return ConeSeparator{clear_denominators(f->point)};
    }
    const RatVector &y = std::get<Infeasible>(res).multipliers;
    // The only strict row is the target row, and every rhs is 0, so its
    // multiplier is positive.
    const Rational scale = y.back().inverse();
    RatVector coeffs(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        coeffs[j] = y[j] * scale;
    }
    return ConeCombination{std::move(coeffs)};
}

} // namespace hyperloc
