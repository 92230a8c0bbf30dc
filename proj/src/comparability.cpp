#include <algorithm>
#include <set>

#include <hyperloc/comparability.hpp>
#include <hyperloc/git_fan.hpp>
#include <hyperloc/lp.hpp>
#include <hyperloc/parallel.hpp>

namespace hyperloc
{

std::string to_string(const Character &chi)
{
    std::string s;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        s += (i ? "," : "") + chi[i].to_string();
    }
    return s;
}

namespace
{

struct Supports {
    std::vector<std::size_t> pos, neg, zero;
};

Supports supports(const SignVector &s)
{
    Supports out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        (s[i] > 0 ? out.pos : (s[i] < 0 ? out.neg : out.zero)).push_back(i);
    }
    return out;
}

ParamVector combine(const IntMatrix &a, const ParamVector &alpha)
{
    ParamVector out(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
            out[r] += alpha[j] * ParamScalar(Rational(a(r, j)));
        }
    }
    return out;
}

// Some alpha_Z with A_Z alpha_Z = target and no integer entry, as a full
// length-n vector supported on Z.
std::optional<ParamVector> lift(const IntMatrix &a, const std::vector<std::size_t> &z, const ParamVector &target,
                                std::string &why)
{
    const auto base = rational_span_witness(a, target, z);
    if (!base) {
        why = "chi minus the integer part is not in the span of the zero-set columns";
        return std::nullopt;
    }
    if (z.empty()) {
        return base;
    }
    const auto kernel = nullspace(to_rational(a.select_columns(z)));
    std::vector<bool> constant(z.size(), true);
    for (const auto &k : kernel) {
        for (std::size_t i = 0; i < z.size(); ++i) {
            constant[i] = constant[i] && k[i].is_zero();
        }
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (constant[i] && (*base)[z[i]].is_integer()) {
            why = "coordinate " + std::to_string(z[i]) + " is forced to the integer " + (*base)[z[i]].to_string();
            return std::nullopt;
        }
    }
    // kappa = sum_j t^j k_j vanishes on a non-constant coordinate for
    // finitely many t only.
    RatVector kappa(z.size());
    for (long t = 1;; ++t) {
        std::fill(kappa.begin(), kappa.end(), Rational());
        Rational power = 1;
        for (const auto &k : kernel) {
            for (std::size_t i = 0; i < z.size(); ++i) {
                kappa[i] += power * k[i];
            }
            power *= t;
        }
        bool ok = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            ok = ok && (constant[i] || !kappa[i].is_zero());
        }
        if (ok) {
            break;
        }
    }
    // Each coordinate is an integer for finitely many q >= 2 only.
    for (long q = 2;; ++q) {
        ParamVector alpha = *base;
        bool ok = true;
        for (std::size_t i = 0; i < z.size() && ok; ++i) {
            alpha[z[i]] += ParamScalar(kappa[i] / Rational(q));
            ok = !alpha[z[i]].is_integer();
        }
        if (ok) {
            return alpha;
        }
    }
}

IntMatrix transpose_columns(const IntMatrix &a, const std::vector<std::size_t> &cols)
{
    return a.select_columns(cols).transpose();
}

class AttachmentSolver
{
public:
    AttachmentSolver(const IntMatrix &a, bool unimodular, const SignVector &lambda, const Character &chi)
        : m_a(a), m_unimodular(unimodular), m_lambda(lambda), m_chi(chi), m_s(supports(lambda))
    {
    }

    AttachResult run(long radius)
    {
        const std::size_t d = m_a.rows();
        // (a) integral coordinates carry no T-part.
        const RatVector tau = tau_part(m_chi);
        const RatMatrix az = to_rational(m_a.select_columns(m_s.zero));
        if (!m_s.zero.empty() ? !solve(az, tau).has_value()
                              : std::any_of(tau.begin(), tau.end(), [](const Rational &x) { return !x.is_zero(); })) {
            return NotAttached{"T-part of chi is not in the span of the zero-set columns"};
        }
        // (b) an integral v0 with chi - v0 in span(A_Z).
        m_k = integer_kernel(transpose_columns(m_a, m_s.zero));
        const RatVector rat = pr(m_chi);
        ParamVector c;
        for (std::size_t j = 0; j < m_k.cols(); ++j) {
            Rational x;
            for (std::size_t r = 0; r < d; ++r) {
                x += Rational(m_k(r, j)) * rat[r];
            }
            if (!x.is_integer()) {
                return NotAttached{"chi is not congruent to a lattice point modulo the zero-set span"};
            }
            c.push_back(x);
        }
        IntVector v0(d);
        if (m_k.cols() > 0) {
            const auto w = integer_span_witness(m_k.transpose(), c, all_indices(d));
            if (!w) {
                throw Error(ErrorKind::InternalInconsistency, "saturated kernel lattice is not onto");
            }
            v0 = *w;
        }
        std::string why;
        if (m_unimodular && !lift(m_a, m_s.zero, shifted(v0), why)) {
            return NotAttached{why};
        }
        // (d) integer point of {gamma_P >= 0, gamma_N <= -1, gamma_Z free}.
        std::vector<IntVector> cols;
        for (auto i : m_s.pos) {
            cols.push_back(m_a.column(i));
        }
        for (auto i : m_s.neg) {
            cols.push_back(negate(m_a.column(i)));
        }
        for (auto i : m_s.zero) {
            cols.push_back(m_a.column(i));
        }
        for (auto i : m_s.zero) {
            cols.push_back(negate(m_a.column(i)));
        }
        RatVector b = to_rational(v0);
        for (auto i : m_s.neg) {
            for (std::size_t r = 0; r < d; ++r) {
                b[r] += Rational(m_a(r, i));
            }
        }
        const RatMatrix m = to_rational(IntMatrix::from_columns(cols, d));
        const StandardResult lp = feasible_standard_form(m, b);
        if (std::holds_alternative<StandardFarkas>(lp)) {
            return NotAttached{"no integral part with the required signs (infeasible relaxation)"};
        }
        if (m_unimodular) {
            const RatVector &z = std::get<StandardVertex>(lp).z;
            IntVector gamma(m_a.cols());
            std::size_t at = 0;
            for (auto i : m_s.pos) {
                gamma[i] = integral(z[at++]);
            }
            for (auto i : m_s.neg) {
                gamma[i] = -1 - integral(z[at++]);
            }
            auto found = try_gamma(gamma, why);
            if (!found) {
                throw Error(ErrorKind::InternalInconsistency, "lift failed after a successful base-point lift: " + why);
            }
            return Attached{std::move(*found)};
        }
        return search(radius);
    }

private:
    static std::vector<std::size_t> all_indices(std::size_t n)
    {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = i;
        }
        return v;
    }

    static IntVector negate(IntVector v)
    {
        for (auto &x : v) {
            x = -x;
        }
        return v;
    }

    static Integer integral(const Rational &x)
    {
        if (!x.is_integer()) {
            throw Error(ErrorKind::InternalInconsistency, "non-integral vertex for a unimodular matrix");
        }
        return x.num();
    }

    ParamVector shifted(const IntVector &v) const
    {
        ParamVector t = m_chi;
        for (std::size_t r = 0; r < t.size(); ++r) {
            t[r] -= ParamScalar(Rational(v[r]));
        }
        return t;
    }

    std::optional<ParamVector> try_gamma(const IntVector &gamma, std::string &why) const
    {
        const IntVector v = m_a.apply(gamma);
        auto alpha = lift(m_a, m_s.zero, shifted(v), why);
        if (!alpha) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            if (m_lambda[i] != 0) {
                (*alpha)[i] = ParamScalar(Rational(gamma[i]));
            }
        }
        return alpha;
    }

    // Non-unimodular fallback: gamma on P and N within the box.
    AttachResult search(long radius)
    {
        std::vector<std::size_t> free;
        free.insert(free.end(), m_s.pos.begin(), m_s.pos.end());
        free.insert(free.end(), m_s.neg.begin(), m_s.neg.end());
        IntVector gamma(m_a.cols());
        std::vector<long> lo, hi;
        for (auto i : free) {
            lo.push_back(m_lambda[i] > 0 ? 0 : -radius);
            hi.push_back(m_lambda[i] > 0 ? radius : -1);
        }
        std::vector<long> cur = lo;
        std::string why;
        while (true) {
            for (std::size_t t = 0; t < free.size(); ++t) {
                gamma[free[t]] = cur[t];
            }
            if (in_zero_span(gamma)) {
                if (auto alpha = try_gamma(gamma, why)) {
                    return Attached{std::move(*alpha)};
                }
            }
            std::size_t t = 0;
            while (t < free.size() && cur[t] == hi[t]) {
                cur[t] = lo[t];
                ++t;
            }
            if (t == free.size()) {
                break;
            }
            ++cur[t];
        }
        if (free.empty()) {
            return NotAttached{why.empty() ? "chi is not reachable" : why};
        }
        return Inconclusive{radius};
    }

    bool in_zero_span(const IntVector &gamma) const
    {
        const IntVector v = m_a.apply(gamma);
        const RatVector rat = pr(m_chi);
        for (std::size_t j = 0; j < m_k.cols(); ++j) {
            Rational x;
            for (std::size_t r = 0; r < v.size(); ++r) {
                x += Rational(m_k(r, j)) * (rat[r] - Rational(v[r]));
            }
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    const IntMatrix &m_a;
    bool m_unimodular;
    const SignVector &m_lambda;
    const Character &m_chi;
    Supports m_s;
    IntMatrix m_k;
};

AttachResult decide_impl(const IntMatrix &a, bool unimodular, const SignVector &lambda, const Character &chi,
                         long radius)
{
    if (chi.size() != a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "chi has the wrong dimension");
    }
    AttachmentSolver solver(a, unimodular, lambda, chi);
    AttachResult r = solver.run(radius);
    if (const auto *at = std::get_if<Attached>(&r)) {
        if (!is_attachment_witness(a, lambda, chi, at->alpha)) {
            throw Error(ErrorKind::InternalInconsistency, "attachment witness failed validation");
        }
    }
    return r;
}

} // namespace

AttachResult decide_attached(const IntMatrix &a, const SignVector &lambda, const Character &chi, long radius)
{
    if (!is_covector(a, lambda).realizable) {
        throw Error(ErrorKind::NotACovector, to_string(lambda) + " is not a covector");
    }
    return decide_impl(a, is_unimodular(a), lambda, chi, radius);
}

bool is_attachment_witness(const IntMatrix &a, const SignVector &lambda, const Character &chi,
                           const ParamVector &alpha)
{
    if (alpha.size() != a.cols() || lambda.size() != a.cols() || combine(a, alpha) != chi) {
        return false;
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const bool integer = alpha[i].is_integer();
        if (lambda[i] > 0 && !(integer && alpha[i].rat().sign() >= 0)) {
            return false;
        }
        if (lambda[i] < 0 && !(integer && alpha[i].rat().sign() < 0)) {
            return false;
        }
        if (lambda[i] == 0 && integer) {
            return false;
        }
    }
    return true;
}

bool QSet::contains(const SignVector &s) const
{
    return std::binary_search(members.begin(), members.end(), s);
}

bool QSet::subset_of(const QSet &other) const
{
    return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

QSet q_set_d1_closed_form(long k, long n, const ParamScalar &chi)
{
    if (n < 2 || k < 1 || k > n - 1) {
        throw Error(ErrorKind::BadShape, "closed form needs 1 <= k <= n-1");
    }
    SignVector zero(static_cast<std::size_t>(n), 0);
    SignVector plus, minus;
    for (long i = 0; i < n; ++i) {
        plus.push_back(i < k ? 1 : -1);
        minus.push_back(i < k ? -1 : 1);
    }
    QSet q;
    q.members.push_back(zero);
    if (chi.is_integer()) {
        const Rational &c = chi.rat();
        if (c >= Rational(n - k)) {
            q.members.push_back(plus);
        } else if (c <= Rational(k - n)) {
            q.members.push_back(minus);
        }
    }
    std::sort(q.members.begin(), q.members.end());
    return q;
}

ParameterSpace::ParameterSpace(IntMatrix a) : m_a(std::move(a))
{
    const ActionMatrix checked(m_a);
    m_unimodular = checked.unimodular();
    m_covectors = enumerate_covectors(m_a);
}

void ParameterSpace::require_unimodular() const
{
    if (!m_unimodular) {
        throw Error(ErrorKind::NotUnimodular, "the action matrix is not unimodular");
    }
}

AttachResult ParameterSpace::decide(const SignVector &lambda, const Character &chi) const
{
    if (!is_covector(m_a, lambda).realizable) {
        throw Error(ErrorKind::NotACovector, to_string(lambda) + " is not a covector");
    }
    return decide_impl(m_a, m_unimodular, lambda, chi, m_radius);
}

const QSet &ParameterSpace::q_set(const Character &chi)
{
    const std::string key = to_string(chi);
    if (auto it = m_memo.find(key); it != m_memo.end()) {
        return it->second;
    }
    std::vector<AttachResult> results(m_covectors.size());
    parallel_for(m_covectors.size(), m_jobs, [&](std::size_t i) {
        results[i] = decide_impl(m_a, m_unimodular, m_covectors[i].signs, chi, m_radius);
    });
    QSet q;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SignVector &s = m_covectors[i].signs;
        if (const auto *at = std::get_if<Attached>(&results[i])) {
            q.members.push_back(s);
            q.witnesses.emplace(hyperloc::to_string(s), at->alpha);
        } else if (std::holds_alternative<Inconclusive>(results[i])) {
            q.partial = true;
            q.inconclusive.push_back(s);
        }
    }
    return m_memo.emplace(key, std::move(q)).first->second;
}

bool ParameterSpace::chi_arrow(const Character &chi, const Character &chi2)
{
    require_unimodular();
    if (chi.size() != m_a.rows() || chi2.size() != m_a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "characters have the wrong dimension");
    }
    const QSet &q1 = q_set(chi);
    const QSet &q2 = q_set(chi2);
    if (q1.partial || q2.partial) {
        throw Error(ErrorKind::PartialQSet, "a Q set is only partially known");
    }
    for (std::size_t r = 0; r < chi.size(); ++r) {
        if (!(chi[r] - chi2[r]).is_integer()) {
            return false;
        }
    }
    return q2.subset_of(q1);
}

namespace
{

Character plus_lattice(const Character &chi, const IntVector &theta)
{
    Character out = chi;
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] += ParamScalar(Rational(theta[r]));
    }
    return out;
}

bool strictly_inside(const QSet &small, const QSet &big)
{
    return small.subset_of(big) && small.members.size() < big.members.size();
}

} // namespace

MaximalityResult ParameterSpace::is_maximal(const Character &chi, long radius)
{
    require_unimodular();
    const QSet base = q_set(chi);
    if (base.partial) {
        throw Error(ErrorKind::PartialQSet, "Q set of chi is only partially known");
    }
    if (m_a.rows() == 1) {
        // Columns are +-1, with k of them +1. The two nonzero covectors need
        // chi >= n-k and chi <= -k respectively, so they never occur together
        // and a Q set other than {0} cannot be strictly enlarged. Non-integer
        // chi only ever has Q = {0}.
        if (!chi[0].is_integer() || base.members.size() > 1) {
            return Maximal{};
        }
        long minus = 0;
        for (std::size_t j = 0; j < m_a.cols(); ++j) {
            minus += m_a(0, j) < 0 ? 1 : 0;
        }
        const IntVector theta{Integer(minus) - chi[0].rat().num()};
        if (!strictly_inside(base, q_set(plus_lattice(chi, theta)))) {
            throw Error(ErrorKind::InternalInconsistency, "d = 1 maximality shift did not enlarge Q");
        }
        return NotMaximal{theta};
    }
    const std::size_t d = m_a.rows();
    for (long shell = 1; shell <= radius; ++shell) {
        std::vector<long> cur(d, -shell);
        while (true) {
            const long norm = std::abs(*std::max_element(cur.begin(), cur.end(), [](long x, long y) {
                return std::abs(x) < std::abs(y);
            }));
            if (norm == shell) {
                const IntVector theta(cur.begin(), cur.end());
                const QSet &shifted = q_set(plus_lattice(chi, theta));
                if (!shifted.partial && strictly_inside(base, shifted)) {
                    return NotMaximal{theta};
                }
            }
            std::size_t t = 0;
            while (t < d && cur[t] == shell) {
                cur[t++] = -shell;
            }
            if (t == d) {
                break;
            }
            ++cur[t];
        }
    }
    return UnknownWithin{radius};
}

ShiftCone ParameterSpace::shifting_cone(const Character &chi, const RatVector &chamber_witness)
{
    require_unimodular();
    const std::size_t d = m_a.rows();
    const std::size_t n = m_a.cols();
    if (chi.size() != d || chamber_witness.size() != d) {
        throw Error(ErrorKind::ShapeMismatch, "characters have the wrong dimension");
    }
    const WallArrangement walls = wall_hyperplanes(m_a, FanSource::FanOnMomentFiber);
    const auto where = chamber_of(chamber_witness, walls);
    if (!std::holds_alternative<Chamber>(where)) {
        throw Error(ErrorKind::NotInChamber, "the chamber witness lies on a wall");
    }
    ShiftCone sc;
    sc.chamber = std::get<Chamber>(where).signs;
    for (std::size_t i = 0; i < walls.normals.size(); ++i) {
        IntVector mu = walls.normals[i];
        if (sc.chamber[i] < 0) {
            for (auto &x : mu) {
                x = -x;
            }
        }
        sc.normals.push_back(std::move(mu));
    }
    const RatVector prchi = pr(chi);
    RatVector mu_chi;
    for (const auto &mu : sc.normals) {
        mu_chi.push_back(dot(to_rational(mu), prchi));
        if (mu_chi.back().sign() <= 0) {
            throw Error(ErrorKind::NotInChamber, "pr(chi) is not in the open chamber");
        }
    }
    const QSet q = q_set(chi);
    if (q.partial) {
        throw Error(ErrorKind::PartialQSet, "Q set of chi is only partially known");
    }

    // N0 clears the denominators of the rational parts of all witnesses.
    sc.n0 = 1;
    for (const auto &[key, alpha] : q.witnesses) {
        for (const auto &x : alpha) {
            sc.n0 = lcm(sc.n0, x.rat().den());
        }
    }
    sc.delta = IntVector(d);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < d; ++r) {
            sc.delta[r] += m_a(r, j);
        }
    }
    std::vector<Integer> max_pair(sc.normals.size());
    std::vector<Integer> abs_sum(sc.normals.size());
    for (std::size_t i = 0; i < sc.normals.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Integer v = dot(sc.normals[i], m_a.column(j));
            if (v < 0) {
                v = -v;
            }
            max_pair[i] = std::max(max_pair[i], v);
            abs_sum[i] += v;
        }
    }
    const RatVector delta_q = to_rational(sc.delta);
    // Smallest multiple of N0 such that (N1/d) <mu_i, pr chi> beats every
    // |<mu_i, a_j>|, the shifted witnesses have no integer entry of absolute
    // value 1, and N1 pr(chi) + delta is inside C.
    for (Integer mult = 1;; ++mult) {
        const Integer n1 = mult * sc.n0;
        bool ok = true;
        for (std::size_t i = 0; i < sc.normals.size() && ok; ++i) {
            ok = Rational(n1) * mu_chi[i] / Rational(Integer(d)) > Rational(max_pair[i])
                 && Rational(n1) * mu_chi[i] + dot(to_rational(sc.normals[i]), delta_q) > 0;
        }
        for (auto it = q.witnesses.begin(); it != q.witnesses.end() && ok; ++it) {
            for (const auto &x : it->second) {
                const ParamScalar shifted = x + ParamScalar(Rational(n1) * x.rat());
                ok = ok && !(shifted.is_integer() && shifted.rat().abs() == 1);
            }
        }
        if (ok) {
            sc.n1 = n1;
            break;
        }
    }
    // Largest box [-c, c]^n with <mu_i, N1 pr chi + delta + A eps> > 0 is
    // c < b_i / s_i; take half of the supremum, capped below 1.
    RatVector center(d);
    for (std::size_t r = 0; r < d; ++r) {
        center[r] = Rational(sc.n1) * prchi[r] + delta_q[r];
    }
    Rational c = 1;
    for (std::size_t i = 0; i < sc.normals.size(); ++i) {
        if (abs_sum[i] != 0) {
            c = std::min(c, dot(to_rational(sc.normals[i]), center) / Rational(abs_sum[i]));
        }
    }
    sc.box_constant = c / Rational(2);
    sc.p = sc.box_constant.den();

    std::set<IntVector> gens;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RatVector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = (mask >> j) & 1 ? sc.box_constant : -sc.box_constant;
        }
        IntVector u(d);
        for (std::size_t r = 0; r < d; ++r) {
            Rational x = center[r];
            for (std::size_t j = 0; j < n; ++j) {
                x += Rational(m_a(r, j)) * v[j];
            }
            x *= Rational(sc.p);
            if (!x.is_integer()) {
                throw Error(ErrorKind::InternalInconsistency, "shift generator is not integral");
            }
            u[r] = x.num();
        }
        gens.insert(std::move(u));
    }
    sc.generators.assign(gens.begin(), gens.end());

    std::vector<RatVector> rows;
    for (const auto &u : sc.generators) {
        rows.push_back(to_rational(u));
        const auto cu = chamber_of(to_rational(u), walls);
        if (!std::holds_alternative<Chamber>(cu) || std::get<Chamber>(cu).signs != sc.chamber) {
            throw Error(ErrorKind::ValidationFailed, "generator " + to_string(u) + " is not in the chamber");
        }
        bool reverse = true;
        for (long qq = 1; qq <= 3; ++qq) {
            IntVector step = u;
            for (auto &x : step) {
                x *= qq;
            }
            const Character moved = plus_lattice(chi, step);
            if (!chi_arrow(moved, chi)) {
                throw Error(ErrorKind::ValidationFailed,
                            "generator " + to_string(u) + " fails chi + " + std::to_string(qq) + "u -> chi");
            }
            reverse = reverse && chi_arrow(chi, moved);
        }
        sc.reverse_direction.push_back(reverse);
    }
    if (rank(RatMatrix::from_rows(rows, d)) != d) {
        throw Error(ErrorKind::ValidationFailed, "generators do not span a full-dimensional cone");
    }
    return sc;
}

QSet q_set(const IntMatrix &a, const Character &chi)
{
    ParameterSpace ps(a);
    return ps.q_set(chi);
}

bool chi_arrow(const IntMatrix &a, const Character &chi, const Character &chi2)
{
    ParameterSpace ps(a);
    return ps.chi_arrow(chi, chi2);
}

MaximalityResult is_maximal(const IntMatrix &a, const Character &chi, long radius)
{
    ParameterSpace ps(a);
    return ps.is_maximal(chi, radius);
}

ShiftCone shifting_cone(const IntMatrix &a, const Character &chi, const RatVector &chamber_witness)
{
    ParameterSpace ps(a);
    return ps.shifting_cone(chi, chamber_witness);
}

} // namespace hyperloc
