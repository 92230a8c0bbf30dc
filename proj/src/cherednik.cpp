#include <hyperloc/cherednik.hpp>
#include <hyperloc/git_fan.hpp>

namespace hyperloc
{

void CherednikParams::validate() const
{
    if (m < 2) {
        throw Error(ErrorKind::BadM, "m must be at least 2");
    }
    if (h.size() != static_cast<std::size_t>(m)) {
        throw Error(ErrorKind::BadShape, "h must have exactly m entries");
    }
}

const Rational &CherednikParams::at(long i) const
{
    return h[static_cast<std::size_t>(((i % m) + m) % m)];
}

IntMatrix cyclic_quiver_matrix(long m)
{
    if (m < 2) {
        throw Error(ErrorKind::BadM, "m must be at least 2");
    }
    const auto d = static_cast<std::size_t>(m - 1);
    IntMatrix a(d, d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = 1;
        a(i, d) = -1;
    }
    return a;
}

RatVector chi_of_h(const CherednikParams &p)
{
    p.validate();
    RatVector chi;
    for (long i = 1; i < p.m; ++i) {
        chi.push_back(p.at(i) - p.at(0) + Rational(Integer(i - p.m), Integer(p.m)));
    }
    return chi;
}

ArrangementReport in_arrangement_C(const CherednikParams &p)
{
    p.validate();
    ArrangementReport r;
    for (long i = 1; i < p.m; ++i) {
        for (long j = 0; j <= p.m - i; ++j) {
            if (j % p.m == 0) {
                r.skipped.emplace_back(i, j);
                continue;
            }
            if ((Rational(j) + Rational(p.m) * (p.at(i + j) - p.at(i))).is_zero()) {
                r.satisfied.emplace_back(i, j);
            }
        }
    }
    r.member = !r.satisfied.empty();
    return r;
}

std::optional<long> simple_dim(const CherednikParams &p, long i)
{
    p.validate();
    std::optional<long> best;
    for (long j = 0; j < p.m; ++j) {
        const Rational c = Rational(p.m) * (p.at(i) - p.at(i + j));
        if (!c.is_integer() || c < Rational(1) || !c.num().fits_slong_p()) {
            continue;
        }
        const long v = c.num().get_si();
        if (v % p.m == j && (!best || v < *best)) {
            best = v;
        }
    }
    return best;
}

DeltaModule delta_action(const CherednikParams &p, long i, long truncation)
{
    p.validate();
    if (truncation < 1) {
        throw Error(ErrorKind::BadShape, "truncation must be at least 1");
    }
    DeltaModule dm{i, truncation, {}, std::nullopt};
    for (long r = 1; r <= truncation; ++r) {
        dm.y_coeffs.push_back(Rational(r) + Rational(p.m) * (p.at(i + r) - p.at(i)));
        if (!dm.brute_force_c && dm.y_coeffs.back().is_zero()) {
            dm.brute_force_c = r;
        }
    }
    return dm;
}

Rational dunkl_ym_eigenvalue(const CherednikParams &p, long r)
{
    p.validate();
    Rational prod = 1;
    for (long i = 1; i <= p.m; ++i) {
        prod *= Rational(r - p.m + i) + Rational(p.m) * p.at(i);
    }
    return prod;
}

namespace
{

struct GeneralizedMonomial {
    Rational coeff;
    RatVector exponents;
};

// d/dx_i of coeff * prod x^e.
void differentiate(GeneralizedMonomial &g, std::size_t i)
{
    g.coeff *= g.exponents[i];
    g.exponents[i] -= 1;
}

} // namespace

RadialCheck radial_parts_identity_check(const CherednikParams &p, long r_lo, long r_hi)
{
    p.validate();
    RadialCheck out;
    const Rational m(p.m);
    for (long r = r_lo; r <= r_hi; ++r) {
        GeneralizedMonomial g{1, {}};
        for (long i = 1; i <= p.m; ++i) {
            g.exponents.push_back(Rational(Integer(r), Integer(p.m)) + p.at(i) + Rational(Integer(i - p.m), Integer(p.m)));
        }
        const RatVector before = g.exponents;
        for (std::size_t i = 0; i < g.exponents.size(); ++i) {
            differentiate(g, i);
        }
        Rational scale = 1;
        for (long t = 0; t < p.m; ++t) {
            scale *= m;
        }
        bool ok = g.coeff * scale == dunkl_ym_eigenvalue(p, r);
        // The result is x^{r-m} times the same twist: every exponent drops by 1.
        for (std::size_t i = 0; i < before.size(); ++i) {
            ok = ok && g.exponents[i] == before[i] - Rational(1);
        }
        if (!ok) {
            out.ok = false;
            out.failing_r = r;
            return out;
        }
    }
    return out;
}

namespace
{

IntVector normalized_hyperplane(const RatVector &v)
{
    IntVector z = primitive_integer(v);
    for (std::size_t k = 1; k < z.size(); ++k) {
        if (z[k] != 0) {
            if (z[k] < 0) {
                for (auto &x : z) {
                    x = -x;
                }
            }
            break;
        }
    }
    return z;
}

} // namespace

std::set<IntVector> arrangement_hyperplanes(long m)
{
    if (m < 2) {
        throw Error(ErrorKind::BadM, "m must be at least 2");
    }
    std::set<IntVector> out;
    for (long i = 1; i < m; ++i) {
        for (long j = 1; j <= m - i; ++j) {
            RatVector v(static_cast<std::size_t>(m + 1));
            v[0] = j;
            v[static_cast<std::size_t>(1 + (i + j) % m)] += Rational(m);
            v[static_cast<std::size_t>(1 + i % m)] -= Rational(m);
            out.insert(normalized_hyperplane(v));
        }
    }
    return out;
}

std::set<IntVector> pulled_back_walls(long m)
{
    const WallArrangement walls = wall_hyperplanes(cyclic_quiver_matrix(m), FanSource::FanOnMomentFiber);
    std::set<IntVector> out;
    for (const auto &mu : walls.normals) {
        RatVector v(static_cast<std::size_t>(m + 1));
        for (long i = 1; i < m; ++i) {
            const Rational c(mu[static_cast<std::size_t>(i - 1)]);
            v[static_cast<std::size_t>(1 + i)] += c;
            v[1] -= c;
            v[0] += c * Rational(Integer(i - m), Integer(m));
        }
        out.insert(normalized_hyperplane(v));
    }
    return out;
}

LocalizationReport localization_verdict(const CherednikParams &p)
{
    LocalizationReport r;
    r.chi = chi_of_h(p);
    r.arrangement = in_arrangement_C(p);
    const WallArrangement walls = wall_hyperplanes(cyclic_quiver_matrix(p.m), FanSource::FanOnMomentFiber);
    const auto where = chamber_of(r.chi, walls);
    if (const auto *on = std::get_if<OnWall>(&where)) {
        r.on_wall = true;
        r.walls_hit = on->indices;
    }
    if (r.on_wall != r.arrangement.member) {
        throw Error(ErrorKind::InternalInconsistency, "h in the arrangement disagrees with chi on a wall");
    }
    r.equivalence_holds = !r.arrangement.member;
    return r;
}

} // namespace hyperloc
