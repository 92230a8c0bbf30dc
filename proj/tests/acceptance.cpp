// Runs every acceptance criterion and prints one PASS/FAIL line per item.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"

#include <hyperloc/cherednik.hpp>
#include <hyperloc/comparability.hpp>
#include <hyperloc/covectors.hpp>
#include <hyperloc/git_fan.hpp>
#include <hyperloc/lattice.hpp>
#include <hyperloc/weyl.hpp>

using namespace hyperloc;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (ok) {
            detail = why;
        } else if (detail.size() < 400) {
            detail += "; " + why;
        }
        ok = false;
    }
};

using W = WeylElement;

IntMatrix d1(long k, long n)
{
    IntMatrix a(1, static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        a(0, static_cast<std::size_t>(i)) = i < k ? 1 : -1;
    }
    return a;
}

std::string names(const QSet &q)
{
    std::string out = "{";
    for (const auto &s : q.members) {
        out += (out.size() > 1 ? "," : "") + to_string(s);
    }
    return out + "}";
}

Outcome criterion_d1_closed_form()
{
    Outcome o;
    std::vector<ParamScalar> chis;
    for (long c = -5; c <= 5; ++c) {
        chis.emplace_back(c);
    }
    for (const char *t : {"1/2", "-1/2", "3/2", "-3/2", "T", "2+T"}) {
        chis.push_back(ParamScalar::parse(t));
    }
    for (auto [k, n] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 3L}, {2L, 4L}}) {
        ParameterSpace ps(d1(k, n));
        for (const auto &chi : chis) {
            const QSet general = ps.q_set({chi});
            const QSet table = q_set_d1_closed_form(k, n, chi);
            if (general.partial || general.members != table.members) {
                o.fail("(k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ") chi=" + chi.to_string()
                       + ": q_set " + names(general) + " vs table " + names(table));
            }
        }
    }
    return o;
}

Outcome criterion_cyclic_walls()
{
    Outcome o;
    const WallArrangement w = wall_hyperplanes(cyclic_quiver_matrix(3), FanSource::FanOnMomentFiber);
    std::set<IntVector> got, expect;
    for (const auto &v : w.normals) {
        got.insert(v);
    }
    for (const auto &v : {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, -1}}) {
        expect.insert(v);
    }
    if (got != expect) {
        o.fail("wall normals differ");
    }
    const std::size_t count = chambers(w).size();
    if (count != 6) {
        o.fail("chamber count " + std::to_string(count));
    }
    return o;
}

Outcome criterion_unimodular()
{
    Outcome o;
    for (long m = 2; m <= 6; ++m) {
        const IntMatrix a = cyclic_quiver_matrix(m);
        if (!is_unimodular(a) || !minors_coprime(a) || !oracle::unimodular(oracle::to_i64(a))) {
            o.fail("m=" + std::to_string(m));
        }
    }
    return o;
}

std::vector<W> monomials(std::size_t n, unsigned deg)
{
    std::vector<W> out;
    std::vector<unsigned> e(2 * n, 0);
    while (true) {
        unsigned total = 0;
        for (auto v : e) {
            total += v;
        }
        if (total <= deg) {
            out.push_back(W::term(1, 0, {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)},
                                  {e.begin() + static_cast<std::ptrdiff_t>(n), e.end()}));
        }
        std::size_t i = 0;
        while (i < e.size() && e[i] == deg) {
            e[i++] = 0;
        }
        if (i == e.size()) {
            return out;
        }
        ++e[i];
    }
}

unsigned degree(const W &mono)
{
    const auto &m = mono.terms().begin()->first;
    unsigned total = 0;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        total += m.x[i] + m.xi[i];
    }
    return total;
}

W random_element(std::mt19937_64 &rng, std::size_t n, unsigned deg, bool with_hbar)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<unsigned> exp(0, deg);
    std::uniform_int_distribution<int> h(-2, 2);
    W out(n);
    for (int t = 0; t < 3; ++t) {
        std::vector<unsigned> x(n), xi(n);
        unsigned left = deg;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::min(left, exp(rng) / 2);
            left -= x[i];
            xi[i] = std::min(left, exp(rng) / 2);
            left -= xi[i];
        }
        out += W::term(Rational(coef(rng), 1 + t), with_hbar ? Rational(h(rng), 2) : Rational(0), x, xi);
    }
    return out;
}

Outcome criterion_star_product()
{
    Outcome o;
    const auto ms = monomials(2, 3);
    std::size_t triples = 0;
    for (const auto &a : ms) {
        for (const auto &b : ms) {
            for (const auto &c : ms) {
                if (degree(a) + degree(b) + degree(c) > 3) {
                    continue;
                }
                ++triples;
                if (star(star(a, b), c) != star(a, star(b, c))) {
                    o.fail("monomial triple " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
                }
            }
        }
    }
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const W a = random_element(rng, 3, 4, true);
        const W b = random_element(rng, 3, 4, true);
        const W c = random_element(rng, 3, 4, true);
        if (star(star(a, b), c) != star(a, star(b, c))) {
            o.fail("random triple " + std::to_string(t));
        }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const W expect = i == j ? W::hbar(n) * Rational(-1) : W(n);
                if (commutator(W::x(n, i), W::xi(n, j)) != expect) {
                    o.fail("[x_i, xi_j] wrong");
                }
            }
        }
    }
    for (int t = 0; t < 100; ++t) {
        const W f = random_element(rng, 2, 4, false);
        const W g = random_element(rng, 2, 4, false);
        const W diff = commutator(f, g) - multiply(W::hbar(2), poisson(f, g));
        for (const auto &[m, c] : diff.terms()) {
            if (m.hbar2 < 4) {
                o.fail("semiclassical pair " + std::to_string(t));
                break;
            }
        }
    }
    o.detail = o.ok ? std::to_string(triples) + " monomial triples, 200 random triples, 100 symbol pairs" : o.detail;
    return o;
}

Outcome criterion_moment_map()
{
    Outcome o;
    for (const auto &a : {IntMatrix::from_rows({{1, -1}}), cyclic_quiver_matrix(3)}) {
        for (const auto &f : monomials(a.cols(), 3)) {
            const IntVector w = t_weight(a, f.terms().begin()->first);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (commutator(mu_W(a, i), f) != f * Rational(w[i])) {
                    o.fail("[mu_W(t_" + std::to_string(i) + "), " + f.to_string() + "]");
                }
            }
        }
    }
    return o;
}

Outcome criterion_flatness()
{
    Outcome o;
    std::vector<IntMatrix> mats;
    for (long m = 2; m <= 4; ++m) {
        mats.push_back(cyclic_quiver_matrix(m));
    }
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 1 + t % 3;
        const std::size_t n = d + 1 + static_cast<std::size_t>(t) % (6 - d);
        mats.push_back(oracle::from_i64(oracle::random_unimodular(rng, d, n)));
    }
    for (const auto &a : mats) {
        const long d = static_cast<long>(a.rows()), n = static_cast<long>(a.cols());
        const MomentIdeal mi = moment_ideal(a);
        const auto &c = mi.certificate;
        if (!c.normal_form_verified || c.dim_fiber != 2 * n - d || c.dim_quotient != 2 * (n - d)) {
            o.fail("matrix " + std::to_string(d) + "x" + std::to_string(n));
        }
    }
    return o;
}

SignVector from_index(std::size_t code, std::size_t n)
{
    SignVector s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<int>(code % 3) - 1;
        code /= 3;
    }
    return s;
}

// Every sign vector in {+,0,-}^n tested one at a time for realizability.
// The integer box search below is a second, LP-free oracle for d <= 2.
std::set<std::string> covectors_by_filter(const IntMatrix &a)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        total *= 3;
    }
    std::set<std::string> out;
    for (std::size_t code = 0; code < total; ++code) {
        const SignVector s = from_index(code, a.cols());
        if (is_covector(a, s).realizable) {
            out.insert(to_string(s));
        }
    }
    return out;
}

std::set<std::string> box_covectors(const oracle::I64Matrix &a, long bound)
{
    const std::size_t d = a.size(), n = a[0].size();
    std::set<std::string> out;
    std::vector<long> lam(d, -bound);
    while (true) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) {
            long v = 0;
            for (std::size_t k = 0; k < d; ++k) {
                v += lam[k] * a[k][i];
            }
            s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
        }
        out.insert(s);
        std::size_t k = 0;
        while (k < d && lam[k] == bound) {
            lam[k++] = -bound;
        }
        if (k == d) {
            return out;
        }
        ++lam[k];
    }
}

Outcome criterion_covectors()
{
    Outcome o;
    std::vector<IntMatrix> mats = {IntMatrix::from_rows({{1, -1}}), IntMatrix::from_rows({{1, 1, -1}}),
                                   IntMatrix::from_rows({{2, -1, 1}, {0, 1, 3}})};
    for (long m = 2; m <= 6; ++m) {
        mats.push_back(cyclic_quiver_matrix(m));
    }
    std::mt19937_64 rng(7);
    while (mats.size() < 60) {
        const std::size_t t = mats.size();
        const std::size_t d = 1 + t % 3;
        const std::size_t n = d + 1 + (t / 3) % (6 - d);
        const auto m = oracle::random_matrix(rng, d, n, 2);
        const auto a = oracle::from_i64(m);
        if (!oracle::has_zero_column(m) && rank(a) == d) {
            mats.push_back(a);
        }
    }
    for (const auto &a : mats) {
        std::set<std::string> listed;
        for (const auto &c : enumerate_covectors(a)) {
            listed.insert(to_string(c.signs));
            for (std::size_t i = 0; i < a.cols(); ++i) {
                if (sgn(dot(c.witness, a.column(i))) != c.signs[i]) {
                    o.fail("bad witness for " + to_string(c.signs));
                }
            }
        }
        if (listed != covectors_by_filter(a)) {
            o.fail("3^n filter mismatch on a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
        }
        if (a.rows() <= 2 && listed != box_covectors(oracle::to_i64(a), 12)) {
            o.fail("integer box mismatch");
        }
    }
    o.detail = o.ok ? std::to_string(mats.size()) + " matrices" : o.detail;
    return o;
}

Outcome criterion_attachment()
{
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    int attached = 0;
    for (int checked = 0; checked < 300; ++checked) {
        const std::size_t d = 1 + checked % 2;
        const std::size_t n = d + 1 + static_cast<std::size_t>(checked / 2) % (4 - d);
        const auto m = oracle::random_unimodular(rng, d, n);
        const auto a = oracle::from_i64(m);
        const auto cvs = enumerate_covectors(a);
        const auto &lambda = cvs[static_cast<std::size_t>(rng() % cvs.size())].signs;
        Character chi(d);
        RatVector rat(d), tau(d);
        for (std::size_t r = 0; r < d; ++r) {
            const int k = kind(rng);
            rat[r] = k == 0 ? Rational(num(rng), den(rng)) : Rational(num(rng));
            tau[r] = k == 3 ? Rational(num(rng)) : Rational();
            chi[r] = ParamScalar(rat[r], tau[r]);
        }
        const auto res = decide_attached(a, lambda, chi);
        if (std::holds_alternative<Inconclusive>(res)) {
            o.fail("inconclusive on instance " + std::to_string(checked));
            continue;
        }
        const bool lib = std::holds_alternative<Attached>(res);
        if (lib && !is_attachment_witness(a, lambda, chi, std::get<Attached>(res).alpha)) {
            o.fail("invalid witness on instance " + std::to_string(checked));
        }
        if (lib != oracle::attached_brute(m, lambda, rat, tau, 25)) {
            o.fail("instance " + std::to_string(checked) + " lambda=" + to_string(lambda) + " chi=" + to_string(chi));
        }
        attached += lib ? 1 : 0;
    }
    o.detail = o.ok ? "300 instances, " + std::to_string(attached) + " attached" : o.detail;
    return o;
}

Outcome criterion_shifting_cone()
{
    Outcome o;
    struct Case {
        IntMatrix a;
        Character chi;
        RatVector witness;
    };
    const std::vector<Case> cases = {
        {IntMatrix::from_rows({{1, -1}}), parse_param_list("1/2"), {Rational(1)}},
        {cyclic_quiver_matrix(3), parse_param_list("1/2,1/3"), {Rational(3), Rational(1)}},
    };
    std::string reverse;
    for (const auto &c : cases) {
        ParameterSpace ps(c.a);
        const ShiftCone sc = ps.shifting_cone(c.chi, c.witness);
        if (sc.generators.empty() || rank(to_rational(IntMatrix::from_rows(sc.generators))) != c.a.rows()) {
            o.fail("cone not full-dimensional for chi=" + to_string(c.chi));
        }
        // Independent re-check of the arrow chi + q u -> chi.
        for (const auto &u : sc.generators) {
            for (long q = 1; q <= 3; ++q) {
                Character moved = c.chi;
                for (std::size_t r = 0; r < moved.size(); ++r) {
                    moved[r] = moved[r] + ParamScalar(Rational(u[r] * Integer(q)));
                }
                if (!ps.chi_arrow(moved, c.chi)) {
                    o.fail("generator " + to_string(u) + " q=" + std::to_string(q));
                }
            }
        }
        std::size_t rev = 0;
        for (bool b : sc.reverse_direction) {
            rev += b ? 1 : 0;
        }
        reverse += (reverse.empty() ? "" : ", ") + std::to_string(rev) + "/" + std::to_string(sc.generators.size());
    }
    o.detail = o.ok ? "chi + q u -> chi holds; reverse arrow holds for " + reverse + " generators" : o.detail;
    return o;
}

std::vector<CherednikParams> grid(long m, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-2 * m, 2 * m);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<CherednikParams> out;
    while (out.size() < count) {
        CherednikParams p{m, {}};
        for (long i = 0; i < m; ++i) {
            const long dd = den(rng) == 3 ? 2 * m : m;
            p.h.push_back(Rational(Integer(num(rng)), Integer(dd)));
        }
        out.push_back(std::move(p));
    }
    return out;
}

Outcome criterion_cherednik()
{
    Outcome o;
    int finite = 0;
    for (long m = 2; m <= 4; ++m) {
        for (const auto &p : grid(m, 200, static_cast<std::uint64_t>(m))) {
            for (long i = 0; i < m; ++i) {
                const auto exact = simple_dim(p, i);
                if (exact != delta_action(p, i, 64).brute_force_c) {
                    o.fail("simple_dim m=" + std::to_string(m) + " h=" + to_string(p.h));
                }
                finite += exact ? 1 : 0;
            }
            try {
                localization_verdict(p);
            } catch (const Error &e) {
                o.fail(std::string("localization_verdict: ") + e.what());
            }
        }
    }
    for (long m = 2; m <= 5; ++m) {
        for (const auto &p : grid(m, 20, 100 + static_cast<std::uint64_t>(m))) {
            if (!radial_parts_identity_check(p, 0, 12).ok) {
                o.fail("radial parts m=" + std::to_string(m) + " h=" + to_string(p.h));
            }
        }
    }
    for (long m = 2; m <= 3; ++m) {
        if (arrangement_hyperplanes(m) != pulled_back_walls(m)) {
            o.fail("wall correspondence m=" + std::to_string(m));
        }
    }
    o.detail = o.ok ? std::to_string(finite) + " finite c_i on the grids" : o.detail;
    return o;
}

Outcome criterion_preorder()
{
    Outcome o;
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> pick(-6, 6);
    int chains = 0;
    for (auto [k, n] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 3L}, {2L, 4L}}) {
        ParameterSpace ps(d1(k, n));
        for (int t = 0; t < 25; ++t) {
            const Character x{ParamScalar(pick(rng))}, y{ParamScalar(pick(rng))}, z{ParamScalar(pick(rng))};
            for (const auto *c : {&x, &y, &z}) {
                if (!ps.chi_arrow(*c, *c)) {
                    o.fail("reflexivity at " + to_string(*c));
                }
            }
            if (ps.chi_arrow(x, y) && ps.chi_arrow(y, z)) {
                ++chains;
                if (!ps.chi_arrow(x, z)) {
                    o.fail("transitivity " + to_string(x) + " -> " + to_string(y) + " -> " + to_string(z));
                }
            }
        }
        for (const char *t : {"1/2", "T", "2+T", "-3/2"}) {
            if (!ps.chi_arrow(parse_param_list(t), parse_param_list(t))) {
                o.fail(std::string("reflexivity at ") + t);
            }
        }
    }
    o.detail = o.ok ? "100 triples, " + std::to_string(chains) + " composable chains" : o.detail;
    return o;
}

struct Criterion {
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"d=1 closed form", 10, criterion_d1_closed_form},
        {"cyclic quiver walls", 1, criterion_cyclic_walls},
        {"cyclic quiver unimodular", 1, criterion_unimodular},
        {"star product", 5, criterion_star_product},
        {"quantized moment map", 2, criterion_moment_map},
        {"flatness certificate", 5, criterion_flatness},
        {"covector oracle", 30, criterion_covectors},
        {"attachment oracle", 60, criterion_attachment},
        {"shifting cone", 30, criterion_shifting_cone},
        {"cherednik", 10, criterion_cherednik},
        {"chi_arrow pre-order", 10, criterion_preorder},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.fail("took " + std::to_string(secs) + " s");
        }
        failures += o.ok ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.name << " [" << timing << "]";
        if (!o.detail.empty()) {
            std::cout << "  " << o.detail;
        }
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
