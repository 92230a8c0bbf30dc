#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"

#include <hyperloc/git_fan.hpp>

using namespace hyperloc;

namespace
{

IntMatrix cyclic3()
{
    return IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}});
}

std::set<IntVector> as_set(const WallArrangement &w)
{
    return {w.normals.begin(), w.normals.end()};
}

Integer gcd_of(const IntVector &v)
{
    Integer g = 0;
    for (const auto &x : v) {
        g = gcd(g, x);
    }
    return g;
}

// Unstable iff some integer lambda in the box has <lambda, delta> < 0 and
// <lambda, w> >= 0 on every supported weight.
bool box_unstable(const std::vector<std::vector<long>> &weights, const std::vector<long> &delta, long bound)
{
    const std::size_t d = delta.size();
    std::vector<long> lam(d, -bound);
    while (true) {
        long ld = 0;
        for (std::size_t k = 0; k < d; ++k) {
            ld += lam[k] * delta[k];
        }
        if (ld < 0) {
            bool ok = true;
            for (const auto &w : weights) {
                long v = 0;
                for (std::size_t k = 0; k < d; ++k) {
                    v += lam[k] * w[k];
                }
                ok = ok && v >= 0;
            }
            if (ok) {
                return true;
            }
        }
        std::size_t k = 0;
        while (k < d && lam[k] == bound) {
            lam[k++] = -bound;
        }
        if (k == d) {
            return false;
        }
        ++lam[k];
    }
}

} // namespace

TEST_CASE("wall examples")
{
    const auto w = wall_hyperplanes(cyclic3(), FanSource::FanOnMomentFiber);
    CHECK(w.normals == std::vector<IntVector>{{1, 0}, {0, 1}, {1, -1}});
    CHECK(chambers(w).size() == 6);

    const auto one = wall_hyperplanes(IntMatrix::from_rows({{1, -1}}), FanSource::FanOnMomentFiber);
    CHECK(one.normals == std::vector<IntVector>{{1}});
    CHECK(chambers(one).size() == 2);
    const auto same = wall_hyperplanes(IntMatrix::from_rows({{1, 1}}), FanSource::FanOnV);
    CHECK(same.normals == std::vector<IntVector>{{1}});
    CHECK(same.support_is_column_cone);
}

TEST_CASE("chamber_of examples")
{
    const auto w = wall_hyperplanes(cyclic3(), FanSource::FanOnMomentFiber);
    const auto c = chamber_of({1, 2}, w);
    REQUIRE(std::holds_alternative<Chamber>(c));
    CHECK(std::get<Chamber>(c).signs == SignVector{1, 1, -1});
    const auto on = chamber_of({1, 1}, w);
    REQUIRE(std::holds_alternative<OnWall>(on));
    CHECK(std::get<OnWall>(on).indices == std::vector<std::size_t>{2});
    const auto origin = chamber_of({0, 0}, w);
    REQUIRE(std::holds_alternative<OnWall>(origin));
    CHECK(std::get<OnWall>(origin).indices.size() == 3);
    CHECK_FALSE(is_generic({0, 0}, w));
    CHECK(is_generic({Rational(1, 3), Rational(-7, 2)}, w));
}

TEST_CASE("walls are invariant under column permutation and negation")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = d + 1 + trial % 3;
        auto m = oracle::random_matrix(rng, d, n, 3);
        if (oracle::has_zero_column(m)) {
            continue;
        }
        const auto base = as_set(wall_hyperplanes(oracle::from_i64(m), FanSource::FanOnMomentFiber));
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        oracle::I64Matrix p(d, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                p[i][j] = m[i][perm[j]] * ((j % 2) ? -1 : 1);
            }
        }
        CHECK(as_set(wall_hyperplanes(oracle::from_i64(p), FanSource::FanOnMomentFiber)) == base);
        for (const auto &nrm : base) {
            CHECK(gcd_of(nrm) == 1);
            CHECK(*std::find_if(nrm.begin(), nrm.end(), [](const Integer &x) { return x != 0; }) > 0);
        }
    }
}

TEST_CASE("chambers are cones")
{
    std::mt19937_64 rng(5);
    const auto w = wall_hyperplanes(IntMatrix::from_rows({{1, 0, 1, 2}, {0, 1, 1, -1}}), FanSource::FanOnMomentFiber);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int t = 0; t < 200; ++t) {
        const RatVector delta{Rational(c(rng), 1 + c(rng) * c(rng)), Rational(c(rng))};
        const Rational q(1 + t % 7, 1 + t % 4);
        const auto x = chamber_of(delta, w);
        const auto y = chamber_of({delta[0] * q, delta[1] * q}, w);
        CHECK(x.index() == y.index());
        if (const auto *cx = std::get_if<Chamber>(&x)) {
            CHECK(cx->signs == std::get<Chamber>(y).signs);
        }
    }
}

TEST_CASE("effective examples")
{
    CHECK(effective(IntMatrix::from_rows({{1, -1}}), {5}));
    CHECK_FALSE(effective(IntMatrix::from_rows({{1, 1}}), {-1}));
    CHECK(effective(cyclic3(), {0, 0}));
    CHECK(effective(cyclic3(), {-1, 3}));
    CHECK_FALSE(effective(IntMatrix::from_rows({{1, 0}, {0, 1}}), {1, -1}));
}

TEST_CASE("semistable_point examples")
{
    const auto a = IntMatrix::from_rows({{1, -1}});
    const CotangentPoint p1{{1, 0}, {0, 0}};
    const auto r1 = semistable_point(a, p1, {1});
    REQUIRE(std::holds_alternative<Semistable>(r1));
    CHECK(std::get<Semistable>(r1).coeffs == RatVector{1});
    CHECK(verify_stability(a, p1, {1}, r1));

    const CotangentPoint p2{{0, 1}, {0, 0}};
    const auto r2 = semistable_point(a, p2, {1});
    REQUIRE(std::holds_alternative<Unstable>(r2));
    CHECK(std::get<Unstable>(r2).lambda == IntVector{-1});
    CHECK(verify_stability(a, p2, {1}, r2));

    const CotangentPoint zero{{0, 0, 0}, {0, 0, 0}};
    CHECK(std::holds_alternative<Unstable>(semistable_point(cyclic3(), zero, {1, 2})));
}

TEST_CASE("semistability agrees with the lambda box oracle")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coord(-2, 2);
    std::bernoulli_distribution on(0.5);
    int checked = 0;
    while (checked < 500) {
        const std::size_t d = 1 + checked % 2;
        const std::size_t n = d + 1 + checked % 3;
        const auto m = oracle::random_matrix(rng, d, n, 3);
        if (oracle::has_zero_column(m)) {
            continue;
        }
        const auto a = oracle::from_i64(m);
        CotangentPoint p{RatVector(n), RatVector(n)};
        std::vector<std::vector<long>> weights;
        for (std::size_t i = 0; i < n; ++i) {
            if (on(rng)) {
                p.x[i] = 1 + checked % 3;
                std::vector<long> w;
                for (std::size_t k = 0; k < d; ++k) {
                    w.push_back(m[k][i]);
                }
                weights.push_back(w);
            }
            if (on(rng)) {
                p.y[i] = Rational(-1, 2);
                std::vector<long> w;
                for (std::size_t k = 0; k < d; ++k) {
                    w.push_back(-m[k][i]);
                }
                weights.push_back(w);
            }
        }
        std::vector<long> delta(d);
        RatVector rdelta(d);
        for (std::size_t k = 0; k < d; ++k) {
            delta[k] = coord(rng);
            rdelta[k] = delta[k];
        }
        const auto r = semistable_point(a, p, rdelta);
        CHECK(verify_stability(a, p, rdelta, r));
        CHECK(std::holds_alternative<Unstable>(r) == box_unstable(weights, delta, 20));
        ++checked;
    }
}

TEST_CASE("fan equality")
{
    std::mt19937_64 rng(99);
    const auto a = IntMatrix::from_rows({{1, -1}});
    const auto rep = fan_equality_check(a, {{1}, {-1}}, 50, rng);
    CHECK(rep.checked == 100);
    CHECK(rep.counterexamples.empty());

    const auto rep3 = fan_equality_check(cyclic3(), {{1, 2}, {-1, 1}, {2, -3}}, 60, rng);
    CHECK(rep3.counterexamples.empty());

    const CotangentPoint full{{1, 1}, {1, 1}};
    CHECK(std::holds_alternative<Semistable>(semistable_point(a, full, {3})));
    CHECK(semistable_projection(a, full, {3}).has_value());
    const CotangentPoint zero{{0, 0}, {0, 0}};
    CHECK_FALSE(semistable_projection(a, zero, {1}).has_value());

    // Projecting onto the whole y-support is not enough: here only I = {}
    // keeps the x_1 weight that produces delta.
    const CotangentPoint p{{1, 0}, {1, 0}};
    CHECK(std::holds_alternative<Semistable>(semistable_point(a, p, {1})));
    CHECK(std::holds_alternative<Unstable>(semistable_point(a, extended_core_projection(p, {0}), {1})));
    CHECK(*semistable_projection(a, p, {1}) == std::vector<std::size_t>{});
}
