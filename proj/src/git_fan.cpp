#include <algorithm>
#include <set>

#include <hyperloc/git_fan.hpp>
#include <hyperloc/lattice.hpp>

namespace hyperloc
{

namespace
{

std::size_t nonzeros(const IntVector &v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer &x) { return x != 0; }));
}

IntVector sign_normalized(IntVector v)
{
    for (const auto &x : v) {
        if (x != 0) {
            if (x < 0) {
                for (auto &y : v) {
                    y = -y;
                }
            }
            break;
        }
    }
    return v;
}

RatVector dot_all(const std::vector<IntVector> &normals, const RatVector &v)
{
    RatVector out;
    for (const auto &n : normals) {
        out.push_back(dot(to_rational(n), v));
    }
    return out;
}

} // namespace

WallArrangement wall_hyperplanes(const IntMatrix &a, FanSource source)
{
    const std::size_t d = a.rows();
    std::set<IntVector> unique;
    for_each_combination(a.cols(), d - 1, [&](const std::vector<std::size_t> &j) {
        std::vector<RatVector> kernel;
        if (j.empty()) {
            for (std::size_t i = 0; i < d; ++i) {
                RatVector e(d);
                e[i] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            kernel = nullspace(to_rational(a.select_columns(j).transpose()));
        }
        if (kernel.size() == 1) {
            unique.insert(sign_normalized(primitive_integer(kernel.front())));
        }
        return true;
    });
    WallArrangement w;
    w.normals.assign(unique.begin(), unique.end());
    std::sort(w.normals.begin(), w.normals.end(), [](const IntVector &x, const IntVector &y) {
        const auto nx = nonzeros(x), ny = nonzeros(y);
        return nx != ny ? nx < ny : y < x;
    });
    w.source = source;
    w.support_is_column_cone = source == FanSource::FanOnV;
    w.dim = d;
    return w;
}

ChamberResult chamber_of(const RatVector &delta, const WallArrangement &walls)
{
    if (delta.size() != walls.dim) {
        throw Error(ErrorKind::ShapeMismatch, "delta has the wrong dimension");
    }
    const RatVector pairings = dot_all(walls.normals, delta);
    OnWall on;
    SignVector s;
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        const int sg = pairings[i].sign();
        if (sg == 0) {
            on.indices.push_back(i);
        }
        s.push_back(sg);
    }
    if (!on.indices.empty()) {
        return on;
    }
    return Chamber{std::move(s), delta};
}

bool is_generic(const RatVector &delta, const WallArrangement &walls)
{
    return std::holds_alternative<Chamber>(chamber_of(delta, walls));
}

std::vector<Chamber> chambers(const WallArrangement &walls)
{
    std::vector<RatVector> normals;
    for (const auto &n : walls.normals) {
        normals.push_back(to_rational(n));
    }
    std::vector<Chamber> out;
    for (auto &r : enumerate_regions(normals, walls.dim)) {
        out.push_back(Chamber{std::move(r.signs), std::move(r.point)});
    }
    std::sort(out.begin(), out.end(), [](const Chamber &x, const Chamber &y) { return x.signs > y.signs; });
    return out;
}

bool effective(const IntMatrix &a, const RatVector &delta)
{
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        gens.push_back(a.column(i));
    }
    return std::holds_alternative<ConeCombination>(cone_membership(gens, delta));
}

namespace
{

std::vector<IntVector> supported_weights(const IntMatrix &a, const CotangentPoint &p)
{
    if (p.x.size() != a.cols() || p.y.size() != a.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "point coordinates must have length n");
    }
    std::vector<IntVector> w;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        if (!p.x[i].is_zero()) {
            w.push_back(a.column(i));
        }
    }
    for (std::size_t i = 0; i < a.cols(); ++i) {
        if (!p.y[i].is_zero()) {
            IntVector v = a.column(i);
            for (auto &e : v) {
                e = -e;
            }
            w.push_back(std::move(v));
        }
    }
    return w;
}

} // namespace

StabilityResult semistable_point(const IntMatrix &a, const CotangentPoint &p, const RatVector &delta)
{
    if (delta.size() != a.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "delta has the wrong dimension");
    }
    auto weights = supported_weights(a, p);
    const ConeResult r = cone_membership(weights, delta);
    if (const auto *c = std::get_if<ConeCombination>(&r)) {
        return Semistable{std::move(weights), c->coeffs};
    }
    return Unstable{std::move(weights), std::get<ConeSeparator>(r).lambda};
}

bool verify_stability(const IntMatrix &a, const CotangentPoint &p, const RatVector &delta,
                      const StabilityResult &r)
{
    const auto weights = supported_weights(a, p);
    if (const auto *s = std::get_if<Semistable>(&r)) {
        if (s->weights != weights || s->coeffs.size() != weights.size()) {
            return false;
        }
        RatVector sum(delta.size());
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (s->coeffs[j].sign() < 0) {
                return false;
            }
            for (std::size_t k = 0; k < sum.size(); ++k) {
                sum[k] += s->coeffs[j] * Rational(weights[j][k]);
            }
        }
        return sum == delta;
    }
    const auto &u = std::get<Unstable>(r);
    if (u.weights != weights || u.lambda.size() != delta.size()) {
        return false;
    }
    const RatVector lam = to_rational(u.lambda);
    for (const auto &w : weights) {
        if (dot(u.lambda, w) < 0) {
            return false;
        }
    }
    return dot(lam, delta).sign() < 0;
}

CotangentPoint extended_core_projection(const CotangentPoint &p, const std::vector<std::size_t> &subset)
{
    CotangentPoint q = p;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        if (std::binary_search(subset.begin(), subset.end(), i)) {
            q.x[i] = 0;
        } else {
            q.y[i] = 0;
        }
    }
    return q;
}

std::optional<std::vector<std::size_t>> semistable_projection(const IntMatrix &a, const CotangentPoint &p,
                                                              const RatVector &delta)
{
    std::vector<std::size_t> ysupp;
    for (std::size_t i = 0; i < p.y.size(); ++i) {
        if (!p.y[i].is_zero()) {
            ysupp.push_back(i);
        }
    }
    // Subsets of the y-support, smallest first; 2^|ysupp| is fine for the
    // sizes checked here.
    for (std::size_t k = 0; k <= ysupp.size(); ++k) {
        std::optional<std::vector<std::size_t>> hit;
        for_each_combination(ysupp.size(), k, [&](const std::vector<std::size_t> &pick) {
            std::vector<std::size_t> subset;
            for (auto t : pick) {
                subset.push_back(ysupp[t]);
            }
            const auto q = extended_core_projection(p, subset);
            if (std::holds_alternative<Semistable>(semistable_point(a, q, delta))) {
                hit = subset;
                return false;
            }
            return true;
        });
        if (hit) {
            return hit;
        }
    }
    return std::nullopt;
}

FanEqualityReport fan_equality_check(const IntMatrix &a, const std::vector<RatVector> &samples,
                                     std::size_t points_per_sample, std::mt19937_64 &rng)
{
    FanEqualityReport report;
    std::uniform_int_distribution<int> coord(-3, 3);
    std::bernoulli_distribution zero(0.4);
    const std::size_t n = a.cols();
    for (const auto &delta : samples) {
        for (std::size_t t = 0; t < points_per_sample; ++t) {
            CotangentPoint p{RatVector(n), RatVector(n)};
            for (std::size_t i = 0; i < n; ++i) {
                p.x[i] = zero(rng) ? 0 : coord(rng);
                p.y[i] = zero(rng) ? 0 : coord(rng);
            }
            const bool lhs = std::holds_alternative<Semistable>(semistable_point(a, p, delta));
            const bool rhs = semistable_projection(a, p, delta).has_value();
            ++report.checked;
            if (lhs != rhs) {
                report.counterexamples.push_back(FanCounterexample{delta, p, lhs, rhs});
            }
        }
    }
    return report;
}

} // namespace hyperloc
