#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <hyperloc/covectors.hpp>

namespace hyperloc
{

std::string to_string(const SignVector &s)
{
    std::string out;
    for (int v : s) {
        out.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
    }
    return out;
}

SignVector parse_signs(std::string_view text)
{
    SignVector out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '+') {
            out.push_back(1);
        } else if (c == '-') {
            out.push_back(-1);
        } else if (c == '0') {
            out.push_back(0);
        } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size()
                   && static_cast<unsigned char>(text[i + 1]) == 0x88
                   && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back(-1);
            i += 2;
        } else {
            throw Error(ErrorKind::ParseError, "bad sign character in '" + std::string(text) + "'");
        }
    }
    return out;
}

namespace
{

RatVector negated(const RatVector &v)
{
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = -v[i];
    }
    return out;
}

LinearSystem sign_system(const std::vector<RatVector> &normals, const SignVector &s, std::size_t dim)
{
    LinearSystem sys{dim, {}};
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] > 0) {
            sys.add(normals[j], Relation::Gt);
        } else if (s[j] < 0) {
            sys.add(negated(normals[j]), Relation::Gt);
        } else {
            sys.add(normals[j], Relation::Eq);
        }
    }
    return sys;
}

} // namespace

std::vector<Region> enumerate_regions(const std::vector<RatVector> &normals, std::size_t dim)
{
    std::vector<Region> regions{Region{{}, RatVector(dim)}};
    for (std::size_t t = 0; t < normals.size(); ++t) {
        std::vector<Region> next;
        const std::vector<RatVector> prefix(normals.begin(), normals.begin() + static_cast<std::ptrdiff_t>(t + 1));
        for (const auto &r : regions) {
            // The stored point already decides one side unless it lies on the
            // new hyperplane.
            const int known = dot(normals[t], r.point).sign();
            for (int side : {1, -1}) {
                SignVector s = r.signs;
                s.push_back(side);
                if (side == known) {
                    next.push_back(Region{std::move(s), r.point});
                    continue;
                }
                const LpResult res = solve(sign_system(prefix, s, dim));
                if (const auto *f = std::get_if<Feasible>(&res)) {
                    next.push_back(Region{std::move(s), f->point});
                }
            }
        }
        regions = std::move(next);
    }
    return regions;
}

namespace
{

// Rational basis of {lambda : <lambda, a_i> = 0 for i in z}, as d x k.
std::vector<RatVector> annihilator(const IntMatrix &a, const std::vector<std::size_t> &z)
{
    const RatMatrix rows = to_rational(a.select_columns(z).transpose());
    if (z.empty()) {
        std::vector<RatVector> id;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            RatVector e(a.rows());
            e[i] = 1;
            id.push_back(std::move(e));
        }
        return id;
    }
    return nullspace(rows);
}

RatVector restrict_to(const std::vector<RatVector> &basis, const RatVector &v)
{
    RatVector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out[k] = dot(basis[k], v);
    }
    return out;
}

std::vector<std::size_t> closure(const IntMatrix &a, const std::vector<std::size_t> &z)
{
    const auto basis = annihilator(a, z);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        const RatVector col = to_rational(a.column(i));
        bool zero = true;
        for (const auto &b : basis) {
            zero = zero && dot(b, col).is_zero();
        }
        if (zero) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

std::vector<Covector> enumerate_covectors(const IntMatrix &a)
{
    const std::size_t n = a.cols();
    std::set<std::vector<std::size_t>> flats;
    std::deque<std::vector<std::size_t>> queue{closure(a, {})};
    flats.insert(queue.front());
    while (!queue.empty()) {
        const auto z = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            if (std::binary_search(z.begin(), z.end(), i)) {
                continue;
            }
            auto bigger = z;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), i), i);
            auto c = closure(a, bigger);
            if (flats.insert(c).second) {
                queue.push_back(std::move(c));
            }
        }
    }

    std::map<std::string, Covector> found;
    for (const auto &z : flats) {
        const auto basis = annihilator(a, z);
        std::vector<std::size_t> rest;
        std::vector<RatVector> normals;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::binary_search(z.begin(), z.end(), i)) {
                rest.push_back(i);
                normals.push_back(restrict_to(basis, to_rational(a.column(i))));
            }
        }
        for (const auto &region : enumerate_regions(normals, basis.size())) {
            RatVector lambda(a.rows());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    lambda[r] += region.point[k] * basis[k][r];
                }
            }
            SignVector s(n, 0);
            for (std::size_t k = 0; k < rest.size(); ++k) {
                s[rest[k]] = region.signs[k];
            }
            Covector cv{s, clear_denominators(lambda)};
            found.emplace(to_string(s), std::move(cv));
        }
    }
    std::vector<Covector> out;
    for (auto &[key, cv] : found) {
        out.push_back(std::move(cv));
    }
    std::sort(out.begin(), out.end(), [](const Covector &x, const Covector &y) { return x.signs < y.signs; });
    return out;
}

CovectorCheck is_covector(const IntMatrix &a, const SignVector &s)
{
    if (s.size() != a.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "sign vector length differs from the number of columns");
    }
    std::vector<RatVector> normals;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        normals.push_back(to_rational(a.column(i)));
    }
    const LpResult res = solve(sign_system(normals, s, a.rows()));
    if (const auto *f = std::get_if<Feasible>(&res)) {
        return CovectorCheck{true, clear_denominators(f->point), {}};
    }
    return CovectorCheck{false, {}, std::get<Infeasible>(res).multipliers};
}

} // namespace hyperloc
