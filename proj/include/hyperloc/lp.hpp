#ifndef HYPERLOC_LP_HPP
#define HYPERLOC_LP_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include <hyperloc/matrix.hpp>

namespace hyperloc
{

enum class Relation { Ge, Gt, Eq };

// coeffs . x  (>= | > | =)  rhs
struct Constraint {
    RatVector coeffs;
    Relation rel = Relation::Ge;
    Rational rhs;
};

struct LinearSystem {
    std::size_t dim = 0;
    std::vector<Constraint> rows;

    void add(RatVector coeffs, Relation rel, Rational rhs = Rational());
};

struct Feasible {
    RatVector point;
};

// Multipliers y, one per row: y_i >= 0 on inequality rows, free on equality
// rows, sum_i y_i coeffs_i = 0, and either sum_i y_i rhs_i > 0 or
// sum_i y_i rhs_i = 0 with y_i > 0 on some strict row.
struct Infeasible {
    RatVector multipliers;
};

using LpResult = std::variant<Feasible, Infeasible>;

// Fourier-Motzkin elimination with Chernikov pruning.
LpResult solve_fourier_motzkin(const LinearSystem &sys);
// Phase I simplex with Bland's rule on a homogenized copy of the system.
LpResult solve_simplex(const LinearSystem &sys);
// Fourier-Motzkin for dim <= 4, simplex above.
LpResult solve(const LinearSystem &sys);

bool satisfies(const LinearSystem &sys, const RatVector &x);
bool is_certificate(const LinearSystem &sys, const RatVector &multipliers);
// Either branch, checked exactly.
bool verify(const LinearSystem &sys, const LpResult &result);

// {z >= 0 : M z = b}. Vertex is a basic feasible solution (so it is integral
// whenever every basis of M has determinant +-1 and b is integral).
struct StandardVertex {
    RatVector z;
};
// y with y^T M <= 0 and y^T b > 0.
struct StandardFarkas {
    RatVector y;
};
using StandardResult = std::variant<StandardVertex, StandardFarkas>;

StandardResult feasible_standard_form(const RatMatrix &m, const RatVector &b);

// target in cone(generators)?
struct ConeCombination {
    RatVector coeffs; // nonnegative, sum_j coeffs_j g_j = target
};
struct ConeSeparator {
    IntVector lambda; // <lambda, g_j> >= 0 for all j and <lambda, target> < 0
};
using ConeResult = std::variant<ConeCombination, ConeSeparator>;

ConeResult cone_membership(const std::vector<IntVector> &generators, const RatVector &target);

} // namespace hyperloc

#endif
