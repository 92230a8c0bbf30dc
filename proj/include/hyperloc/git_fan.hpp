#ifndef HYPERLOC_GIT_FAN_HPP
#define HYPERLOC_GIT_FAN_HPP

#include <random>
#include <variant>
#include <vector>

#include <hyperloc/covectors.hpp>
#include <hyperloc/lp.hpp>
#include <hyperloc/matrix.hpp>

namespace hyperloc
{

enum class FanSource { FanOnV, FanOnMomentFiber };

// Normals are primitive, first nonzero entry positive, pairwise
// non-parallel. Ordered by number of nonzero entries, then descending.
struct WallArrangement {
    std::vector<IntVector> normals;
    FanSource source = FanSource::FanOnMomentFiber;
    // FanOnV only: the fan's support is cone(a_1..a_n), not all of Q^d.
    bool support_is_column_cone = false;
    std::size_t dim = 0;
};

WallArrangement wall_hyperplanes(const IntMatrix &a, FanSource source);

struct Chamber {
    SignVector signs; // +-1 per normal
    RatVector witness;
};
struct OnWall {
    std::vector<std::size_t> indices;
};
using ChamberResult = std::variant<Chamber, OnWall>;

ChamberResult chamber_of(const RatVector &delta, const WallArrangement &walls);
bool is_generic(const RatVector &delta, const WallArrangement &walls);
// Open chambers of the arrangement, with interior witnesses.
std::vector<Chamber> chambers(const WallArrangement &walls);

bool effective(const IntMatrix &a, const RatVector &delta);

// Point (x, y) of T*V; weight of x_i is a_i, of y_i is -a_i.
struct CotangentPoint {
    RatVector x;
    RatVector y;
};

struct Semistable {
    std::vector<IntVector> weights; // supported weights
    RatVector coeffs;               // >= 0, sum coeffs_j weights_j = delta
};
struct Unstable {
    std::vector<IntVector> weights;
    IntVector lambda; // <lambda, delta> < 0, <lambda, w> >= 0 on supported weights
};
using StabilityResult = std::variant<Semistable, Unstable>;

StabilityResult semistable_point(const IntMatrix &a, const CotangentPoint &p, const RatVector &delta);
bool verify_stability(const IntMatrix &a, const CotangentPoint &p, const RatVector &delta,
                      const StabilityResult &r);

// Zero x_i for i in I and y_i for i outside I.
CotangentPoint extended_core_projection(const CotangentPoint &p, const std::vector<std::size_t> &subset);

struct FanCounterexample {
    RatVector delta;
    CotangentPoint point;
    bool point_semistable = false;
    bool some_projection_semistable = false;
};
struct FanEqualityReport {
    std::size_t checked = 0;
    std::vector<FanCounterexample> counterexamples;
};

// p is delta-semistable iff pi_I(p) is for some I inside the y-support of p.
FanEqualityReport fan_equality_check(const IntMatrix &a, const std::vector<RatVector> &samples,
                                     std::size_t points_per_sample, std::mt19937_64 &rng);
// The right-hand side of the equivalence for a single point; returns the
// subset that works, if any.
std::optional<std::vector<std::size_t>> semistable_projection(const IntMatrix &a, const CotangentPoint &p,
                                                              const RatVector &delta);

} // namespace hyperloc

#endif
