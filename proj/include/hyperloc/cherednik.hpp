#ifndef HYPERLOC_CHEREDNIK_HPP
#define HYPERLOC_CHEREDNIK_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <hyperloc/matrix.hpp>

namespace hyperloc
{

// Parameters of the cyclic-group Cherednik algebra; h is indexed 0..m-1 and
// read mod m, so h_m is h_0.
struct CherednikParams {
    long m = 2;
    RatVector h;

    // Throws BadM for m < 2 and BadShape when h does not have m entries.
    void validate() const;
    const Rational &at(long i) const;
};

// [I_{m-1} | -1]; BadM for m < 2.
IntMatrix cyclic_quiver_matrix(long m);

// chi_i = h_i - h_0 + (i - m)/m for i = 1..m-1.
RatVector chi_of_h(const CherednikParams &p);

using IndexPair = std::pair<long, long>;

// Equations j + m h_{i+j} - m h_i = 0, i in [1, m-1], j in [0, m-i]. The
// j = 0 equations are identically zero and are skipped.
struct ArrangementReport {
    bool member = false;
    std::vector<IndexPair> satisfied;
    std::vector<IndexPair> skipped;
};
ArrangementReport in_arrangement_C(const CherednikParams &p);

// Least c >= 1 with c + m h_{i+c} - m h_i = 0, or nullopt for infinity.
// Exact: for each residue j of c mod m the only candidate is
// c = m (h_i - h_{i+j}).
std::optional<long> simple_dim(const CherednikParams &p, long i);

struct DeltaModule {
    long i = 0;
    long truncation = 0;
    RatVector y_coeffs; // y_coeffs[r - 1] for r = 1..truncation
    std::optional<long> brute_force_c; // nullopt: no zero up to the truncation
};
DeltaModule delta_action(const CherednikParams &p, long i, long truncation);

// prod_{i=1}^m (r - m + i + m h_i).
Rational dunkl_ym_eigenvalue(const CherednikParams &p, long r);

struct RadialCheck {
    bool ok = true;
    std::optional<long> failing_r;
};
// Applies m^m d_1 ... d_m to the generalized monomial prod_i x_i^{e_i},
// e_i = r/m + h_i + (i-m)/m, and compares the coefficient (and the exponent
// shift by -1 in every variable) with dunkl_ym_eigenvalue.
RadialCheck radial_parts_identity_check(const CherednikParams &p, long r_lo, long r_hi);

// Affine hyperplanes in h-space as primitive integer vectors
// (constant, h_0, ..., h_{m-1}), first nonzero h-coefficient positive.
std::set<IntVector> arrangement_hyperplanes(long m);
// The walls of the cyclic quiver fan pulled back along chi_of_h.
std::set<IntVector> pulled_back_walls(long m);

struct LocalizationReport {
    RatVector chi;
    ArrangementReport arrangement;
    bool on_wall = false;
    std::vector<std::size_t> walls_hit;
    bool equivalence_holds = false;
};
// InternalInconsistency when h in C and chi on a wall disagree.
LocalizationReport localization_verdict(const CherednikParams &p);

} // namespace hyperloc

#endif
