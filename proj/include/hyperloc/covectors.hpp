#ifndef HYPERLOC_COVECTORS_HPP
#define HYPERLOC_COVECTORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <hyperloc/lp.hpp>
#include <hyperloc/matrix.hpp>

namespace hyperloc
{

// Entries in {-1, 0, +1}.
using SignVector = std::vector<int>;

// "+-0" form, one ASCII character per entry.
std::string to_string(const SignVector &s);
SignVector parse_signs(std::string_view text);

struct Covector {
    SignVector signs;
    IntVector witness; // sign(<witness, a_i>) == signs[i]

    friend bool operator==(const Covector &, const Covector &) = default;
};

// Open regions of the central arrangement {h_j^perp} in Q^dim, each as a
// +-1 sign vector with a strictly interior point. Normals must be nonzero.
struct Region {
    SignVector signs;
    RatVector point;
};
std::vector<Region> enumerate_regions(const std::vector<RatVector> &normals, std::size_t dim);

// All covectors of the oriented matroid of A (columns a_i), sorted by sign
// vector, the zero covector included. Enumerated flat by flat: for every
// closed column set Z, the regions of the arrangement restricted to
// ker(A_Z^T) give exactly the covectors with zero set Z.
std::vector<Covector> enumerate_covectors(const IntMatrix &a);

struct CovectorCheck {
    bool realizable = false;
    IntVector witness;      // when realizable
    RatVector refutation;   // LP certificate over the rows i = 0..n-1 otherwise
};
CovectorCheck is_covector(const IntMatrix &a, const SignVector &s);

} // namespace hyperloc

#endif
