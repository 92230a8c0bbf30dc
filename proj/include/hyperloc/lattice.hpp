#ifndef HYPERLOC_LATTICE_HPP
#define HYPERLOC_LATTICE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <hyperloc/matrix.hpp>
#include <hyperloc/param_scalar.hpp>

namespace hyperloc
{

struct SmithForm {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // rows x cols, diagonal, d_1 | d_2 | ...
    IntMatrix V; // cols x cols, unimodular
    std::size_t rank = 0;

    IntVector diagonal() const;
};

// U * M * V = D.
SmithForm smith_normal_form(const IntMatrix &m);

// Calls fn on every k-subset of {0..n-1}, in lexicographic order. Stops early
// when fn returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t> &)> &fn);

// All maximal (rows x rows) minors, one per column subset, in lexicographic
// order of the subsets. There are C(n, d) of them, so this is meant for the
// desk-scale matrices handled here (n up to ~16).
std::vector<Integer> maximal_minors(const IntMatrix &a);

bool is_unimodular(const IntMatrix &a);
bool minors_coprime(const IntMatrix &a);

// Columns form a Z-basis of ker(A : Z^n -> Z^d). Throws RankDeficient when
// rank(A) < rows(A). For rows == cols the result is the n x 0 matrix.
struct KernelBasis {
    IntMatrix B;

    // Indices i such that row i of B vanishes.
    std::vector<std::size_t> zero_rows() const;
};

KernelBasis kernel_basis(const IntMatrix &a);

// Saturated Z-basis (as columns) of ker(M) for M of any rank; a 0 x n input
// gives the n x n identity.
IntMatrix integer_kernel(const IntMatrix &m);

// Witness vectors have length n (one coefficient per column of A) and vanish
// outside the chosen subset S.
std::optional<ParamVector> rational_span_witness(const IntMatrix &a, const ParamVector &v,
                                                 const std::vector<std::size_t> &subset);
// Throws TauPresent if v has a nonzero T-part.
std::optional<IntVector> integer_span_witness(const IntMatrix &a, const ParamVector &v,
                                              const std::vector<std::size_t> &subset);

struct LatticeMembership {
    bool in_rational_span = false;
    std::optional<ParamVector> rational_witness;
    bool in_integer_span = false;
    std::optional<IntVector> integer_witness;
};

// Both verdicts at once; throws TauPresent since the Z-span query needs a
// rational vector.
LatticeMembership in_lattice_image(const IntMatrix &a, const ParamVector &v, const std::vector<std::size_t> &subset);

// Weight matrix of a torus action: 1 <= d < n, no zero column, maximal minors
// with gcd 1. Construction validates and throws with the failing invariant
// as the error kind (DimensionOrder, ZeroColumn, MinorsNotCoprime).
class ActionMatrix
{
public:
    explicit ActionMatrix(IntMatrix a);

    const IntMatrix &matrix() const
    {
        return m_a;
    }
    std::size_t d() const
    {
        return m_a.rows();
    }
    std::size_t n() const
    {
        return m_a.cols();
    }
    IntVector column(std::size_t i) const
    {
        return m_a.column(i);
    }
    bool unimodular() const
    {
        return m_unimodular;
    }

    friend bool operator==(const ActionMatrix &x, const ActionMatrix &y)
    {
        return x.m_a == y.m_a;
    }

private:
    IntMatrix m_a;
    bool m_unimodular = false;
};

} // namespace hyperloc

#endif
