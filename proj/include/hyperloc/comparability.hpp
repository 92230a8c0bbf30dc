#ifndef HYPERLOC_COMPARABILITY_HPP
#define HYPERLOC_COMPARABILITY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <hyperloc/covectors.hpp>
#include <hyperloc/lattice.hpp>
#include <hyperloc/param_scalar.hpp>

namespace hyperloc
{

// A character chi in (Q + QT)^d.
using Character = ParamVector;

std::string to_string(const Character &chi);

// alpha with sum_i alpha_i a_i = chi, alpha_i in Z>=0 on the positive
// support of lambda, in Z<0 on the negative support, and not an integer on
// the zero set.
struct Attached {
    ParamVector alpha;
};
struct NotAttached {
    std::string reason;
};
// The integer part was only searched within |gamma_i| <= radius.
struct Inconclusive {
    long radius = 0;
};
using AttachResult = std::variant<Attached, NotAttached, Inconclusive>;

// Exact for unimodular A. Otherwise NotAttached is still exact (it comes
// from an infeasible relaxation or an exhausted finite search) and a feasible
// relaxation without a point in the box gives Inconclusive(radius).
// Throws NotACovector when lambda is not a covector of A.
AttachResult decide_attached(const IntMatrix &a, const SignVector &lambda, const Character &chi, long radius = 6);

bool is_attachment_witness(const IntMatrix &a, const SignVector &lambda, const Character &chi,
                           const ParamVector &alpha);

struct QSet {
    std::vector<SignVector> members; // sorted
    std::map<std::string, ParamVector> witnesses; // keyed by to_string(sign vector)
    bool partial = false;
    std::vector<SignVector> inconclusive;

    bool contains(const SignVector &s) const;
    // Set inclusion of members; ignores witnesses.
    bool subset_of(const QSet &other) const;
    friend bool operator==(const QSet &x, const QSet &y)
    {
        return x.members == y.members && x.partial == y.partial;
    }
};

// Columns k times +1 then n-k times -1; the table for d = 1 taken as given.
QSet q_set_d1_closed_form(long k, long n, const ParamScalar &chi);

struct Maximal {
};
struct NotMaximal {
    IntVector theta; // Q_chi is a proper subset of Q_{chi + theta}
};
struct UnknownWithin {
    long radius = 0;
};
using MaximalityResult = std::variant<Maximal, NotMaximal, UnknownWithin>;

struct ShiftCone {
    std::vector<IntVector> generators;
    Integer n0;
    Integer n1;
    Integer p;
    IntVector delta;
    Rational box_constant;
    SignVector chamber;               // signs of C against the wall normals
    std::vector<IntVector> normals;   // mu_i, oriented so that C = {<mu_i, .> > 0}
    // chi + q u_j -> chi for q = 1, 2, 3 is checked for every generator and
    // holds whenever construction returns. The reverse arrow
    // chi -> chi + q u_j is not implied; it is recorded per generator.
    std::vector<bool> reverse_direction;
};

// Covectors and Q sets of one action matrix, with a per-object memo of Q
// sets keyed by the character's text form.
class ParameterSpace
{
public:
    explicit ParameterSpace(IntMatrix a);

    const IntMatrix &matrix() const
    {
        return m_a;
    }
    bool unimodular() const
    {
        return m_unimodular;
    }
    const std::vector<Covector> &covectors() const
    {
        return m_covectors;
    }
    void set_jobs(unsigned jobs)
    {
        m_jobs = jobs;
    }
    void set_radius(long radius)
    {
        m_radius = radius;
    }

    AttachResult decide(const SignVector &lambda, const Character &chi) const;
    const QSet &q_set(const Character &chi);
    // Throws NotUnimodular, and PartialQSet if either side is partial.
    bool chi_arrow(const Character &chi, const Character &chi2);
    MaximalityResult is_maximal(const Character &chi, long radius);
    ShiftCone shifting_cone(const Character &chi, const RatVector &chamber_witness);

private:
    void require_unimodular() const;

    IntMatrix m_a;
    bool m_unimodular = false;
    std::vector<Covector> m_covectors;
    std::map<std::string, QSet> m_memo;
    unsigned m_jobs = 1;
    long m_radius = 6;
};

QSet q_set(const IntMatrix &a, const Character &chi);
bool chi_arrow(const IntMatrix &a, const Character &chi, const Character &chi2);
MaximalityResult is_maximal(const IntMatrix &a, const Character &chi, long radius);
ShiftCone shifting_cone(const IntMatrix &a, const Character &chi, const RatVector &chamber_witness);

} // namespace hyperloc

#endif
