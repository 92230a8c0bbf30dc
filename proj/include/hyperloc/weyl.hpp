#ifndef HYPERLOC_WEYL_HPP
#define HYPERLOC_WEYL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <hyperloc/matrix.hpp>

namespace hyperloc
{

// hbar^(hbar2/2) x^x xi^xi. Exponents of hbar are half-integers, stored
// doubled.
struct WeylMonomial {
    int hbar2 = 0;
    std::vector<unsigned> x;
    std::vector<unsigned> xi;

    Rational hbar_exp() const
    {
        return Rational(Integer(hbar2), Integer(2));
    }
    friend auto operator<=>(const WeylMonomial &, const WeylMonomial &) = default;
};

// Polynomial symbols in x_1..x_n, xi_1..xi_n with Laurent half-powers of
// hbar. Zero coefficients are never stored.
//
// Conventions: {xi_i, x_j} = delta_ij, and the star product gives
// xi o x = x xi + hbar, so [x, xi] = -hbar.
class WeylElement
{
public:
    WeylElement() = default;
    explicit WeylElement(std::size_t n) : m_n(n) {}

    static WeylElement constant(std::size_t n, const Rational &c);
    static WeylElement term(const Rational &c, const Rational &hbar_exp, std::vector<unsigned> x,
                            std::vector<unsigned> xi);
    static WeylElement x(std::size_t n, std::size_t i);
    static WeylElement xi(std::size_t n, std::size_t i);
    static WeylElement hbar(std::size_t n, const Rational &exp = 1);

    std::size_t vars() const
    {
        return m_n;
    }
    const std::map<WeylMonomial, Rational> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    void add(const WeylMonomial &m, const Rational &c);

    WeylElement &operator+=(const WeylElement &o);
    WeylElement &operator-=(const WeylElement &o);
    WeylElement &operator*=(const Rational &c);
    friend WeylElement operator+(WeylElement a, const WeylElement &b)
    {
        return a += b;
    }
    friend WeylElement operator-(WeylElement a, const WeylElement &b)
    {
        return a -= b;
    }
    friend WeylElement operator*(WeylElement a, const Rational &c)
    {
        return a *= c;
    }
    friend WeylElement operator*(const Rational &c, WeylElement a)
    {
        return a *= c;
    }
    friend bool operator==(const WeylElement &, const WeylElement &) = default;

    std::string to_string() const;

private:
    void check_same(const WeylElement &o) const;

    std::size_t m_n = 0;
    std::map<WeylMonomial, Rational> m_terms;
};

// Commutative product of symbols (no hbar corrections).
WeylElement multiply(const WeylElement &a, const WeylElement &b);
// a o b = sum_alpha hbar^|alpha| / alpha! d_xi^alpha a . d_x^alpha b
WeylElement star(const WeylElement &a, const WeylElement &b);
WeylElement commutator(const WeylElement &a, const WeylElement &b);
// sum_i df/dxi_i dg/dx_i - df/dx_i dg/dxi_i; NonSymbol on hbar terms.
WeylElement poisson(const WeylElement &f, const WeylElement &g);

// Least m with a in W(m), i.e. -min hbar exponent; nullopt for a = 0.
std::optional<Rational> order(const WeylElement &a);
// hbar^(-m) part of a; NotInFiltration when some exponent is below -m.
WeylElement symbol(const WeylElement &a, const Rational &m);

struct MixedWeight {
};
struct NoTerms {
};
// |x| + |xi| + 2 * hbar exponent, when all terms agree.
using FWeight = std::variant<Rational, MixedWeight, NoTerms>;
FWeight f_weight(const WeylElement &a);

// T-weight sum_j (x_j - xi_j) a_j of a monomial.
IntVector t_weight(const IntMatrix &a, const WeylMonomial &m);

// sum_j a_ij hbar^-1 x_j xi_j.
WeylElement mu_W(const IntMatrix &a, std::size_t i);

// Normal form of the moment-map ideal: with pi putting independent columns
// first and U = (A_B)^-1, U A_pi = [I | C'], generator i becomes
// x_pi(i) xi_pi(i) - sum_j c_ij x_pi(d+j) xi_pi(d+j) with c = -C'. The
// leading monomials x_pi(i) xi_pi(i) use disjoint variables, so they form a
// regular sequence and the fiber is a complete intersection.
struct FlatnessCertificate {
    std::vector<std::size_t> permutation;
    RatMatrix row_ops;
    bool row_ops_unimodular = false;
    RatMatrix c;
    std::vector<WeylElement> normal_form;
    std::vector<WeylElement> initial_ideal;
    bool normal_form_verified = false;
    std::size_t dim_fiber = 0;    // 2n - d
    std::size_t dim_quotient = 0; // 2(n - d)
    IntMatrix kernel;             // B, a Z-basis of ker A
    std::vector<std::size_t> kernel_zero_rows;
};

struct MomentIdeal {
    std::vector<WeylElement> generators; // sum_j a_ij x_j xi_j
    FlatnessCertificate certificate;
};

MomentIdeal moment_ideal(const IntMatrix &a);

} // namespace hyperloc

#endif
