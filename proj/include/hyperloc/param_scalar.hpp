#ifndef HYPERLOC_PARAM_SCALAR_HPP
#define HYPERLOC_PARAM_SCALAR_HPP

#include <string>
#include <string_view>
#include <vector>

#include <hyperloc/rational.hpp>

namespace hyperloc
{

// Element rat + tau*T of Q + Q*T, where T stands for a fixed transcendental
// number. This is the exact model of a complex parameter: a value is an
// integer only if its T-part vanishes and its rational part is integral.
class ParamScalar
{
public:
    ParamScalar() = default;
    ParamScalar(const Rational &rat) : m_rat(rat) {}
    ParamScalar(long v) : m_rat(v) {}
    ParamScalar(int v) : m_rat(v) {}
    ParamScalar(const Rational &rat, const Rational &tau) : m_rat(rat), m_tau(tau) {}

    // "p/q", "p/q+r/sT", "r/sT", "T", "-T", "2-3/4T".
    static ParamScalar parse(std::string_view text);

    const Rational &rat() const
    {
        return m_rat;
    }
    const Rational &tau() const
    {
        return m_tau;
    }

    bool is_rational() const
    {
        return m_tau.is_zero();
    }
    bool is_integer() const
    {
        return m_tau.is_zero() && m_rat.is_integer();
    }
    bool is_zero() const
    {
        return m_rat.is_zero() && m_tau.is_zero();
    }

    std::string to_string() const;

    ParamScalar &operator+=(const ParamScalar &o)
    {
        m_rat += o.m_rat;
        m_tau += o.m_tau;
        return *this;
    }
    ParamScalar &operator-=(const ParamScalar &o)
    {
        m_rat -= o.m_rat;
        m_tau -= o.m_tau;
        return *this;
    }
    // Throws TauProductUnsupported when both factors carry a T-part.
    ParamScalar &operator*=(const ParamScalar &o);
    // Division by a nonzero rational only.
    ParamScalar &operator/=(const Rational &q);

    friend ParamScalar operator+(ParamScalar a, const ParamScalar &b)
    {
        return a += b;
    }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar &b)
    {
        return a -= b;
    }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar &b)
    {
        return a *= b;
    }
    friend ParamScalar operator/(ParamScalar a, const Rational &q)
    {
        return a /= q;
    }
    friend ParamScalar operator-(const ParamScalar &a)
    {
        return ParamScalar(-a.m_rat, -a.m_tau);
    }

    friend bool operator==(const ParamScalar &, const ParamScalar &) = default;

private:
    Rational m_rat;
    Rational m_tau;
};

// The fixed Q-linear projection onto the rational part.
inline const Rational &pr(const ParamScalar &x)
{
    return x.rat();
}

using ParamVector = std::vector<ParamScalar>;

RatVector pr(const ParamVector &v);
RatVector tau_part(const ParamVector &v);
ParamVector to_param(const RatVector &v);

// Comma separated list of scalars, e.g. "1/2,1/3+T".
ParamVector parse_param_list(std::string_view text);
RatVector parse_rational_list(std::string_view text);

} // namespace hyperloc

#endif
