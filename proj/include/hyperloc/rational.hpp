#ifndef HYPERLOC_RATIONAL_HPP
#define HYPERLOC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hyperloc
{

using Integer = mpz_class;

std::string to_string(const Integer &z);
Integer parse_integer(std::string_view text);

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);

// Reduced fraction with positive denominator. Backed by GMP; every value
// that leaves this class is canonical (gcd(|num|, den) = 1, den >= 1).
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(int v) : m_value(static_cast<long>(v)) {}
    Rational(const Integer &v) : m_value(v) {}
    Rational(const Integer &num, const Integer &den);

    // Accepts "p", "p/q" with optional sign. No decimal or exponent forms.
    static Rational parse(std::string_view text);

    Integer num() const
    {
        return m_value.get_num();
    }
    Integer den() const
    {
        return m_value.get_den();
    }

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    Rational abs() const;
    Integer floor() const;
    Integer ceil() const;
    Rational inverse() const;

    std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.m_value = -a.m_value;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class &raw() const
    {
        return m_value;
    }

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

using RatVector = std::vector<Rational>;

// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const RatVector &v);

} // namespace hyperloc

#endif
