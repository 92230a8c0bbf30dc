#include <cctype>
#include <string>

#include <hyperloc/error.hpp>
#include <hyperloc/rational.hpp>

namespace hyperloc
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// Replaces the unicode minus sign by '-' and drops blanks.
std::string normalize_numeric(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88
            && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(c)) {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

} // namespace

std::string to_string(const Integer &z)
{
    return z.get_str();
}

Integer parse_integer(std::string_view text)
{
    const std::string s = normalize_numeric(text);
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    Integer z(std::string(body), 10);
    return negative ? Integer(-z) : z;
}

Integer gcd(const Integer &a, const Integer &b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer &a, const Integer &b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s = normalize_numeric(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    const std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!all_digits(den_text)) {
        throw Error(ErrorKind::ParseError, "bad denominator in '" + std::string(text) + "'");
    }
    const Integer num = parse_integer(std::string_view(s).substr(0, slash));
    const Integer den(std::string(den_text), 10);
    return Rational(num, den);
}

Rational Rational::abs() const
{
    Rational r;
    r.m_value = ::abs(m_value);
    return r;
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), m_value.get_num_mpz_t(), m_value.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), m_value.get_num_mpz_t(), m_value.get_den_mpz_t());
    return q;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    Rational r;
    r.m_value = 1 / m_value;
    return r;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.to_string();
}

Integer common_denominator(const RatVector &v)
{
    Integer l = 1;
    for (const auto &q : v) {
        l = lcm(l, q.den());
    }
    return l;
}

} // namespace hyperloc
