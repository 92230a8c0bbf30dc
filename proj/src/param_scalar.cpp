#include <cctype>
#include <string>

#include <hyperloc/error.hpp>
#include <hyperloc/param_scalar.hpp>

namespace hyperloc
{

namespace
{

std::string strip(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        // U+2212 minus sign
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88
            && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            // U+03C4 tau
        } else if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x84) {
            out.push_back('T');
            i += 1;
        } else if (!std::isspace(c)) {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

std::vector<std::string> split_commas(std::string_view text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

ParamScalar ParamScalar::parse(std::string_view text)
{
    const std::string s = strip(text);
    if (s.empty()) {
        throw Error(ErrorKind::ParseError, "empty scalar");
    }
    if (s.back() != 'T') {
        if (s.find('T') != std::string::npos) {
            throw Error(ErrorKind::ParseError, "T must terminate the scalar: '" + std::string(text) + "'");
        }
        return ParamScalar(Rational::parse(s));
    }
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    Rational rat;
    std::string coef = body;
    if (split != std::string::npos) {
        rat = Rational::parse(body.substr(0, split));
        coef = body.substr(split);
    }
    Rational tau;
    if (coef.empty() || coef == "+") {
        tau = 1;
    } else if (coef == "-") {
        tau = -1;
    } else {
        tau = Rational::parse(coef);
    }
    return ParamScalar(rat, tau);
}

std::string ParamScalar::to_string() const
{
    if (m_tau.is_zero()) {
        return m_rat.to_string();
    }
    if (m_rat.is_zero()) {
        return m_tau.to_string() + "T";
    }
    const std::string sign = m_tau.sign() < 0 ? "-" : "+";
    return m_rat.to_string() + sign + m_tau.abs().to_string() + "T";
}

ParamScalar &ParamScalar::operator*=(const ParamScalar &o)
{
    if (!m_tau.is_zero() && !o.m_tau.is_zero()) {
        throw Error(ErrorKind::TauProductUnsupported, "product of two T-carrying scalars");
    }
    const Rational rat = m_rat * o.m_rat;
    const Rational tau = m_rat * o.m_tau + m_tau * o.m_rat;
    m_rat = rat;
    m_tau = tau;
    return *this;
}

ParamScalar &ParamScalar::operator/=(const Rational &q)
{
    m_rat /= q;
    m_tau /= q;
    return *this;
}

RatVector pr(const ParamVector &v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(x.rat());
    }
    return out;
}

RatVector tau_part(const ParamVector &v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(x.tau());
    }
    return out;
}

ParamVector to_param(const RatVector &v)
{
    return ParamVector(v.begin(), v.end());
}

ParamVector parse_param_list(std::string_view text)
{
    ParamVector out;
    for (const auto &part : split_commas(text)) {
        out.push_back(ParamScalar::parse(part));
    }
    return out;
}

RatVector parse_rational_list(std::string_view text)
{
    RatVector out;
    for (const auto &part : split_commas(text)) {
        out.push_back(Rational::parse(part));
    }
    return out;
}

} // namespace hyperloc
