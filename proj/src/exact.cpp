#include "colorbound/exact.hpp"

#include <stdexcept>

namespace colorbound {

BigInt power(const BigInt &base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

Rational power(const Rational &base, unsigned exponent)
{
    return Rational(power(numerator_of(base), exponent), power(denominator_of(base), exponent));
}

std::string to_fraction_string(const Rational &r)
{
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_decimal_string(const Rational &r, int digits)
{
    BigInt num = numerator_of(r);
    const BigInt den = denominator_of(r);
    const bool negative = num < 0;
    if (negative)
        num = -num;

    const BigInt scale = power(BigInt(10), static_cast<unsigned>(digits));
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string out = negative && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string tail = frac.str();
        out += "." + std::string(digits - tail.size(), '0') + tail;
    }
    return out;
}

Rational parse_rational(const std::string &text)
{
    auto digits_only = [](const std::string &s) {
        std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (start == s.size())
            return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };

    auto slash = text.find('/');
    std::string p = text.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits_only(p) || !digits_only(q) || q[0] == '-')
        throw std::invalid_argument("not a rational: '" + text + "'");
    BigInt den(q);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(BigInt(p), den);
}

}  // namespace colorbound
