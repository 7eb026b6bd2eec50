#include "qchar/rational.hpp"

#include <stdexcept>

namespace qchar {

std::string to_string(const Rational& x)
{
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

Rational rational_pow(const Rational& q, int e)
{
    Rational base = e >= 0 ? q : Rational(1) / q;
    unsigned k = static_cast<unsigned>(e >= 0 ? e : -e);
    Rational out(1);
    while (k) {
        if (k & 1u)
            out *= base;
        base *= base;
        k >>= 1u;
    }
    return out;
}

} // namespace qchar
