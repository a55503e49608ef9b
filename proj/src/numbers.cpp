#include "ucpoly/numbers.hpp"

#include "ucpoly/errors.hpp"

namespace ucpoly {

BigInt binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1; // exact at every step: product of i+1 consecutive integers
    }
    return num;
}

BigInt factorial(long n)
{
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const BigRat& v)
{
    const BigInt num(boost::multiprecision::numerator(v));
    const BigInt den(boost::multiprecision::denominator(v));
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt bigint_from_decimal(const std::string& s)
{
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw ParseError("not a decimal integer: " + s);
    }
}

BigRat bigrat_from_decimal(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("not a rational: " + s);
    }
}

} // namespace ucpoly
