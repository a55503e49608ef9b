#ifndef UCPOLY_NUMBERS_HPP
#define UCPOLY_NUMBERS_HPP

#include <string>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace ucpoly {

// Exact arithmetic only. No value in this library ever passes through
// floating point or fixed-width overflow-prone math.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRat>;

BigInt binomial(long n, long k);
BigInt factorial(long n);

inline BigInt pow2(long e) { return BigInt(1) << e; }

// decimal rendering; BigRat as "p/q" with "/q" elided when q == 1
std::string to_decimal(const BigInt& v);
std::string to_decimal(const BigRat& v);
BigInt bigint_from_decimal(const std::string& s);
BigRat bigrat_from_decimal(const std::string& s);

} // namespace ucpoly

#endif
