#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hst {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

// Fixed-point decimal rendering, truncated toward zero at `digits`
// fractional digits.  Deterministic across platforms; used for CSV output.
std::string decimal_string(const Rational& r, int digits = 12);

// Exact rational from a finite double (every finite double is dyadic).
Rational rational_from_double(double x);

double to_double(const Rational& r);

}  // namespace hst
