#include "hst/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "hst/error.hpp"

namespace hst {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

std::string decimal_string(const Rational& r, int digits) {
  const bool neg = r < 0;
  Rational a = neg ? Rational(-r) : r;
  BigInt num = boost::multiprecision::numerator(a);
  const BigInt den = boost::multiprecision::denominator(a);
  BigInt ip = num / den;
  BigInt rem = num % den;
  std::string out = neg && (ip != 0 || rem != 0) ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += char('0' + int(rem / den));
      rem %= den;
    }
  }
  return out;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value");
  Rational r;
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  m = std::ldexp(m, 53);
  exp -= 53;
  r = Rational(BigInt(static_cast<long long>(m)));
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hst
