#include "hst/bounds.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "hst/error.hpp"
#include "hst/rational.hpp"

namespace hst {
namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kEquationTol = 1e-10;
constexpr double kInnerTol = 1e-12;
constexpr double kQuadTol = 1e-9;

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw Error("quadrature did not converge");
  if (std::abs(delta) <= 15 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = kQuadTol) {
  if (b <= a) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double scale = std::max(1.0, std::abs(whole));
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol * scale, 48);
}

// Bisection on a bracketing interval; returns the midpoint once |f| <= tol
// or the interval collapses.  Deterministic, derivative-free.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, double* residual_out) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) { if (residual_out) *residual_out = 0; return lo; }
  if (fhi == 0) { if (residual_out) *residual_out = 0; return hi; }
  if ((flo > 0) == (fhi > 0)) throw Error("no sign change in bracket");
  double mid = lo, fmid = flo;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid);
    if (std::abs(fmid) <= tol || hi - lo <= 1e-16 * std::max(1.0, std::abs(mid)))
      break;
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  if (residual_out) *residual_out = std::abs(fmid);
  return mid;
}

// E[g(V)] for the split law's V in [0, 1/2]: an atom at 1/2 plus an
// absolutely continuous part.
double law_expectation(const SplitLaw& law, const std::function<double(double)>& g) {
  switch (law.kind) {
    case SplitLaw::Kind::Example2: {
      if (law.d < 1) throw InvalidArgument("example2: d >= 1");
      const double atom = std::min(1.0, 2.0 / (law.d + 1));
      double val = atom * g(0.5);
      if (atom < 1.0) {
        const double c = 2.0 * (law.d + 1);
        val += integrate([&](double u) { return g(std::sqrt(1.0 / (c * u))); },
                         atom, 1.0);
      }
      return val;
    }
    case SplitLaw::Kind::Wagner: {
      if (law.d < 1) throw InvalidArgument("wagner: d >= 1");
      const double ln4 = 2.0 * kLn2;
      const double uc = law.d / 2.0 - ln4;  // cap point of E + log 4 vs d/2
      if (uc <= 0) return g(0.5);
      double val = std::exp(-uc) * g(0.5);
      val += integrate(
          [&](double u) {
            return g(std::sqrt((u + ln4) / (2.0 * law.d))) * std::exp(-u);
          },
          0.0, uc);
      return val;
    }
    case SplitLaw::Kind::ExplicitAB: {
      if (law.a <= 0 || law.b < 0) throw InvalidArgument("explicit-a-b: a > 0, b >= 0");
      const double uc = 1.0 / (4.0 * law.a * law.a) - law.b;
      if (uc <= 0) return g(0.5);
      double val = std::exp(-uc) * g(0.5);
      const double hi = std::min(uc, 80.0);  // e^{-80} tail is below tolerance
      // substitute u = s^2 - b: smooth at u = 0 even when b = 0
      val += integrate(
          [&](double s) {
            return g(law.a * s) * std::exp(law.b - s * s) * 2.0 * s;
          },
          std::sqrt(law.b), std::sqrt(hi + law.b));
      return val;
    }
  }
  throw Error("unreachable");
}

double harmonic_like_sum(long t) {
  // sum_{i=t+1}^{2t+1} 1/(i+1), exactly for small t
  if (t <= 4096) {
    Rational s = 0;
    for (long i = t + 1; i <= 2 * t + 1; ++i) s += Rational(1, i + 1);
    return to_double(s);
  }
  double s = 0, comp = 0;  // Kahan
  for (long i = 2 * t + 1; i >= t + 1; --i) {
    const double y = 1.0 / double(i + 1) - comp;
    const double u = s + y;
    comp = (u - s) - y;
    s = u;
  }
  return s;
}

double inverse_sum(double lambda, long t) {
  double s = 0;
  for (long i = 2 * t + 1; i >= t + 1; --i) s += 1.0 / (lambda + double(i));
  return s;
}

double log_sum(double lambda, long t) {
  double s = 0;
  for (long i = t + 1; i <= 2 * t + 1; ++i) s += std::log1p(lambda / double(i));
  return s;
}

}  // namespace

SplitLaw SplitLaw::example2(int d) { return {Kind::Example2, d, 0, 0}; }
SplitLaw SplitLaw::wagner(int d) { return {Kind::Wagner, d, 0, 0}; }
SplitLaw SplitLaw::explicit_ab(double a, double b) { return {Kind::ExplicitAB, 1, a, b}; }

double alpha_symmetric() {
  const double s = 1.0 + std::sqrt(std::log(8.0));
  return 2.0 * s * s;
}

BoundResult lambda_poblete(long t) {
  if (t < 0) throw InvalidArgument("lambda_poblete: t >= 0");
  if (t <= 4096) {
    Rational s = 0;
    for (long i = t + 1; i <= 2 * t + 1; ++i) s += Rational(1, i + 1);
    return {to_double(Rational(1) / s), LogBase::Natural, true, 0.0};
  }
  return {1.0 / harmonic_like_sum(t), LogBase::Natural, true, 0.0};
}

BoundResult solve_lambda_of_c(double c, long t) {
  if (t < 0) throw InvalidArgument("solve_lambda_of_c: t >= 0");
  BoundResult out;
  if (!(c > 0)) {
    out.valid = false;
    return out;
  }
  const double target = 1.0 / c;
  auto f = [&](double lambda) { return inverse_sum(lambda, t) - target; };
  // The sum is strictly decreasing on (-(t+1), inf), from +inf to 0.
  double lo = -double(t + 1) + 1e-9;
  while (f(lo) <= 0) lo = -double(t + 1) + (lo + double(t + 1)) / 16.0;
  double hi = 1.0;
  while (f(hi) > 0) hi *= 2.0;
  double residual = 0;
  out.value = bisect(f, lo, hi, kInnerTol, &residual);
  out.residual = residual;
  out.valid = residual <= 1e-9;  // residual is on the defining equation
  return out;
}

BoundResult height_constant(long t) {
  if (t < 0) throw InvalidArgument("height_constant: t >= 0");
  const double big_lambda = lambda_poblete(t).value;
  auto F = [&](double c) {
    const BoundResult lam = solve_lambda_of_c(c, t);
    return lam.value - c * log_sum(lam.value, t) + c * kLn2;
  };
  BoundResult out;
  const double lo = big_lambda * (1.0 + 1e-9);
  const double hi = 64.0;
  try {
    double residual = 0;
    out.value = bisect(F, lo, hi, kEquationTol, &residual);
    out.residual = residual;
    out.valid = residual <= kEquationTol;
  } catch (const Error&) {
    out.valid = false;
  }
  return out;
}

BoundResult moment_depth_lower(long t) {
  if (t < 1) throw InvalidArgument("moment_depth_lower: t >= 1");
  return {1.0 / kLn2 + std::log(1.5) / (4.0 * t), LogBase::Natural, true, 0.0};
}

BoundResult moment_height_lower(long t, double c) {
  if (t < 1) throw InvalidArgument("moment_height_lower: t >= 1");
  BoundResult out{1.0 / kLn2 + c / std::sqrt(double(t)), LogBase::Natural, true, 0.0};
  if (!(c > 0) || !(c < std::sqrt(kLn2))) out.valid = false;
  return out;
}

BoundResult simplified_balance_bound(int d, double x) {
  if (!(x > 0.5) || x > 1.0)
    throw InvalidArgument("simplified_balance_bound: 1/2 < x <= 1");
  const double dx = x - 0.5;
  const double body = 1.0 / (1.0 + 4.0 * (d + 1) * dx * dx);
  return {std::min(0.5, body), LogBase::Natural, true, 0.0};
}

BoundResult balance_bound(std::size_t n, int d, double x) {
  if (n < std::size_t(d) + 1) throw InvalidArgument("balance_bound: n >= d+1");
  if (x < 0) throw InvalidArgument("balance_bound: x >= 0");
  const double r = double(n - std::size_t(d));
  const double v = r / 4.0 + r * r / (4.0 * (d + 1));
  return {v / (v + x * x), LogBase::Natural, true, 0.0};
}

BoundResult wagner_hoeffding_tail(int d, double x) {
  if (x < 0.5 || x > 1.0)
    throw InvalidArgument("wagner_hoeffding_tail: 1/2 <= x <= 1");
  const double dx = x - 0.5;
  return {4.0 * std::exp(-2.0 * d * dx * dx), LogBase::Natural, true, 0.0};
}

BoundResult beta_tail_exact(int d, double x) {
  if (d < 1) throw InvalidArgument("beta_tail_exact: d >= 1");
  if (x < 0.0 || x > 1.0) throw InvalidArgument("beta_tail_exact: 0 <= x <= 1");
  const Rational xr = rational_from_double(x);
  const Rational one_minus = 1 - xr;
  auto binom_cdf = [&](int k) {
    // P(Binomial(d, x) <= k) in exact rationals
    Rational sum = 0;
    for (int j = 0; j <= k; ++j) {
      Rational term(binomial(d, j));
      for (int p = 0; p < j; ++p) term *= xr;
      for (int p = 0; p < d - j; ++p) term *= one_minus;
      sum += term;
    }
    return sum;
  };
  Rational tail;
  if (d % 2 == 1) {
    tail = binom_cdf((d - 1) / 2);
  } else {
    tail = (binom_cdf((d - 2) / 2) + binom_cdf(d / 2)) / 2;
  }
  return {to_double(tail), LogBase::Natural, true, 0.0};
}

BoundResult dominated_height_gamma(const SplitLaw& law) {
  if (law.kind != SplitLaw::Kind::ExplicitAB)
    throw InvalidArgument("dominated_height_gamma: explicit-a-b law required");
  const double a = law.a, b = law.b;
  if (!(a > 0) || b < 0) throw InvalidArgument("dominated_height_gamma: a > 0, b >= 0");
  const double upper = 120.0;
  // rho = E[exp(sqrt(E + b))], with u = s^2 - b so the integrand is smooth
  double rho = integrate(
      [&](double s) { return std::exp(s - s * s + b) * 2.0 * s; },
      std::sqrt(b), std::sqrt(upper + b), 1e-10);
  // analytic tail: sqrt(u+b) <= sqrt(U+b) + (u-U)/(2 sqrt(U+b)) for u >= U
  const double s = std::sqrt(upper + b);
  rho += std::exp(s - upper) / (1.0 - 1.0 / (2.0 * s));
  const double denom = kLn2 - 2.0 * a * std::log(2.0 * rho);
  BoundResult out;
  out.residual = 0.0;
  if (denom <= 0) {
    out.valid = false;
    out.value = 0.0;
  } else {
    out.value = 1.0 / denom;
  }
  return out;
}

double two_zstar_moment(const SplitLaw& law, double lambda) {
  return law_expectation(
      law, [&](double v) { return 2.0 * std::pow(0.5 + v, lambda); });
}

bool height_condition_holds(double gamma, const SplitLaw& law, double lambda) {
  if (!(lambda > 0)) throw InvalidArgument("height_condition_holds: lambda > 0");
  const double m = two_zstar_moment(law, lambda);
  return lambda + gamma * std::log(m) < 0.0;
}

BoundResult log_moment_lower(const SplitLaw& law) {
  const double alpha = alpha_symmetric();
  double value = 0;
  switch (law.kind) {
    case SplitLaw::Kind::Example2:
      value = kLn2 - alpha / (2.0 * (law.d + 1)) *
                         (1.0 + std::log((law.d + 1) / 2.0));
      break;
    case SplitLaw::Kind::Wagner:
      value = kLn2 - alpha * (1.0 + std::log(4.0)) / (2.0 * law.d);
      break;
    case SplitLaw::Kind::ExplicitAB:
      // generic form: log 2 - alpha E[V^2]
      value = kLn2 - alpha * law_expectation(law, [](double v) { return v * v; });
      break;
  }
  BoundResult out{value, LogBase::Natural, value > 0, 0.0};
  return out;
}

double depth_phi(const SplitLaw& law, double lambda) {
  return law_expectation(law, [&](double v) {
    return std::pow(0.5 + v, lambda + 1.0) + std::pow(0.5 - v, lambda + 1.0);
  });
}

BoundResult depth_tail_bound(std::size_t n, std::size_t t, double lambda,
                             const SplitLaw& law) {
  if (!(lambda > 0)) throw InvalidArgument("depth_tail_bound: lambda > 0");
  const double phi = depth_phi(law, lambda);
  const double log_bound = lambda * std::log(double(n)) + double(t) * std::log(phi);
  return {std::min(1.0, std::exp(log_bound)), LogBase::Natural, true, 0.0};
}

BoundResult convert_log_base(const BoundResult& b, LogBase to) {
  BoundResult out = b;
  if (b.log_base == to) return out;
  // value is the coefficient of log n; switching the log base rescales it
  out.value = (to == LogBase::Two) ? b.value * kLn2 : b.value / kLn2;
  out.log_base = to;
  return out;
}

std::string to_json(const BoundResult& b) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"value\": " << b.value << ", \"log_base\": \""
      << (b.log_base == LogBase::Natural ? "natural" : "two")
      << "\", \"valid\": " << (b.valid ? "true" : "false")
      << ", \"residual\": " << b.residual << "}";
  return out.str();
}

}  // namespace hst
