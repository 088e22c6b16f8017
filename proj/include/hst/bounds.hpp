#pragma once

#include <cstdint>
#include <string>

namespace hst {

enum class LogBase { Natural, Two };

// A computed analytic constant or tail bound.  `valid` is false when the
// bound is vacuous (nonpositive denominator, no root in bracket, ...);
// callers must not consume `value` in that case.
struct BoundResult {
  double value = 0.0;
  LogBase log_base = LogBase::Natural;
  bool valid = true;
  double residual = 0.0;
};

// Symmetric split law Z = 1/2 + sigma*V used by the dominated-tree bounds.
struct SplitLaw {
  enum class Kind { Example2, Wagner, ExplicitAB };
  Kind kind = Kind::Example2;
  int d = 1;        // Example2 / Wagner
  double a = 0.0;   // ExplicitAB: V = min(1/2, a*sqrt(E+b)), E exponential
  double b = 0.0;

  static SplitLaw example2(int d);
  static SplitLaw wagner(int d);
  static SplitLaw explicit_ab(double a, double b);
};

// The safe integer cap on alpha from the symmetric-moment lemma.
inline constexpr double kAlphaSafe = 19.0;
// alpha = 2*(1 + sqrt(log 8))^2, used by both logarithmic-moment bounds.
double alpha_symmetric();

// ----- fringe-balanced / moment-curve constants (natural-log units) --------

// Lambda(t) = 1 / sum_{i=t+1}^{2t+1} 1/(i+1): limiting mean-depth constant.
BoundResult lambda_poblete(long t);

// The unique lambda with sum_{i=t+1}^{2t+1} 1/(lambda+i) = 1/c.
BoundResult solve_lambda_of_c(double c, long t);

// C(t): root of lambda(c) - c*sum log(1 + lambda(c)/i) + c*log 2 on
// (Lambda(t), 64]: limiting height constant.
BoundResult height_constant(long t);

// Closed-form lower bounds: 1/log 2 + log(3/2)/(4t) for the depth and
// 1/log 2 + c/sqrt(t) (0 < c < sqrt(log 2)) for the height.
BoundResult moment_depth_lower(long t);
BoundResult moment_height_lower(long t, double c);

// ----- closed-form tail bounds ---------------------------------------------

// min(1/2, 1/(1 + 4(d+1)(x-1/2)^2)) for 1/2 < x <= 1.
BoundResult simplified_balance_bound(int d, double x);

// ((n-d)/4 + (n-d)^2/(4(d+1))) / (same + x^2) for x >= 0.
BoundResult balance_bound(std::size_t n, int d, double x);

// 4*exp(-2d(x-1/2)^2): dominating larger-side tail for any point set.
// Uncapped; vacuous (> 1) values are reported with valid still true.
BoundResult wagner_hoeffding_tail(int d, double x);

// P(B >= x) for B ~ beta(ceil(d/2), ceil(d/2)) via the binomial-cdf duality,
// evaluated in exact rational arithmetic and rounded once.
BoundResult beta_tail_exact(int d, double x);

// ----- dominated-tree height and depth bounds ------------------------------

// gamma = 1/(log 2 - 2a*log(2*rho)), rho = E[exp(sqrt(E+b))] by quadrature.
// valid=false when the denominator is nonpositive.
BoundResult dominated_height_gamma(const SplitLaw& law);

// exp(lambda) * (E[2*(Z*)^lambda])^gamma < 1, the height-lemma condition.
bool height_condition_holds(double gamma, const SplitLaw& law, double lambda);

// Closed-form lower bound on the logarithmic moment mu = 2E[Z log(1/Z)].
BoundResult log_moment_lower(const SplitLaw& law);

// P(D_n >= t) <= n^lambda * phi(lambda)^t with phi = E[Z^{l+1}+(1-Z)^{l+1}],
// capped at 1.
BoundResult depth_tail_bound(std::size_t n, std::size_t t, double lambda,
                             const SplitLaw& law);

// E[2*(Z*)^lambda] for the law (exposed for tests of the height condition).
double two_zstar_moment(const SplitLaw& law, double lambda);

// phi(lambda) for the law.
double depth_phi(const SplitLaw& law, double lambda);

// Tag-aware conversion between per-log_e and per-log_2 units.
BoundResult convert_log_base(const BoundResult& b, LogBase to);

std::string to_json(const BoundResult& b);

}  // namespace hst
