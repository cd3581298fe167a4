#ifndef QGROWTH_ASYMPTOTICS_HPP
#define QGROWTH_ASYMPTOTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgrowth/rational.hpp"

namespace qgrowth {

// Result of a one-parameter growth fit over seq[k_min..k_max].
struct FitResult {
  double estimate = 0.0;
  int k_min = 0;
  int k_max = 0;
  double residual = 0.0;  // method-dependent instability measure, >= 0
  std::string method;     // "loglog_slope", "ratio_richardson" or "semilog_slope"
};

// Window convention throughout: seq[k] is the term of index k and entries
// outside [k_min, k_max] are never read. Default drops the first fifth of the
// terms, where transients pollute the slopes.
std::pair<int, int> default_window(int k_lo, int k_hi);

// Least-squares slope of log seq_k against log k; estimates d when
// seq_k ~ c k^d. The double overload takes log seq_k directly.
FitResult fit_polynomial_exponent(const std::vector<double>& log_seq, int k_min, int k_max);
FitResult fit_polynomial_exponent(const std::vector<Int>& seq, int k_min, int k_max);
FitResult fit_polynomial_exponent(const std::vector<Rat>& seq, int k_min, int k_max);

// Estimates r when seq_k ~ c r^k k^a. Richardson extrapolation of the
// successive ratios seq_{k+1}/seq_k cancels the a/k correction; it is reported
// when it is the more stable of the two methods, otherwise the exponentiated
// semilog least-squares slope is.
FitResult fit_exponential_ratio(const std::vector<double>& log_seq, int k_min, int k_max);
FitResult fit_exponential_ratio(const std::vector<Int>& seq, int k_min, int k_max);

// Residual comparison: straight line in log-log axes vs semilog axes,
// whichever fits better. Ties go to polynomial.
enum class Regime { polynomial, exponential };
Regime classify_regime(const std::vector<double>& log_seq, int k_min, int k_max);
Regime classify_regime(const std::vector<Int>& seq, int k_min, int k_max);

// A distinguished polynomial root plus the polynomial itself, coefficient i
// on x^i, kept for residual checks.
struct PolyRoot {
  double value = 0.0;
  std::vector<double> poly;
};
double eval_poly(const std::vector<double>& poly, double x);

// q_n = ((n-2) + sqrt((n-2)^2 - 4))/2, the largest root of q^2-(n-2)q+1.
// Degenerates to q = 1 at n = 4, so requires n >= 5.
PolyRoot root_qn(int n);

// Largest root of r^3 - (2n^2-1)r^2 + 2(n^2-1)r - 2 for n >= 2, by bisection
// on [1, 2n^2]: the polynomial equals -2 at r = 1 and any further real roots
// lie below 1, so the bracket isolates the largest root.
PolyRoot root_rn(int n);

// Numerical comparison of a ball-volume exponent fit against a return
// probability decay fit; the two sides agree when d_growth = -2 * walk slope.
// Evidence reporting, not a proof. When either fit is not a log-log slope the
// comparison does not apply and the verdict says so.
struct ConjectureReport {
  double d_growth = 0.0;
  double minus_two_walk_slope = 0.0;
  double difference = 0.0;
  double tolerance = 0.0;
  bool applicable = false;
  bool pass = false;
  std::string verdict;
};
ConjectureReport conjecture_report(const FitResult& growth_fit, const FitResult& walk_fit,
                                   double tolerance = 0.5);

}  // namespace qgrowth

#endif
