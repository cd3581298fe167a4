#ifndef QGROWTH_SERIES_HPP
#define QGROWTH_SERIES_HPP

#include <optional>

#include "qgrowth/rational_function.hpp"

namespace qgrowth {

// Taylor expansion at 0 to order K; the denominator must not vanish there.
PowerSeries expand(const RationalFunction& rf, int order);

// Partial sums: takes sphere counts s_k to ball counts b_k, i.e. multiplies
// the series by 1/(1-z).
PowerSeries b_from_s(const PowerSeries& s);

// P = 1 - 1/S. Additive under free products.
RationalFunction p_invariant(const RationalFunction& s);

// Inverse transform of p_invariant: S = 1/(1-P).
RationalFunction s_from_p(const RationalFunction& p);

// Q = (1 + 1/z)(1 - 1/S); constant 2n on the free group C*(F_n).
RationalFunction q_invariant(const RationalFunction& s);

// S series of a tensor product: S1 * S2.
RationalFunction tensor_series(const RationalFunction& s1, const RationalFunction& s2);

// S series of a free product: S1*S2 / (S1 + S2 - S1*S2); equivalently
// s_from_p(p_invariant(S1) + p_invariant(S2)).
RationalFunction free_series(const RationalFunction& s1, const RationalFunction& s2);

// The two components of S = 1 + C1 + C2 in the free product, split by which
// factor the leading letter lies in. Exposed for cross-checking free_series.
struct FreeProductParts {
  RationalFunction c1;
  RationalFunction c2;
};
FreeProductParts free_series_parts(const RationalFunction& s1, const RationalFunction& s2);

// S series of the free version: S / (2 - S).
RationalFunction free_version_series(const RationalFunction& s);

enum class Family { Ao, Au, As };

// Closed-form S series for the free quantum group families, in their valid
// parameter ranges (Ao: n >= 3, Au: n >= 2, As: n >= 5).
RationalFunction closed_form(Family family, int n);

// Reciprocal of the smallest positive real pole of rf in (0,1), located by
// exact-sign bisection until the bracket pins the ratio to within tol.
// Returns nullopt when no pole lies in (0,1): subexponential growth.
// Intended for series with nonnegative coefficients, where that pole is the
// radius of convergence.
std::optional<double> growth_ratio(const RationalFunction& rf, double tol);

}  // namespace qgrowth

#endif
