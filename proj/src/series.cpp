#include "qgrowth/series.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qgrowth {

namespace {

PowerSeries series_from_polynomial(const Polynomial& p, int order) {
  std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) c[static_cast<size_t>(i)] = p.coeff(i);
  return PowerSeries(std::move(c), order);
}

}  // namespace

PowerSeries expand(const RationalFunction& rf, int order) {
  if (order < 0) throw std::invalid_argument("expand: negative order");
  if (rf.denominator().coeff(0) == 0)
    throw std::domain_error("expand: pole at the origin");
  PowerSeries num = series_from_polynomial(rf.numerator(), order);
  PowerSeries den = series_from_polynomial(rf.denominator(), order);
  return num * den.inverse();
}

PowerSeries b_from_s(const PowerSeries& s) {
  std::vector<Rat> b(s.coefficients());
  for (size_t i = 1; i < b.size(); ++i) b[i] += b[i - 1];
  return PowerSeries(std::move(b), s.order());
}

RationalFunction p_invariant(const RationalFunction& s) {
  if (s.is_zero()) throw std::domain_error("p_invariant: S = 0");
  return RationalFunction::one() - s.reciprocal();
}

RationalFunction s_from_p(const RationalFunction& p) {
  RationalFunction d = RationalFunction::one() - p;
  if (d.is_zero()) throw std::domain_error("s_from_p: P = 1");
  return d.reciprocal();
}

RationalFunction q_invariant(const RationalFunction& s) {
  RationalFunction factor(Polynomial{Rat(1), Rat(1)}, Polynomial{Rat(0), Rat(1)});
  return factor * p_invariant(s);
}

RationalFunction tensor_series(const RationalFunction& s1, const RationalFunction& s2) {
  return s1 * s2;
}

RationalFunction free_series(const RationalFunction& s1, const RationalFunction& s2) {
  RationalFunction prod = s1 * s2;
  RationalFunction den = s1 + s2 - prod;
  if (den.is_zero()) throw std::domain_error("free_series: S1 + S2 - S1*S2 = 0");
  return prod / den;
}

FreeProductParts free_series_parts(const RationalFunction& s1, const RationalFunction& s2) {
  RationalFunction prod = s1 * s2;
  RationalFunction den = s1 + s2 - prod;
  if (den.is_zero()) throw std::domain_error("free_series_parts: S1 + S2 - S1*S2 = 0");
  return FreeProductParts{(prod - s2) / den, (prod - s1) / den};
}

RationalFunction free_version_series(const RationalFunction& s) {
  RationalFunction den = RationalFunction(Rat(2)) - s;
  if (den.is_zero()) throw std::domain_error("free_version_series: S = 2");
  return s / den;
}

RationalFunction closed_form(Family family, int n) {
  switch (family) {
    case Family::Ao: {
      if (n < 3) throw std::invalid_argument("closed_form: Ao requires n >= 3");
      Rat t(Int(n) * Int(n) - 2);
      Polynomial num{Rat(1), Rat(1)};
      Polynomial quad{Rat(1), -t, Rat(1)};
      Polynomial lin{Rat(1), Rat(-1)};
      return RationalFunction(num, quad * lin);
    }
    case Family::Au: {
      if (n < 2) throw std::invalid_argument("closed_form: Au requires n >= 2");
      Int n2 = Int(n) * Int(n);
      Polynomial num{Rat(1), Rat(1)};
      Polynomial den{Rat(1), Rat(1 - 2 * n2), Rat(2 * (n2 - 1)), Rat(-2)};
      return RationalFunction(num, den);
    }
    case Family::As: {
      if (n < 5) throw std::invalid_argument("closed_form: As requires n >= 5");
      Rat m(Int(n) - 2);
      Polynomial num{Rat(1), 2 * m + 2, Rat(1)};
      Polynomial quad{Rat(1), Rat(2) - m * m, Rat(1)};
      Polynomial lin{Rat(1), Rat(-1)};
      return RationalFunction(num, quad * lin);
    }
  }
  throw std::invalid_argument("closed_form: unknown family");
}

std::optional<double> growth_ratio(const RationalFunction& rf, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("growth_ratio: tol must be positive");
  const Polynomial& den = rf.denominator();
  if (den.coeff(0) == 0) throw std::domain_error("growth_ratio: pole at the origin");

  const long grid = 4096;
  Rat lo(0);
  int sign_lo = sgn(den.coeff(0));
  Rat hi;
  int sign_hi = 0;
  bool bracketed = false;
  for (long j = 1; j < grid; ++j) {
    Rat z = make_rat(Int(j), Int(grid));
    Rat v = den.evaluate(z);
    int s = sgn(v);
    if (s == 0) return 1.0 / z.get_d();
    if (s != sign_lo) {
      hi = z;
      sign_hi = s;
      bracketed = true;
      break;
    }
    lo = z;
  }
  if (!bracketed) return std::nullopt;

  // Narrow until the reciprocal is pinned: 1/lo - 1/hi = (hi-lo)/(lo*hi) < tol.
  Rat tol_rat = rat_from_double(tol);
  while (lo == 0 || hi - lo >= tol_rat * lo * hi) {
    Rat mid = (lo + hi) / 2;
    int s = sgn(den.evaluate(mid));
    if (s == 0) return 1.0 / mid.get_d();
    if (s == sign_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Rat mid = (lo + hi) / 2;
  return 1.0 / mid.get_d();
}

}  // namespace qgrowth
