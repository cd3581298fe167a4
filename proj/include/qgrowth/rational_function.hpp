#ifndef QGROWTH_RATIONAL_FUNCTION_HPP
#define QGROWTH_RATIONAL_FUNCTION_HPP

#include <vector>

#include "qgrowth/polynomial.hpp"

namespace qgrowth {

// Quotient of polynomials kept in a canonical form: numerator and denominator
// coprime, and the lowest-order nonzero coefficient of the denominator scaled
// to 1. Equality of canonical forms is then exact equality of functions.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::one()) {}
  explicit RationalFunction(const Rat& c) : RationalFunction(Polynomial(c), Polynomial::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Rat(1)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction reciprocal() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Polynomial num_, den_;
};

// Truncated power series with exact rational coefficients c_0..c_K; K is the
// order and every arithmetic operation truncates to the smaller order of its
// operands, never reading beyond it.
class PowerSeries {
 public:
  PowerSeries(std::vector<Rat> coeffs, int order);
  static PowerSeries constant(const Rat& c, int order);

  int order() const { return order_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  const Rat& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;  // truncated Cauchy product
  // Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  PowerSeries truncated(int order) const;

  bool operator==(const PowerSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
  bool operator!=(const PowerSeries& o) const { return !(*this == o); }

 private:
  std::vector<Rat> coeffs_;
  int order_;
};

}  // namespace qgrowth

#endif
