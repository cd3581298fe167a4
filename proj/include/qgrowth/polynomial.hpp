#ifndef QGROWTH_POLYNOMIAL_HPP
#define QGROWTH_POLYNOMIAL_HPP

#include <initializer_list>
#include <vector>

#include "qgrowth/rational.hpp"

namespace qgrowth {

// Dense univariate polynomial over the rationals; coefficient i is the
// coefficient of z^i. Trailing zeros are trimmed, so the representation is
// canonical and operator== is exact equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit Polynomial(const Rat& constant) : coeffs_{constant} { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial{Rat(1)}; }
  // z^k with coefficient c
  static Polynomial monomial(const Rat& c, int k);

  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  // Coefficient of z^i, zero beyond the degree.
  Rat coeff(int i) const;

  Rat evaluate(const Rat& z) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rat& c) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Monic gcd over the rationals; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace qgrowth

#endif
