#include "qgrowth/rational_function.hpp"

namespace qgrowth {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial::zero();
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  // scale so the lowest nonzero denominator coefficient is 1; for series
  // expansions at 0 this is the constant term
  Rat low(0);
  for (int i = 0; i <= den.degree(); i++) {
    if (den.coeff(i) != 0) {
      low = den.coeff(i);
      break;
    }
  }
  num_ = num.scaled(Rat(1) / low);
  den_ = den.scaled(Rat(1) / low);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

PowerSeries::PowerSeries(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order_ < 0) throw std::invalid_argument("PowerSeries: negative order");
  if (coeffs_.size() != static_cast<size_t>(order_) + 1)
    throw std::invalid_argument("PowerSeries: coefficient count must be order+1");
}

PowerSeries PowerSeries::constant(const Rat& c, int order) {
  std::vector<Rat> v(static_cast<size_t>(order) + 1, Rat(0));
  v[0] = c;
  return PowerSeries(std::move(v), order);
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("PowerSeries: cannot extend truncation");
  std::vector<Rat> v(coeffs_.begin(), coeffs_.begin() + order + 1);
  return PowerSeries(std::move(v), order);
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  int k = std::min(order_, o.order_);
  std::vector<Rat> v(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; i++) v[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)] + o.coeffs_[static_cast<size_t>(i)];
  return PowerSeries(std::move(v), k);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  int k = std::min(order_, o.order_);
  std::vector<Rat> v(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; i++) v[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)] - o.coeffs_[static_cast<size_t>(i)];
  return PowerSeries(std::move(v), k);
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  int k = std::min(order_, o.order_);
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  for (int i = 0; i <= k; i++)
    for (int j = 0; j <= k - i; j++) v[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
  return PowerSeries(std::move(v), k);
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("PowerSeries: inverse needs nonzero constant term");
  std::vector<Rat> v(static_cast<size_t>(order_) + 1, Rat(0));
  v[0] = Rat(1) / coeffs_[0];
  for (int k = 1; k <= order_; k++) {
    Rat acc(0);
    for (int j = 1; j <= k; j++) acc += coeffs_[static_cast<size_t>(j)] * v[static_cast<size_t>(k - j)];
    v[static_cast<size_t>(k)] = -acc / coeffs_[0];
  }
  return PowerSeries(std::move(v), order_);
}

}  // namespace qgrowth
