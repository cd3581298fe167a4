#include "qgrowth/polynomial.hpp"

#include <sstream>

namespace qgrowth {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rat& c, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Rat Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat Polynomial::evaluate(const Rat& z) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); i++) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); i++) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Rat> out(coeffs_);
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& c) const {
  std::vector<Rat> out(coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); i++)
    for (size_t j = 0; j < o.coeffs_.size(); j++) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rat> rem(coeffs_);
  int dd = divisor.degree();
  int dq = degree() - dd;
  if (dq < 0) return {zero(), *this};
  std::vector<Rat> quot(static_cast<size_t>(dq) + 1, Rat(0));
  const Rat& lead = divisor.coeffs_[static_cast<size_t>(dd)];
  for (int i = dq; i >= 0; i--) {
    Rat c = rem[static_cast<size_t>(i + dd)] / lead;
    quot[static_cast<size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; j++) rem[static_cast<size_t>(i + j)] -= c * divisor.coeffs_[static_cast<size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= degree(); i++) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (os.tellp() > 0) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (i == 0 || a != 1) os << rat_to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic normalization makes the gcd canonical
  return a.scaled(Rat(1) / a.coefficients().back());
}

}  // namespace qgrowth
