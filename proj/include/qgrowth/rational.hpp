#ifndef QGROWTH_RATIONAL_HPP
#define QGROWTH_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgrowth {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Natural log of a positive big integer, safe far beyond double range.
inline double log_int(const Int& v) {
  if (v <= 0) throw std::domain_error("log_int: nonpositive argument");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

inline double log_rat(const Rat& v) {
  if (v <= 0) throw std::domain_error("log_rat: nonpositive argument");
  return log_int(v.get_num()) - log_int(v.get_den());
}

// "p/q" with the "/q" omitted for integers; canonical and deterministic.
inline std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Exact rational from a double (doubles are dyadic rationals).
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rat_from_double: non-finite");
  Rat r(x);
  r.canonicalize();
  return r;
}

}  // namespace qgrowth

#endif
