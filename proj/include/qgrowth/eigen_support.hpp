#ifndef QGROWTH_EIGEN_SUPPORT_HPP
#define QGROWTH_EIGEN_SUPPORT_HPP

#include <Eigen/Core>
#include <stdexcept>

#include "qgrowth/rational.hpp"

namespace Eigen {

// Exact rational scalar for Eigen matrices; no epsilon, comparisons are exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace qgrowth {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Exact Gauss-Jordan inverse; pivots on the first nonzero entry, no scaling
// heuristics. Throws on a singular input.
inline RatMat exact_inverse(RatMat a) {
  const auto n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("exact_inverse: matrix not square");
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("exact_inverse: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rat p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace qgrowth

#endif
