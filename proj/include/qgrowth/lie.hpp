#ifndef QGROWTH_LIE_HPP
#define QGROWTH_LIE_HPP

#include <map>
#include <string>
#include <vector>

#include "qgrowth/eigen_support.hpp"
#include "qgrowth/fusion.hpp"
#include "qgrowth/rational.hpp"

namespace qgrowth {

enum class LieType { A, B, C, D, G2 };

// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<long>;

// Root datum of a simple compact group, realized with exact rational
// coordinates. Dominant weights are the nonnegative integer combinations of
// the fundamental weights; the length of such a weight is the sum of its
// coordinates, and spheres/balls are taken with respect to that length.
struct RootSystem {
  LieType type;
  int rank;
  std::string name;
  int ambient;                   // dimension of the ambient rational realization
  RatMat simple;                 // ambient x rank, column j = simple root b_j
  RatMat fundamental;            // ambient x rank, column i = fundamental weight w_i
  RatVec rho;                    // sum of the fundamental weights
  RatMat cartan;                 // cartan(i, j) = 2 (b_i | b_j) / (b_j | b_j)
  RatMat gram;                   // gram(i, j) = (w_i | w_j)
  std::vector<Weight> positive;  // positive roots in weight coordinates
  Int weyl_order;

  int root_count() const { return 2 * static_cast<int>(positive.size()); }  // s
  int dimension() const { return rank + root_count(); }                     // d = r + s

  // (x | y) for weight-coordinate vectors, via the Gram matrix.
  Rat inner(const Weight& x, const Weight& y) const;
};

// Standard rational realizations: A_r (r >= 1), B_r (r >= 2), C_r (r >= 2),
// D_r (r >= 3), G2. The full root set is the reflection closure of the simple
// roots; construction self-checks orthogonality of weights against roots,
// integrality of root coordinates and the expected root count.
RootSystem build_root_system(LieType type, int rank);

// "A1", "B3", "G2", ... as accepted on the command line.
RootSystem root_system_by_name(const std::string& name);

// dim(lambda) = prod over positive roots a of (lambda + rho | a) / (rho | a),
// exact and asserted integral. Throws on a non-dominant weight.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Dominant weights of length exactly k: compositions of k into rank parts,
// in lexicographic order.
std::vector<Weight> sphere_weights(const RootSystem& rs, int k);

// s_k = sum of dim(lambda)^2 over the length-k dominant weights, b_k partial
// sums. threads > 1 distributes k values; exact arithmetic keeps the result
// identical to the sequential order.
VolumeTable lie_volumes(const RootSystem& rs, int K, int threads = 1);

// Weight multiset of the irreducible with highest weight w_i (0-based i), by
// Freudenthal's recursion level by level; size equals weyl_dim(w_i).
std::vector<Weight> fundamental_weight_system(const RootSystem& rs, int i);

// Steps of the canonical lattice walk: the weights of the direct sum of all
// fundamental representations, with multiplicity. n = number of steps.
std::vector<Weight> walk_steps(const RootSystem& rs);

// Fourier coefficients of the Weyl density prod over all roots a of
// (e_a - 1): a signed integer measure with value weyl_order at 0, total mass
// zero, symmetric under negation. Guarded to root counts s <= 16.
std::map<Weight, Int> delta_hat(const RootSystem& rs);

struct LatticeDistribution {
  std::map<Weight, Rat> support;  // exact point probabilities, summing to 1
};

// Distribution of S_m, the sum of m i.i.d. uniform draws from steps.
LatticeDistribution lattice_walk(const RootSystem& rs, const std::vector<Weight>& steps, int m);

// p_k = weyl_order^{-1} sum_a delta_hat(-a) P(S_{2k} = a), exact in (0, 1].
// p_k * n^{2k} is the multiplicity of the trivial representation in the 2k-th
// tensor power of the step representation.
Rat lie_return_probability(const RootSystem& rs, int k);

// p_1..p_{k_max} from a single exact dense convolution run.
std::vector<Rat> lie_return_probability_sequence(const RootSystem& rs, int k_max);

// log p_1..log p_{k_max} from the double-precision dense convolution; usable
// far beyond the exact range (k ~ 10^3). Rank <= 2.
std::vector<double> lie_return_probability_log_sequence(const RootSystem& rs, int k_max);

// Covariance of one uniform step in weight coordinates: M = (1/n) sum a a^T.
// The walk's quadratic form is q1(x) = 4 pi^2 x^T M x; the 4 pi^2 multiplier
// is kept symbolic, not folded into the returned matrix.
RatMat covariance_of_steps(const std::vector<Weight>& steps);
RatMat covariance_form(const RootSystem& rs);

// Index in Z^rank of the lattice generated by differences of walk steps. The
// walk is supported on a coset of that lattice, so the local limit of
// (2k)^{d/2} p_k carries this factor.
Int alignment_index(const RootSystem& rs);

// lim (2k)^{d/2} p_k = alignment_index * weyl_order^{-1} *
// int q2(x) exp(-q1(x)/2) dx over R^rank, with q2(x) = (prod over positive a
// of 2 pi <a, x>)^2. Gauss-Hermite quadrature after diagonalizing q1; the
// integrand is polynomial times Gaussian, so modest node counts are exact.
// Throws if refining the node count moves the value. Rank <= 2.
double gaussian_limit_constant(const RootSystem& rs, int nodes = 40);

// Float oracle for p_k: weyl_order^{-1} n^{-2k} int over the torus of
// chi(t)^{2k} delta(t) dt, by a midpoint rule that is exact once the grid
// exceeds the trigonometric bandwidth. grid = 0 picks that size; a smaller
// explicit grid throws. Rank <= 2, k <= 8.
double torus_quadrature_pk(const RootSystem& rs, int k, int grid = 0);

}  // namespace qgrowth

#endif
