#ifndef QGROWTH_FUSION_HPP
#define QGROWTH_FUSION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrowth/rational.hpp"
#include "qgrowth/rational_function.hpp"

namespace qgrowth {

using Label = std::string;

// Decomposition into irreducibles: canonical label -> positive multiplicity.
using MultiplicityVector = std::map<Label, Int>;

struct Irrep {
  Label label;
  Int dim;
  Label conj;
};

// Adds c to mv[l], erasing the entry if the result is zero.
void add_to(MultiplicityVector& mv, const Label& l, const Int& c);

// A fusion ring with a distinguished self-conjugate generating corepresentation
// u, described by its decomposition into irreducibles. Lengths, volumes and
// walk quantities are all relative to u. Implementations are immutable and
// safe to share across threads; dim() may memoize internally.
class FusionRing {
 public:
  virtual ~FusionRing() = default;

  virtual Label trivial() const = 0;
  // Decomposition of u into irreducibles with multiplicity.
  virtual MultiplicityVector generator() const = 0;
  virtual Label conjugate(const Label& v) const = 0;
  virtual Int dim(const Label& v) const = 0;
  // v tensor g for a single irreducible summand g of u. Every catalog ring
  // supports this; the free-product construction requires it of its factors.
  virtual MultiplicityVector tensor_with_letter(const Label& v, const Label& letter) const = 0;
  // v tensor u; default sums tensor_with_letter over the generator summands.
  virtual MultiplicityVector tensor_with_generator(const Label& v) const;

  Irrep irrep(const Label& v) const { return Irrep{v, dim(v), conjugate(v)}; }
  // n = dim(u).
  Int generator_dim() const;
};

Int total_dimension(const FusionRing& ring, const MultiplicityVector& mv);

// All irreducibles of length <= k, mapped to their exact length
// l(v) = min{ j : v contained in u^{tensor j} }. BFS on supports.
// state_limit > 0 aborts once more than that many irreducibles are seen.
std::map<Label, int> ball(const FusionRing& ring, int k, size_t state_limit = 0);

struct VolumeTable {
  std::vector<Int> spheres;  // s_k = sum of dim^2 over length exactly k
  std::vector<Int> balls;    // b_k = s_0 + ... + s_k
};
VolumeTable volumes(const FusionRing& ring, int K, size_t state_limit = 0);

// Truncated S = sum s_k z^k.
PowerSeries series_from_ring(const FusionRing& ring, int K, size_t state_limit = 0);

// Exact decomposition of u^{tensor k}.
MultiplicityVector multiplicities(const FusionRing& ring, int k, size_t state_limit = 0);

// Multiplicity of the trivial object in u^{tensor power}. Odd powers are
// allowed (used by the free-version degeneracy check); walk quantities use
// even ones.
Int trivial_multiplicity(const FusionRing& ring, int power, size_t state_limit = 0);

// m_j(trivial) for j = 0..max_power from a single DP run.
std::vector<Int> trivial_multiplicities_by_power(const FusionRing& ring, int max_power,
                                                 size_t state_limit = 0);

// p_k = trivial multiplicity of u^{tensor 2k} / n^{2k}, in lowest terms.
Rat return_probability(const FusionRing& ring, int k, size_t state_limit = 0);

// m_{2k}(1)^{1/(2k)} for k = 1..K; approaches n exactly for amenable duals.
std::vector<double> kesten_sequence(const FusionRing& ring, int K, size_t state_limit = 0);

// (m_{2k}(1) * b_k, n^{2k}); the first is always >= the second.
std::pair<Int, Int> cauchy_schwarz_gap(const FusionRing& ring, int k, size_t state_limit = 0);

// Least k <= cutoff with w contained in v tensor u^{tensor k}; nullopt when
// the cutoff is exceeded. d(v, trivial()) equals l(v).
std::optional<int> distance(const FusionRing& ring, const Label& v, const Label& w, int cutoff,
                            size_t state_limit = 0);

// log p_k for k = 1..k_max from the renormalized double-precision DP
// (multiplicity vectors scaled to max 1, log of the scale carried along).
// Usable far beyond the exact range, k ~ 10^4 on chain rings.
std::vector<double> log_return_probability_sequence(const FusionRing& ring, int k_max,
                                                    size_t state_limit = 0);
double log_return_probability(const FusionRing& ring, int k, size_t state_limit = 0);

}  // namespace qgrowth

#endif
