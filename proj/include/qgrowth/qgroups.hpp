#ifndef QGROWTH_QGROUPS_HPP
#define QGROWTH_QGROUPS_HPP

#include <memory>
#include <string>

#include "qgrowth/fusion.hpp"

namespace qgrowth {

using RingPtr = std::shared_ptr<const FusionRing>;

// Chain ring with one irreducible u_k per length k, dim u_{k+1} = n dim u_k -
// dim u_{k-1}, fusion u_k x u_1 = u_{k-1} + u_{k+1}; generator u_1 of dim n.
// n = 2 is the SU(2)-dual chain (dims k+1).
RingPtr ao_ring(int n);  // n >= 2

// Chain ring whose generator is v_0 + v_1 (dim 1 + (n-1) = n), with fusion
// v_k x v_1 = v_{k-1} + v_k + v_{k+1}, dim v_{k+1} = (n-2) dim v_k - dim v_{k-1}.
RingPtr as_ring(int n);  // n >= 4

// Group duals: irreducibles are group elements (dim 1), the generator is the
// standard symmetric generating set.
enum class GroupKind { FreeAbelian, Free };
RingPtr group_ring(GroupKind kind, int count);  // Z^r (r >= 1) or F_m (m >= 1)

// One irreducible "e"; generator = {e}. Identity for both products.
RingPtr trivial_ring();

// Irreducibles are pairs, generator = gen1 x triv + triv x gen2.
RingPtr direct_product(RingPtr a, RingPtr b);

// Irreducibles are alternating words in nontrivial irreducibles of the two
// factors; generator = image of gen1 + gen2 (factor-trivial summands collapse
// onto the empty word).
RingPtr free_product(RingPtr a, RingPtr b);

// Ball volumes of the free version of the ring, computed as the volumes of
// free_product(ring, ring), whose ball is isometric to the free-version ball
// with matching dimensions. Requires the trivial object to be absent from all
// odd powers of u; this is checked for odd powers <= 9 and a violation throws.
VolumeTable free_version_growth(const RingPtr& ring, int K, size_t state_limit = 0);

// Catalog grammar: "ao:N", "as:N", "zr:R", "free:M", "trivial",
// "prod(a,b)", "free(a,b)", "freeversion(a)".
struct CatalogEntry {
  RingPtr ring;
  std::string name;
  // freeversion objects carry growth data only (lengths and dimensions); the
  // proxy ring's multiplicities are not the free version's, so walk-type
  // quantities must not be read off it.
  bool growth_only = false;
};
CatalogEntry ring_from_spec(const std::string& spec);

}  // namespace qgrowth

#endif
