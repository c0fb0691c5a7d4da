#ifndef GTI_CLASSIFY_HPP
#define GTI_CLASSIFY_HPP

#include "gti/group.hpp"
#include "gti/lie.hpp"
#include "gti/simple_id.hpp"

namespace gti {

// Canonical identity of a verified-simple group: matches the order against
// cyclic primes, alternating factorials, the Lie enumeration and the sporadic
// list; the one order with two non-isomorphic simple groups at desk scale
// (20160) is split by the element-order spectrum.  No match, or an ambiguity
// the spectrum cannot split, yields unresolved(order) - never a guess.
SimpleGroupId identify_simple(const FiniteGroup& G, const LieConfig& cfg = {});

// set of element orders; refuses beyond the enumeration cap
std::vector<uint64_t> element_order_spectrum(const FiniteGroup& G);

bool in_class_B(const FiniteGroup& G, uint64_t d);
// exists an abelian normal subgroup of index <= d
bool in_class_Jor(const FiniteGroup& G, uint64_t d);
// exists an abelian normal N, |N| <= d, gcd(|N|, ell) = 1, with G/N a direct
// product (possibly empty) of simple groups of Lie type in characteristic ell
bool in_class_Lie_ell(const FiniteGroup& G, uint64_t ell, uint64_t d, const LieConfig& cfg = {});

}  // namespace gti

#endif
