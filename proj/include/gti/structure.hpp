#ifndef GTI_STRUCTURE_HPP
#define GTI_STRUCTURE_HPP

#include <cstdint>
#include <vector>

#include "gti/group.hpp"
#include "gti/simple_id.hpp"

namespace gti {

// The complete set of normal subgroups of the owner, closed under join and
// meet.  Built from joins of conjugacy-class closures (every normal subgroup
// is the join of the closures of the classes it contains).  Abelian owners
// are handled by joining cyclic closures directly, so the class-count cap
// does not apply to them; the member count is capped instead.
struct NormalLattice {
  FiniteGroup owner;
  std::vector<FiniteGroup> members;            // sorted by (order, generator encoding); [0] trivial
  std::vector<std::vector<bool>> below;        // below[i][j]: members[i] <= members[j]
  std::vector<std::vector<uint32_t>> join_of;  // indices
  std::vector<std::vector<uint32_t>> meet_of;

  size_t size() const { return members.size(); }
  size_t owner_index() const;
  std::vector<size_t> maximal_proper() const;  // maximal elements below the owner
};

NormalLattice normal_lattice(const FiniteGroup& G);

std::vector<FiniteGroup> maximal_normal_subgroups(const FiniteGroup& G);

// S_ell(G): the smallest normal subgroup of index prime to ell, equivalently
// the subgroup generated by all elements of ell-power order
FiniteGroup ell_plus(const FiniteGroup& G, uint64_t ell);

// O_ell(G): the largest normal ell-subgroup
FiniteGroup ell_core(const FiniteGroup& G, uint64_t ell);

enum class TieBreak { smallest, randomized };

// strictly descending chain G = S_0 > S_1 > ... > 1 with simple factors;
// the maximal normal subgroup is chosen smallest-order first (ties broken by
// generator encoding), or at random when tb == randomized
std::vector<FiniteGroup> composition_series(const FiniteGroup& G, TieBreak tb = TieBreak::smallest,
                                            uint64_t seed = 0);

JHMultiset jh(const FiniteGroup& G, TieBreak tb = TieBreak::smallest, uint64_t seed = 0);

// invariant factors of G/[G,G], each dividing the next; empty for perfect G
std::vector<uint64_t> abelianization(const FiniteGroup& G);

struct FsqResult {
  std::vector<SimpleGroupId> ids;  // sorted, deduplicated
  bool fast_path = false;          // lattice refused; result may be incomplete
  bool complete = true;            // fast path on an abelian group stays exact

  bool contains_id(const SimpleGroupId& id) const;
};

// finite simple quotients: {identify(G/M) : M maximal normal}
FsqResult fsq(const FiniteGroup& G);

// invariant-factor decomposition of a finite abelian group
std::vector<uint64_t> invariant_factors_of_abelian(const FiniteGroup& A);

}  // namespace gti

#endif
