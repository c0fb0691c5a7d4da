#ifndef GTI_INDEPENDENCE_HPP
#define GTI_INDEPENDENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gti/group.hpp"
#include "gti/lie.hpp"
#include "gti/structure.hpp"

namespace gti {

// A family of finite groups indexed by strictly increasing primes.
struct FamilySpec {
  struct Factor {
    uint64_t prime;
    FiniteGroup group;
    std::string name;
  };
  std::vector<Factor> factors;

  static FamilySpec make(std::vector<Factor> factors);  // validates ordering
  size_t size() const { return factors.size(); }
};

// A subgroup of the direct product of the factors, generated by tuples and
// realized as a permutation group on the disjoint union of factor domains.
class ProductSubgroup {
public:
  // tuples[t][i] = component of tuple t in factor i
  static ProductSubgroup from_tuples(const FamilySpec& family,
                                     const std::vector<std::vector<GroupElement>>& tuples,
                                     const Limits& lim = {});
  // the full product, generated by component-padded factor generators
  static ProductSubgroup full_product(const FamilySpec& family, const Limits& lim = {});

  const FiniteGroup& realization() const { return realization_; }
  size_t num_factors() const { return factor_degrees_.size(); }
  // subgroup of factor i generated by the tuple components
  const FiniteGroup& projection(size_t i) const { return projections_[i]; }
  bool projection_surjective(size_t i) const;

private:
  FiniteGroup realization_;
  std::vector<FiniteGroup> projections_;
  std::vector<FiniteGroup> factor_perm_groups_;
  std::vector<uint32_t> factor_degrees_;
};

struct Witness {
  uint64_t ell1, ell2;
  SimpleGroupId shared;
};

struct IndependenceReport {
  std::optional<bool> gt_independent;
  std::optional<bool> independent;
  std::optional<Witness> witness;     // present when gt_independent == false
  std::string method;                 // brute-force | criterion | both-agree
  std::vector<bool> projections_onto; // per factor, when computed
  bool fsq_fast_path = false;         // some factor used the fsq fast path
};

// no two factors share a finite simple quotient (alias-aware); on failure the
// lexicographically first witness pair is reported
IndependenceReport is_gt_independent(const FamilySpec& family);

// H = the full product? decided exactly via the stabilizer chain order on the
// disjoint-union action; refuses when the product order exceeds the budget
IndependenceReport is_independent(const FamilySpec& family, const ProductSubgroup& H);

struct SerreResult {
  bool refused = false;
  std::string refusal_reason;
  bool verdict = false;
  std::vector<std::string> certificate;  // one line per induction step
};

// certifies H = product without computing the product order: surjective
// projections + pairwise disjoint simple quotients imply fullness, two
// factors at a time
SerreResult serre_reduction(const FamilySpec& family, const ProductSubgroup& H);

struct GoingupReport {
  bool hypothesis = false;   // jh-set(G/N) misses Lie_ell entirely
  bool conclusion = false;   // ell_plus(N) == N
  bool implication = false;  // hypothesis => conclusion, on this instance
  std::string detail;
};

// instance check of the lifting lemma; requires ell > jprime and N normal in
// both G+ and G
GoingupReport goingup_check(const FiniteGroup& G, uint64_t ell, const FiniteGroup& N, uint64_t jprime,
                            const LieConfig& cfg = {});

struct GtpropReport {
  uint64_t quotient_order = 0;
  bool abelian = false;
  bool coprime = false;
  std::vector<uint64_t> invariants;
  bool declared_connected = true;  // caller's declaration, echoed in the report
  bool passed() const { return abelian && coprime; }
};

// computes G/S_ell(G) and checks it is abelian of order prime to ell
GtpropReport gtprop_check(const FiniteGroup& G, uint64_t ell);

struct CertifyReport {
  bool certified = false;
  uint64_t failing_prime = 0;          // when refused
  std::string failing_id;              // offending quotient id
  std::vector<std::string> containments;  // every containment checked
  bool gt_independent = false;
};

// per factor: fsq(G_ell) must lie in Lie_ell + {Z/ell} (just {Z/ell} for
// ell <= ell0); success concludes group-theoretic independence via pairwise
// disjointness and records each containment checked
CertifyReport certify_family(const FamilySpec& family, uint64_t ell0, const LieConfig& cfg = {});

}  // namespace gti

#endif
