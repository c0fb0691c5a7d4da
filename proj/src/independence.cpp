#include "gti/independence.hpp"

#include <algorithm>
#include <sstream>

#include "gti/classify.hpp"
#include "gti/field.hpp"

namespace gti {

FamilySpec FamilySpec::make(std::vector<Factor> factors) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (!is_prime(factors[i].prime)) fail_input("family prime " + std::to_string(factors[i].prime));
    if (i && factors[i].prime <= factors[i - 1].prime) fail_input("family primes must be strictly increasing");
    if (!factors[i].group.valid()) fail_input("family factor group missing");
  }
  FamilySpec f;
  f.factors = std::move(factors);
  return f;
}

// ---------------------------------------------------------------------------
// ProductSubgroup

namespace {

// factor groups as permutation groups on their action domains
FiniteGroup as_perm_group(const FiniteGroup& G) {
  if (G.domain().kind == ElemKind::perm) return G;
  return matrix_to_permutation(G).group;
}

}  // namespace

ProductSubgroup ProductSubgroup::from_tuples(const FamilySpec& family,
                                             const std::vector<std::vector<GroupElement>>& tuples,
                                             const Limits& lim) {
  ProductSubgroup out;
  uint64_t product = 1;
  uint32_t total_degree = 0;
  for (const auto& f : family.factors) {
    FiniteGroup P = as_perm_group(f.group);
    product = checked_mul(product, P.order());
    total_degree += P.action_degree();
    out.factor_degrees_.push_back(P.action_degree());
    out.factor_perm_groups_.push_back(std::move(P));
  }
  if (product > lim.product_budget)
    fail_cap("product order " + std::to_string(product) + " exceeds budget " +
             std::to_string(lim.product_budget));
  std::vector<GroupElement> gens;
  for (const auto& tup : tuples) {
    if (tup.size() != family.factors.size()) fail_input("tuple needs one component per factor");
    std::vector<uint32_t> img(total_degree);
    uint32_t off = 0;
    for (size_t i = 0; i < tup.size(); ++i) {
      const FiniteGroup& Fi = out.factor_perm_groups_[i];
      if (!family.factors[i].group.contains(tup[i]))
        fail_input("tuple component lies outside factor " + std::to_string(i + 1));
      PermVec p = family.factors[i].group.action_of(tup[i]);
      for (uint32_t j = 0; j < out.factor_degrees_[i]; ++j) img[off + j] = off + p[j];
      (void)Fi;
      off += out.factor_degrees_[i];
    }
    gens.push_back(GroupElement::perm(std::move(img)));
  }
  Limits lim2 = lim;
  lim2.degree_cap = std::max(lim.degree_cap, total_degree);
  out.realization_ = FiniteGroup::build(Domain::perm(total_degree), std::move(gens), lim2);
  // projections: subgroup of each factor generated by the tuple components
  uint32_t off = 0;
  for (size_t i = 0; i < family.factors.size(); ++i) {
    std::vector<GroupElement> pgens;
    for (const auto& tup : tuples) pgens.push_back(GroupElement::perm(family.factors[i].group.action_of(tup[i])));
    Limits flim = lim;
    flim.degree_cap = std::max(lim.degree_cap, out.factor_degrees_[i]);
    out.projections_.push_back(
        FiniteGroup::build(Domain::perm(out.factor_degrees_[i]), std::move(pgens), flim));
    off += out.factor_degrees_[i];
  }
  return out;
}

ProductSubgroup ProductSubgroup::full_product(const FamilySpec& family, const Limits& lim) {
  std::vector<std::vector<GroupElement>> tuples;
  for (size_t i = 0; i < family.factors.size(); ++i) {
    for (const GroupElement& g : family.factors[i].group.generators()) {
      std::vector<GroupElement> tup;
      for (size_t j = 0; j < family.factors.size(); ++j)
        tup.push_back(j == i ? g : family.factors[j].group.domain().identity());
      tuples.push_back(std::move(tup));
    }
  }
  return from_tuples(family, tuples, lim);
}

bool ProductSubgroup::projection_surjective(size_t i) const {
  return projections_[i].order() == factor_perm_groups_[i].order();
}

// ---------------------------------------------------------------------------
// group-theoretic independence

IndependenceReport is_gt_independent(const FamilySpec& family) {
  IndependenceReport rep;
  rep.method = "criterion";
  std::vector<FsqResult> fsqs;
  for (const auto& f : family.factors) {
    try {
      fsqs.push_back(fsq(f.group));
    } catch (const cap_error& e) {
      fail_cap("fsq refused at prime " + std::to_string(f.prime) + ": " + e.what());
    }
    if (fsqs.back().fast_path) rep.fsq_fast_path = true;
  }
  for (size_t i = 0; i < family.factors.size(); ++i) {
    for (size_t j = i + 1; j < family.factors.size(); ++j) {
      for (const SimpleGroupId& a : fsqs[i].ids) {
        for (const SimpleGroupId& b : fsqs[j].ids) {
          if (a.shares_identity(b)) {
            rep.gt_independent = false;
            rep.witness = Witness{family.factors[i].prime, family.factors[j].prime, a < b ? a : b};
            return rep;
          }
        }
      }
    }
  }
  rep.gt_independent = true;
  return rep;
}

IndependenceReport is_independent(const FamilySpec& family, const ProductSubgroup& H) {
  IndependenceReport rep;
  rep.method = "brute-force";
  uint64_t product = 1;
  for (const auto& f : family.factors) product = checked_mul(product, f.group.order());
  const Limits& lim = H.realization().limits();
  if (product > lim.product_budget)
    fail_cap("product order exceeds budget " + std::to_string(lim.product_budget));
  for (size_t i = 0; i < family.factors.size(); ++i)
    rep.projections_onto.push_back(H.projection_surjective(i));
  rep.independent = H.realization().order() == product;
  return rep;
}

SerreResult serre_reduction(const FamilySpec& family, const ProductSubgroup& H) {
  SerreResult out;
  for (size_t i = 0; i < family.factors.size(); ++i) {
    if (!H.projection_surjective(i)) {
      out.refused = true;
      out.refusal_reason =
          "projection onto factor " + std::to_string(family.factors[i].prime) + " is not surjective";
      return out;
    }
  }
  IndependenceReport gti = is_gt_independent(family);
  if (!gti.gt_independent.value_or(false)) {
    out.refused = true;
    std::ostringstream os;
    os << "family is not group theoretically independent";
    if (gti.witness)
      os << " (witness " << gti.witness->shared.display() << " at " << gti.witness->ell1 << ","
         << gti.witness->ell2 << ")";
    out.refusal_reason = os.str();
    return out;
  }
  // Induction, two factors at a time.  H projects onto G_1 and onto the tail
  // product; a common simple quotient of the two sides would be a member of
  // fsq(G_1) shared with some fsq(G_i), i >= 2, and there is none.  So each
  // step is the full product and the induction closes.
  for (size_t i = 0; i + 1 < family.factors.size(); ++i) {
    std::ostringstream os;
    os << "step " << i + 1 << ": G_" << family.factors[i].prime
       << " x tail: onto both, fsq disjoint from fsq(tail) subset of union of the remaining fsq";
    out.certificate.push_back(os.str());
  }
  out.verdict = true;
  return out;
}

// ---------------------------------------------------------------------------
// instance checks of the lifting lemma and the point-group proposition

GoingupReport goingup_check(const FiniteGroup& G, uint64_t ell, const FiniteGroup& N, uint64_t jprime,
                            const LieConfig& cfg) {
  if (!is_prime(ell)) fail_input("goingup_check: ell must be prime");
  if (ell <= jprime) fail_input("goingup_check needs ell > jprime");
  FiniteGroup Gplus = ell_plus(G, ell);
  if (!N.is_subgroup_of(Gplus) || !N.is_normal_in(Gplus))
    fail_input("goingup_check: N is not a normal subgroup of G+");
  if (!N.is_normal_in(G))
    fail_input("goingup_check: N must be normal in G for JH(G/N) to make sense");
  GoingupReport rep;
  FiniteGroup Q = N.order() == G.order() ? FiniteGroup::build(G.domain(), {}, G.limits())
                                         : quotient(G, N).group;
  JHMultiset factors = jh(Q);
  rep.hypothesis = true;
  for (const SimpleGroupId& id : factors.id_set()) {
    if (id.in_lie_characteristic(ell)) {
      rep.hypothesis = false;
      rep.detail = "jh(G/N) meets Lie_" + std::to_string(ell) + " at " + id.display();
      break;
    }
  }
  FiniteGroup Nplus = ell_plus(N, ell);
  rep.conclusion = Nplus.order() == N.order();
  rep.implication = !rep.hypothesis || rep.conclusion;
  (void)cfg;
  return rep;
}

GtpropReport gtprop_check(const FiniteGroup& G, uint64_t ell) {
  if (!is_prime(ell)) fail_input("gtprop_check: ell must be prime");
  GtpropReport rep;
  FiniteGroup Gplus = ell_plus(G, ell);
  FiniteGroup Q =
      Gplus.order() == G.order() ? FiniteGroup::build(G.domain(), {}, G.limits()) : quotient(G, Gplus).group;
  rep.quotient_order = Q.order();
  rep.abelian = Q.is_abelian();
  rep.coprime = gcd_u64(Q.order(), ell) == 1;
  if (rep.abelian && !Q.is_trivial()) rep.invariants = invariant_factors_of_abelian(Q);
  return rep;
}

// ---------------------------------------------------------------------------
// certification

CertifyReport certify_family(const FamilySpec& family, uint64_t ell0, const LieConfig& cfg) {
  CertifyReport rep;
  std::vector<FsqResult> fsqs;
  for (const auto& f : family.factors) {
    FsqResult fs = fsq(f.group);
    for (const SimpleGroupId& id : fs.ids) {
      bool is_z_ell = id.is_cyclic() && id.cyclic_prime() == f.prime;
      bool in_lie = id.in_lie_characteristic(f.prime);
      bool small_regime = f.prime <= ell0;
      bool ok = small_regime ? is_z_ell : (is_z_ell || in_lie);
      std::ostringstream os;
      os << "prime=" << f.prime << " id=" << id.display() << " contained="
         << (ok ? "true" : "false") << " via=" << (is_z_ell ? "Z/ell" : (in_lie ? "Lie_ell" : "none"));
      rep.containments.push_back(os.str());
      if (!ok) {
        rep.certified = false;
        rep.failing_prime = f.prime;
        rep.failing_id = id.display();
        return rep;
      }
    }
    fsqs.push_back(std::move(fs));
  }
  // pairwise disjointness: Z/ell differ across primes, Lie members are
  // nonabelian, and the cross-characteristic alias coincidences are checked
  // explicitly rather than assumed away
  for (size_t i = 0; i < family.factors.size(); ++i)
    for (size_t j = i + 1; j < family.factors.size(); ++j)
      for (const SimpleGroupId& a : fsqs[i].ids)
        for (const SimpleGroupId& b : fsqs[j].ids)
          if (a.shares_identity(b)) {
            rep.certified = false;
            rep.failing_prime = family.factors[j].prime;
            rep.failing_id = a.display();
            rep.containments.push_back("collision between primes " +
                                       std::to_string(family.factors[i].prime) + " and " +
                                       std::to_string(family.factors[j].prime) + " at " + a.display());
            return rep;
          }
  rep.certified = true;
  rep.gt_independent = true;
  (void)cfg;
  return rep;
}

}  // namespace gti
