#include "gti/classify.hpp"

#include <algorithm>
#include <set>

#include "gti/field.hpp"
#include "gti/structure.hpp"

namespace gti {

std::vector<uint64_t> element_order_spectrum(const FiniteGroup& G) {
  std::set<uint64_t> orders;
  G.for_each_action(
      [&](const PermVec& p) {
        uint64_t ord = 1;
        std::vector<bool> seen(p.size(), false);
        for (uint32_t i = 0; i < p.size(); ++i) {
          if (seen[i]) continue;
          uint32_t len = 0, j = i;
          do {
            seen[j] = true;
            j = p[j];
            ++len;
          } while (j != i);
          ord = lcm_u64(ord, len);
        }
        orders.insert(ord);
        return true;
      },
      G.limits().enum_cap);
  return std::vector<uint64_t>(orders.begin(), orders.end());
}

SimpleGroupId identify_simple(const FiniteGroup& G, const LieConfig& cfg) {
  uint64_t n = G.order();
  if (n == 1) fail_input("identify_simple: the trivial group is not simple");
  bigint N = n;
  if (is_prime(n)) return resolve_identity(Identity::make_cyclic(n), N);
  {
    NormalLattice lat = normal_lattice(G);
    if (lat.size() != 2) fail_input("identify_simple: group of order " + std::to_string(n) + " is not simple");
  }

  // candidate identities by order, merged into isomorphism clusters
  std::vector<SimpleGroupId> clusters;
  auto add_candidate = [&](const Identity& id) {
    SimpleGroupId sid = resolve_identity(id, N);
    for (const SimpleGroupId& c : clusters)
      if (c.shares_identity(sid)) return;
    clusters.push_back(std::move(sid));
  };
  {
    uint64_t half_fact = 60;  // 5!/2
    for (uint32_t m = 5; m <= 25; ++m) {
      if (half_fact == n) add_candidate(Identity::make_alternating(m));
      if (half_fact >= n) break;
      half_fact = checked_mul(half_fact, m + 1);
    }
  }
  for (const LieEntry& e : enumerate_lie(n, cfg))
    if (e.order == N && e.id.kind == Identity::Kind::lie) add_candidate(e.id);
  for (const auto& [name, order] : sporadic_orders())
    if (order == N) add_candidate(Identity::make_sporadic(name));
  if (cfg.include_tits && tits_order() == N) add_candidate(Identity::make_tits());

  if (clusters.empty()) return resolve_identity(Identity::make_unresolved(N), N);
  if (clusters.size() == 1) return clusters.front();

  // two non-isomorphic simple groups share an order: at desk scale only
  // order 20160, split by the element-order spectrum (Alt8 has order 15,
  // PSL3(4) does not)
  if (n == 20160 && clusters.size() == 2) {
    std::vector<uint64_t> spec = element_order_spectrum(G);
    bool has15 = std::find(spec.begin(), spec.end(), 15ull) != spec.end();
    for (const SimpleGroupId& c : clusters) {
      bool alt = c.shares_identity(resolve_identity(Identity::make_alternating(8), N));
      if (alt == has15) return c;
    }
  }
  return resolve_identity(Identity::make_unresolved(N), N);
}

bool in_class_B(const FiniteGroup& G, uint64_t d) { return G.order() <= d; }

bool in_class_Jor(const FiniteGroup& G, uint64_t d) {
  NormalLattice lat = normal_lattice(G);
  for (const FiniteGroup& N : lat.members)
    if (N.is_abelian() && G.order() / N.order() <= d) return true;
  return false;
}

namespace {

// is Q an internal direct product of nonabelian simple groups, each of Lie
// type in characteristic ell?
bool product_of_lie_ell(const FiniteGroup& Q, uint64_t ell, const LieConfig& cfg) {
  if (Q.is_trivial()) return true;  // the empty product
  NormalLattice lat = normal_lattice(Q);
  // atoms: minimal nontrivial members (the factors, when Q is a product of
  // nonabelian simples)
  std::vector<const FiniteGroup*> atoms;
  for (size_t i = 1; i < lat.members.size(); ++i) {
    bool minimal = true;
    for (size_t j = 1; j < lat.members.size(); ++j) {
      if (j != i && lat.below[j][i]) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(&lat.members[i]);
  }
  uint64_t prod = 1;
  std::vector<GroupElement> all_gens;
  for (const FiniteGroup* A : atoms) {
    if (A->is_abelian()) return false;
    SimpleGroupId id;
    try {
      id = identify_simple(*A, cfg);
    } catch (const input_error&) {
      return false;  // an atom that is not simple rules the product shape out
    }
    if (id.is_unresolved() || !id.in_lie_characteristic(ell)) return false;
    prod = checked_mul(prod, A->order());
    for (const GroupElement& g : A->generators()) all_gens.push_back(g);
  }
  if (prod != Q.order()) return false;
  FiniteGroup joined = FiniteGroup::build(Q.domain(), std::move(all_gens), Q.limits());
  return joined.order() == Q.order();
}

}  // namespace

bool in_class_Lie_ell(const FiniteGroup& G, uint64_t ell, uint64_t d, const LieConfig& cfg) {
  if (!is_prime(ell)) fail_input("in_class_Lie_ell: ell must be prime");
  NormalLattice lat = normal_lattice(G);
  for (const FiniteGroup& N : lat.members) {
    if (!N.is_abelian()) continue;
    if (N.order() > d) continue;
    if (gcd_u64(N.order(), ell) != 1) continue;
    FiniteGroup Q = quotient(G, N).group;
    if (product_of_lie_ell(Q, ell, cfg)) return true;
  }
  return false;
}

}  // namespace gti
