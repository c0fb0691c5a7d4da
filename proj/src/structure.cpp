#include "gti/structure.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gti/classify.hpp"
#include "gti/field.hpp"

namespace gti {

namespace {

uint64_t perm_order_of(const PermVec& p) {
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
  return ord;
}

FiniteGroup trivial_subgroup(const FiniteGroup& G) {
  return FiniteGroup::build(G.domain(), {}, G.limits());
}

// join of normal subgroups: the subgroup they generate, again normal
FiniteGroup join_groups(const FiniteGroup& G, const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<GroupElement> gens = A.generators();
  for (const GroupElement& g : B.generators()) gens.push_back(g);
  Limits lim = G.limits();
  return FiniteGroup::build(G.domain(), std::move(gens), lim);
}

bool present(const std::vector<FiniteGroup>& pool, const FiniteGroup& H) {
  for (const FiniteGroup& P : pool)
    if (P.order() == H.order() && H.is_subgroup_of(P)) return true;
  return false;
}

void sort_members(std::vector<FiniteGroup>& members) {
  std::sort(members.begin(), members.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.generator_encoding() < b.generator_encoding();
  });
}

// abelian owners: join cyclic closures of all elements (classes are
// singletons, so the class cap is replaced by a member-count cap)
std::vector<FiniteGroup> lattice_members_abelian(const FiniteGroup& G) {
  const Limits& lim = G.limits();
  if (G.order() > lim.enum_cap) fail_cap("normal lattice: abelian owner exceeds enumeration cap");
  std::vector<FiniteGroup> pool;
  pool.push_back(trivial_subgroup(G));
  G.for_each_action(
      [&](const PermVec& x) {
        for (const FiniteGroup& P : pool)
          if (P.order() == perm_order_of(x) && P.contains_action(x)) return true;
        FiniteGroup H = FiniteGroup::build(G.domain(), {G.element_from_action(x)}, lim);
        if (!present(pool, H)) pool.push_back(std::move(H));
        if (pool.size() > lim.lattice_cap) fail_cap("normal lattice: member count exceeds cap");
        return true;
      },
      lim.enum_cap);
  return pool;
}

std::vector<FiniteGroup> lattice_members_general(const FiniteGroup& G) {
  const Limits& lim = G.limits();
  std::vector<ConjClass> classes = conjugacy_classes(G);
  if (classes.size() > lim.class_cap)
    fail_cap("normal lattice: " + std::to_string(classes.size()) + " conjugacy classes exceed cap " +
             std::to_string(lim.class_cap));
  std::vector<FiniteGroup> pool;
  pool.push_back(trivial_subgroup(G));
  for (const ConjClass& c : classes) {
    if (c.rep.is_identity()) continue;
    FiniteGroup H = normal_closure(G, {c.rep});
    if (!present(pool, H)) pool.push_back(std::move(H));
  }
  return pool;
}

}  // namespace

size_t NormalLattice::owner_index() const { return members.size() - 1; }

std::vector<size_t> NormalLattice::maximal_proper() const {
  size_t top = owner_index();
  std::vector<size_t> out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i == top) continue;
    bool covered = false;
    for (size_t j = 0; j < members.size(); ++j) {
      if (j == i || j == top) continue;
      if (below[i][j]) covered = true;  // i < j < top
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

NormalLattice normal_lattice(const FiniteGroup& G) {
  const Limits& lim = G.limits();
  std::vector<FiniteGroup> pool =
      G.is_abelian() ? lattice_members_abelian(G) : lattice_members_general(G);

  // saturation under pairwise join; every unordered pair is visited once,
  // appended members get their own outer turn
  for (size_t k = 1; k < pool.size(); ++k) {
    for (size_t i = 0; i < k; ++i) {
      if (pool[i].is_subgroup_of(pool[k]) || pool[k].is_subgroup_of(pool[i])) continue;
      FiniteGroup J = join_groups(G, pool[i], pool[k]);
      if (!present(pool, J)) {
        pool.push_back(std::move(J));
        if (pool.size() > lim.lattice_cap) fail_cap("normal lattice: member count exceeds cap");
      }
    }
  }
  if (!present(pool, G)) pool.push_back(G);

  NormalLattice lat;
  lat.owner = G;
  lat.members = std::move(pool);
  sort_members(lat.members);
  size_t m = lat.members.size();
  lat.below.assign(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j) {
        lat.below[i][j] = true;
        continue;
      }
      if (lat.members[j].order() % lat.members[i].order() != 0) continue;
      lat.below[i][j] = lat.members[i].is_subgroup_of(lat.members[j]);
    }
  lat.join_of.assign(m, std::vector<uint32_t>(m, 0));
  lat.meet_of.assign(m, std::vector<uint32_t>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      uint32_t join = UINT32_MAX, meet = UINT32_MAX;
      for (size_t k = 0; k < m; ++k) {  // members sorted by order
        if (join == UINT32_MAX && lat.below[i][k] && lat.below[j][k]) join = static_cast<uint32_t>(k);
        if (lat.below[k][i] && lat.below[k][j]) meet = static_cast<uint32_t>(k);
      }
      lat.join_of[i][j] = join;
      lat.meet_of[i][j] = meet;
    }
  return lat;
}

std::vector<FiniteGroup> maximal_normal_subgroups(const FiniteGroup& G) {
  if (G.is_trivial()) return {};
  NormalLattice lat = normal_lattice(G);
  std::vector<FiniteGroup> out;
  for (size_t i : lat.maximal_proper()) out.push_back(lat.members[i]);
  return out;
}

// ---------------------------------------------------------------------------
// S_ell(G) and O_ell(G)

namespace {

// g^k for the ell'-part k of ord(g); a generator of the ell-part of <g>
GroupElement ell_part(const GroupElement& g, uint64_t ell) {
  uint64_t m = g.order();
  uint64_t m2 = m;
  while (m2 % ell == 0) m2 /= ell;
  return g.pow(m2);
}

}  // namespace

FiniteGroup ell_plus(const FiniteGroup& G, uint64_t ell) {
  if (!is_prime(ell)) fail_input("ell_plus: " + std::to_string(ell) + " is not prime");
  std::vector<GroupElement> seeds;
  for (const GroupElement& g : G.generators()) {
    GroupElement p = ell_part(g, ell);
    if (!p.is_identity()) seeds.push_back(std::move(p));
  }
  FiniteGroup N = normal_closure(G, seeds);
  while ((G.order() / N.order()) % ell == 0) {
    Quotient Qt = quotient(G, N);
    // Cauchy: the quotient has an element of order divisible by ell
    GroupElement lift = G.domain().identity();
    bool found = false;
    Qt.group.for_each_action(
        [&](const PermVec& x) {
          if (perm_order_of(x) % ell != 0) return true;
          lift = Qt.coset_reps[x[0]];
          found = true;
          return false;
        },
        Qt.group.order());
    if (!found) fail_input("internal: ell divides the index but the quotient has no ell-element");
    std::vector<GroupElement> gens = N.generators();
    gens.push_back(ell_part(lift, ell));
    N = normal_closure(G, gens);
  }
  return N;
}

FiniteGroup ell_core(const FiniteGroup& G, uint64_t ell) {
  if (!is_prime(ell)) fail_input("ell_core: " + std::to_string(ell) + " is not prime");
  std::vector<ConjClass> classes = conjugacy_classes(G);
  std::vector<GroupElement> gens;
  for (const ConjClass& c : classes) {
    if (c.rep.is_identity()) continue;
    FiniteGroup H = normal_closure(G, {c.rep});
    uint64_t o = H.order();
    while (o % ell == 0) o /= ell;
    if (o == 1)
      for (const GroupElement& g : H.generators()) gens.push_back(g);
  }
  FiniteGroup core = FiniteGroup::build(G.domain(), std::move(gens), G.limits());
  uint64_t o = core.order();
  while (o % ell == 0) o /= ell;
  if (o != 1) fail_input("internal: join of normal ell-subgroups is not an ell-group");
  return core;
}

// ---------------------------------------------------------------------------
// composition series, JH, abelianization

std::vector<FiniteGroup> composition_series(const FiniteGroup& G, TieBreak tb, uint64_t seed) {
  std::vector<FiniteGroup> series{G};
  std::mt19937_64 rng(seed);
  FiniteGroup cur = G;
  while (cur.order() > 1) {
    std::vector<FiniteGroup> maxs = maximal_normal_subgroups(cur);
    if (maxs.empty()) fail_input("internal: nontrivial group without maximal normal subgroups");
    size_t pick = 0;
    if (tb == TieBreak::randomized) {
      pick = rng() % maxs.size();
    } else {
      for (size_t i = 1; i < maxs.size(); ++i) {
        if (maxs[i].order() < maxs[pick].order() ||
            (maxs[i].order() == maxs[pick].order() &&
             maxs[i].generator_encoding() < maxs[pick].generator_encoding()))
          pick = i;
      }
    }
    cur = maxs[pick];
    series.push_back(cur);
  }
  return series;
}

namespace {

// exact for abelian groups of any size: composition factors are the prime
// factors of the order
JHMultiset jh_abelian(const FiniteGroup& G) {
  JHMultiset out;
  uint64_t n = G.order();
  for (uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.add(resolve_identity(Identity::make_cyclic(p), p));
      n /= p;
    }
  }
  if (n > 1) out.add(resolve_identity(Identity::make_cyclic(n), n));
  return out;
}

}  // namespace

JHMultiset jh(const FiniteGroup& G, TieBreak tb, uint64_t seed) {
  try {
    std::vector<FiniteGroup> series = composition_series(G, tb, seed);
    JHMultiset out;
    for (size_t i = 0; i + 1 < series.size(); ++i) {
      FiniteGroup factor = quotient(series[i], series[i + 1]).group;
      out.add(identify_simple(factor));
    }
    return out;
  } catch (const cap_error&) {
    // abelian groups stay exact beyond the lattice caps
    if (G.is_abelian()) return jh_abelian(G);
    throw;
  }
}

std::vector<uint64_t> invariant_factors_of_abelian(const FiniteGroup& A) {
  if (!A.is_abelian()) fail_input("invariant factors: group is not abelian");
  uint64_t n = A.order();
  if (n == 1) return {};
  if (n > A.limits().enum_cap) fail_cap("invariant factors: order exceeds enumeration cap");
  // prime factorization of n
  std::vector<uint64_t> primes;
  {
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  // per prime p: counts[k] = #elements of order dividing p^k
  std::map<uint64_t, std::map<uint32_t, uint64_t>> exponent_hist;  // p -> v_p(ord) -> count
  A.for_each_action(
      [&](const PermVec& x) {
        uint64_t o = perm_order_of(x);
        for (uint64_t p : primes) {
          uint32_t v = 0;
          while (o % p == 0) o /= p, ++v;
          exponent_hist[p][v] += 1;
        }
        return true;
      },
      A.limits().enum_cap);
  // partitions per prime, parts descending
  std::map<uint64_t, std::vector<uint32_t>> partitions;
  for (uint64_t p : primes) {
    auto& hist = exponent_hist[p];
    uint32_t vmax = hist.rbegin()->first;
    std::vector<uint64_t> nk(vmax + 1, 0);  // nk[k] = #x with v_p(ord x) <= k
    uint64_t acc = 0;
    for (uint32_t k = 0; k <= vmax; ++k) {
      acc += hist.count(k) ? hist[k] : 0;
      nk[k] = acc;
    }
    std::vector<uint32_t> s(vmax + 1, 0);  // s[k] = log_p nk[k]
    for (uint32_t k = 0; k <= vmax; ++k) {
      uint64_t v = nk[k];
      uint32_t e = 0;
      while (v > 1) {
        if (v % p != 0) fail_input("internal: p-group census is not a p-power");
        v /= p;
        ++e;
      }
      s[k] = e;
    }
    std::vector<uint32_t> parts;  // lambda_1 >= lambda_2 >= ...
    // parts >= k equals s[k] - s[k-1]; multiplicity of part t is the drop
    std::vector<uint32_t> ge(vmax + 2, 0);
    for (uint32_t k = 1; k <= vmax; ++k) ge[k] = s[k] - s[k - 1];
    for (uint32_t t = 1; t <= vmax; ++t)
      for (uint32_t c = 0; c < ge[t] - ge[t + 1]; ++c) parts.push_back(t);
    std::sort(parts.rbegin(), parts.rend());
    partitions[p] = parts;
  }
  size_t rows = 0;
  for (auto& [p, parts] : partitions) rows = std::max(rows, parts.size());
  std::vector<uint64_t> factors(rows, 1);
  for (auto& [p, parts] : partitions)
    for (size_t i = 0; i < parts.size(); ++i) factors[i] = checked_mul(factors[i], pow_u64(p, parts[i]));
  std::reverse(factors.begin(), factors.end());  // ascending, each divides the next
  return factors;
}

std::vector<uint64_t> abelianization(const FiniteGroup& G) {
  FiniteGroup D = derived_subgroup(G);
  if (D.order() == G.order()) return {};
  FiniteGroup Q = quotient(G, D).group;
  return invariant_factors_of_abelian(Q);
}

// ---------------------------------------------------------------------------
// FSQ

bool FsqResult::contains_id(const SimpleGroupId& id) const {
  for (const SimpleGroupId& x : ids)
    if (x.shares_identity(id)) return true;
  return false;
}

namespace {

void add_id(std::vector<SimpleGroupId>& ids, const SimpleGroupId& id) {
  for (const SimpleGroupId& x : ids)
    if (x == id) return;
  ids.push_back(id);
  std::sort(ids.begin(), ids.end());
}

// heuristic quotient hunt when the lattice is out of reach; sound (everything
// reported is a simple quotient) but possibly incomplete on the nonabelian side
FsqResult fsq_fast(const FiniteGroup& G) {
  FsqResult out;
  out.fast_path = true;
  out.complete = G.is_abelian();
  // abelian side is exact: simple quotients of G/[G,G]
  uint64_t ab = G.order();
  if (!G.is_abelian()) {
    FiniteGroup D = derived_subgroup(G);
    ab = G.order() / D.order();
  }
  {
    uint64_t m = ab;
    for (uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        add_id(out.ids, resolve_identity(Identity::make_cyclic(p), p));
        while (m % p == 0) m /= p;
      }
    if (m > 1) add_id(out.ids, resolve_identity(Identity::make_cyclic(m), m));
  }
  if (G.is_abelian()) return out;
  // nonabelian side: normal closures of sampled elements, maximal ones first
  std::mt19937_64 rng(0x5eed);
  std::vector<GroupElement> samples = G.generators();
  for (int i = 0; i < 8; ++i) samples.push_back(G.random_element(rng));
  std::vector<FiniteGroup> pool;
  for (const GroupElement& x : samples) {
    if (x.is_identity()) continue;
    FiniteGroup N = normal_closure(G, {x});
    if (N.order() == G.order()) continue;
    if (!present(pool, N)) pool.push_back(std::move(N));
  }
  for (const FiniteGroup& N : pool) {
    bool maximal_in_pool = true;
    for (const FiniteGroup& M : pool)
      if (M.order() > N.order() && N.is_subgroup_of(M)) maximal_in_pool = false;
    if (!maximal_in_pool) continue;
    try {
      FiniteGroup Q = quotient(G, N).group;
      FsqResult sub = fsq(Q);
      for (const SimpleGroupId& id : sub.ids) add_id(out.ids, id);
    } catch (const cap_error&) {
      // quotient out of reach; stay incomplete
    }
  }
  return out;
}

}  // namespace

FsqResult fsq(const FiniteGroup& G) {
  if (G.is_trivial()) return {};
  try {
    NormalLattice lat = normal_lattice(G);
    FsqResult out;
    for (size_t i : lat.maximal_proper()) {
      FiniteGroup Q = quotient(G, lat.members[i]).group;
      add_id(out.ids, identify_simple(Q));
    }
    return out;
  } catch (const cap_error&) {
    return fsq_fast(G);
  }
}

}  // namespace gti
