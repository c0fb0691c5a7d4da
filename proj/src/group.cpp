#include "gti/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gti {

namespace {

inline bool is_id(const PermVec& a) {
  for (uint32_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

inline void compose_into(PermVec& out, const PermVec& a, const PermVec& b) {
  // out = a after b: out(x) = a(b(x))
  const size_t n = a.size();
  out.resize(n);
  for (size_t i = 0; i < n; ++i) out[i] = a[b[i]];
}

inline PermVec compose(const PermVec& a, const PermVec& b) {
  PermVec out;
  compose_into(out, a, b);
  return out;
}

inline PermVec invert(const PermVec& a) {
  PermVec out(a.size());
  for (uint32_t i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

inline PermVec identity_perm(uint32_t n) {
  PermVec p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

struct PermHash {
  size_t operator()(const PermVec& p) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

constexpr uint64_t kChainMemoryCap = 1'500'000'000;  // bytes of transversal storage

}  // namespace

// ---------------------------------------------------------------------------
// Domain

uint64_t Domain::action_degree() const {
  if (kind == ElemKind::perm) return n;
  uint64_t d = 1;
  for (uint32_t i = 0; i < n; ++i) d = checked_mul(d, q);
  return d - 1;
}

std::string Domain::describe() const {
  if (kind == ElemKind::perm) return "perm " + std::to_string(n);
  return "matrix " + std::to_string(n) + " over F_" + std::to_string(q);
}

GroupElement Domain::identity() const {
  return kind == ElemKind::perm ? GroupElement::perm_identity(n) : GroupElement::matrix_identity(n, q);
}

std::vector<uint32_t> vector_of_point(const Domain& dom, uint32_t point) {
  std::vector<uint32_t> v(dom.n);
  uint64_t e = point + 1;
  for (uint32_t i = 0; i < dom.n; ++i) {
    v[i] = static_cast<uint32_t>(e % dom.q);
    e /= dom.q;
  }
  return v;
}

uint32_t point_of_vector(const Domain& dom, const std::vector<uint32_t>& v) {
  uint64_t e = 0;
  for (uint32_t i = dom.n; i-- > 0;) e = e * dom.q + v[i];
  if (e == 0) fail_input("zero vector has no point label");
  return static_cast<uint32_t>(e - 1);
}

// ---------------------------------------------------------------------------
// StabChain

void StabChain::init(uint32_t degree) {
  degree_ = degree;
  sgens_.clear();
  levels_.clear();
}

void StabChain::extend_orbit(size_t lvl) {
  Level& L = levels_[lvl];
  static thread_local PermVec scratch;
  size_t head = 0;
  while (head < L.orbit.size()) {
    uint32_t p = L.orbit[head];
    int32_t ppos = L.pos[p];
    for (uint32_t gid : L.gen_ids) {
      const PermVec& g = sgens_[gid];
      uint32_t np = g[p];
      if (L.pos[np] >= 0) continue;
      L.pos[np] = static_cast<int32_t>(L.orbit.size());
      L.orbit.push_back(np);
      compose_into(scratch, g, L.trans[ppos]);
      L.trans.push_back(scratch);
      L.trans_inv.push_back(invert(scratch));
      trans_bytes_ += 2ull * degree_ * 4;
    }
    ++head;
  }
}

std::pair<PermVec, size_t> StabChain::sift(const PermVec& g) const {
  PermVec r = g;
  static thread_local PermVec tmp;
  for (size_t lvl = 0; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    uint32_t p = r[L.base_point];
    if (p == L.base_point) continue;
    int32_t idx = L.pos[p];
    if (idx < 0) return {std::move(r), lvl};
    compose_into(tmp, L.trans_inv[idx], r);
    r.swap(tmp);
  }
  return {std::move(r), levels_.size()};
}

bool StabChain::contains(const PermVec& g) const {
  auto [r, lvl] = sift(g);
  return lvl == levels_.size() && is_id(r);
}

uint64_t StabChain::order() const {
  uint64_t o = 1;
  for (const Level& L : levels_) o = checked_mul(o, L.orbit.size());
  return o;
}

// registers r once and activates it at levels [first, last], creating the
// deepest level when last == levels_.size(); r must fix bases 0..last-1
void StabChain::add_at_level(const PermVec& r, size_t first, size_t last) {
  if (last == levels_.size()) {
    Level L;
    uint32_t base = 0;
    while (base < degree_ && r[base] == base) ++base;
    L.base_point = base;
    L.pos.assign(degree_, -1);
    L.pos[base] = 0;
    L.orbit.push_back(base);
    L.trans.push_back(identity_perm(degree_));
    L.trans_inv.push_back(identity_perm(degree_));
    levels_.push_back(std::move(L));
    trans_bytes_ += 2ull * degree_ * 4;
  }
  sgens_.push_back(r);
  uint32_t gid = static_cast<uint32_t>(sgens_.size()) - 1;
  for (size_t m = first; m <= last; ++m) {
    levels_[m].gen_ids.push_back(gid);
    levels_[m].processed.push_back(0);
  }
}

void StabChain::add_generator(const PermVec& g) {
  if (g.size() != degree_) fail_input("generator degree mismatch");
  if (is_id(g)) return;
  auto [r, lvl] = sift(g);
  if (lvl == levels_.size() && is_id(r)) return;
  add_at_level(r, 0, lvl);
  dirty_ = true;
  close();
}

bool StabChain::has_pending(size_t lvl) const {
  const Level& L = levels_[lvl];
  for (size_t j = 0; j < L.gen_ids.size(); ++j)
    if (L.processed[j] < L.orbit.size()) return true;
  return false;
}

// processes every pending (generator, orbit point) Schreier pair at lvl;
// residues that fail to sift are registered at the deeper levels they fix
bool StabChain::process_one(size_t lvl) {
  extend_orbit(lvl);
  bool added = false;
  static thread_local PermVec tmp1, tmp2;
  for (size_t j = 0; j < levels_[lvl].gen_ids.size(); ++j) {
    while (levels_[lvl].processed[j] < levels_[lvl].orbit.size()) {
      size_t i = levels_[lvl].processed[j]++;
      uint32_t gid = levels_[lvl].gen_ids[j];
      uint32_t p = levels_[lvl].orbit[i];
      uint32_t gp = sgens_[gid][p];
      compose_into(tmp1, sgens_[gid], levels_[lvl].trans[i]);
      PermVec s = compose(levels_[lvl].trans_inv[levels_[lvl].pos[gp]], tmp1);
      if (is_id(s)) continue;
      size_t at = lvl + 1;
      for (; at < levels_.size(); ++at) {
        uint32_t bp = s[levels_[at].base_point];
        if (bp == levels_[at].base_point) continue;
        int32_t idx = levels_[at].pos[bp];
        if (idx < 0) break;
        compose_into(tmp2, levels_[at].trans_inv[idx], s);
        s.swap(tmp2);
      }
      if (is_id(s)) continue;
      add_at_level(s, lvl + 1, at);
      if (trans_bytes_ > kChainMemoryCap) fail_cap("stabilizer chain exceeds memory budget");
      added = true;
    }
  }
  return added;
}

void StabChain::close() {
  if (!dirty_) return;
  bool work = true;
  while (work) {
    work = false;
    for (size_t lvl = levels_.size(); lvl-- > 0;) {
      extend_orbit(lvl);
      if (has_pending(lvl)) {
        process_one(lvl);
        work = true;
        break;  // rescan from the deepest level
      }
    }
  }
  dirty_ = false;
}

void StabChain::for_each_element(const std::function<bool(const PermVec&)>& fn, uint64_t cap) const {
  if (order() > cap) fail_cap("element enumeration beyond cap " + std::to_string(cap));
  if (levels_.empty()) {
    fn(identity_perm(degree_));
    return;
  }
  // forward transversals are rebuilt locally (finalize drops them)
  std::vector<std::vector<PermVec>> fwd(levels_.size());
  for (size_t l = 0; l < levels_.size(); ++l) {
    fwd[l].reserve(levels_[l].trans_inv.size());
    for (const PermVec& ti : levels_[l].trans_inv) fwd[l].push_back(invert(ti));
  }
  std::vector<PermVec> acc(levels_.size() + 1);
  acc[0] = identity_perm(degree_);
  std::function<bool(size_t)> rec = [&](size_t lvl) -> bool {
    if (lvl == levels_.size()) return fn(acc[lvl]);
    for (size_t i = 0; i < fwd[lvl].size(); ++i) {
      compose_into(acc[lvl + 1], acc[lvl], fwd[lvl][i]);
      if (!rec(lvl + 1)) return false;
    }
    return true;
  };
  rec(0);
}

void StabChain::finalize() {
  close();
  for (Level& L : levels_) {
    L.trans.clear();
    L.trans.shrink_to_fit();
    L.processed.clear();
  }
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Impl {
  Domain dom;
  std::vector<GroupElement> gens;
  Limits lim;
  StabChain chain;
  uint64_t order = 1;
};

namespace {

PermVec action_perm_of(const Domain& dom, const GroupElement& g) {
  if (dom.kind == ElemKind::perm) return g.images();
  const Field& F = Field::get(dom.q);
  uint64_t deg = dom.action_degree();
  PermVec img(deg);
  std::vector<uint32_t> v(dom.n), w(dom.n);
  for (uint64_t p = 0; p < deg; ++p) {
    uint64_t e = p + 1;
    for (uint32_t i = 0; i < dom.n; ++i) {
      v[i] = static_cast<uint32_t>(e % dom.q);
      e /= dom.q;
    }
    for (uint32_t r = 0; r < dom.n; ++r) {
      uint32_t acc = 0;
      for (uint32_t c = 0; c < dom.n; ++c) acc = F.add(acc, F.mul(g.entry(r, c), v[c]));
      w[r] = acc;
    }
    uint64_t enc = 0;
    for (uint32_t i = dom.n; i-- > 0;) enc = enc * dom.q + w[i];
    img[p] = static_cast<uint32_t>(enc - 1);
  }
  return img;
}

void check_gen_shape(const Domain& dom, const GroupElement& g) {
  bool ok = (dom.kind == g.kind()) &&
            (dom.kind == ElemKind::perm ? g.degree() == dom.n : (g.dim() == dom.n && g.field_size() == dom.q));
  if (!ok) fail_input("generator does not match the group domain (" + dom.describe() + ")");
}

}  // namespace

FiniteGroup FiniteGroup::build(const Domain& dom, std::vector<GroupElement> gens, const Limits& lim) {
  uint64_t deg = dom.action_degree();
  if (deg > lim.degree_cap)
    fail_cap("action degree " + std::to_string(deg) + " exceeds cap " + std::to_string(lim.degree_cap));
  for (const GroupElement& g : gens) check_gen_shape(dom, g);
  auto impl = std::make_shared<Impl>();
  impl->dom = dom;
  impl->gens = std::move(gens);
  impl->lim = lim;
  impl->chain.init(static_cast<uint32_t>(deg));
  for (const GroupElement& g : impl->gens) impl->chain.add_generator(action_perm_of(dom, g));
  impl->chain.finalize();
  impl->order = impl->chain.order();
  FiniteGroup G;
  G.impl_ = std::move(impl);
  return G;
}

FiniteGroup FiniteGroup::adopt(const Domain& dom, std::vector<GroupElement> gens, StabChain chain,
                               const Limits& lim) {
  auto impl = std::make_shared<Impl>();
  impl->dom = dom;
  impl->gens = std::move(gens);
  impl->lim = lim;
  impl->chain = std::move(chain);
  impl->chain.finalize();
  impl->order = impl->chain.order();
  FiniteGroup G;
  G.impl_ = std::move(impl);
  return G;
}

const Domain& FiniteGroup::domain() const { return impl_->dom; }
const std::vector<GroupElement>& FiniteGroup::generators() const { return impl_->gens; }
const Limits& FiniteGroup::limits() const { return impl_->lim; }
uint64_t FiniteGroup::order() const { return impl_->order; }
const StabChain& FiniteGroup::chain() const { return impl_->chain; }
uint32_t FiniteGroup::action_degree() const { return impl_->chain.degree(); }

bool FiniteGroup::is_abelian() const {
  const auto& gens = impl_->gens;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

PermVec FiniteGroup::action_of(const GroupElement& g) const {
  check_gen_shape(impl_->dom, g);
  return action_perm_of(impl_->dom, g);
}

GroupElement FiniteGroup::element_from_action(const PermVec& p) const {
  const Domain& dom = impl_->dom;
  if (dom.kind == ElemKind::perm) return GroupElement::perm(p);
  // column j of the matrix is the image vector of the unit vector e_j
  std::vector<uint32_t> entries(static_cast<size_t>(dom.n) * dom.n, 0);
  uint64_t unit = 1;
  for (uint32_t j = 0; j < dom.n; ++j) {
    uint32_t pt = static_cast<uint32_t>(unit - 1);
    std::vector<uint32_t> w = vector_of_point(dom, p[pt]);
    for (uint32_t r = 0; r < dom.n; ++r) entries[r * dom.n + j] = w[r];
    unit *= dom.q;
  }
  return GroupElement::matrix(dom.n, dom.q, std::move(entries));
}

bool FiniteGroup::contains(const GroupElement& g) const { return impl_->chain.contains(action_of(g)); }
bool FiniteGroup::contains_action(const PermVec& p) const { return impl_->chain.contains(p); }

bool FiniteGroup::is_subgroup_of(const FiniteGroup& G) const {
  if (!(domain() == G.domain())) return false;
  for (const GroupElement& g : generators())
    if (!G.contains(g)) return false;
  return true;
}

bool FiniteGroup::same_subgroup(const FiniteGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool FiniteGroup::is_normal_in(const FiniteGroup& G) const {
  if (!is_subgroup_of(G)) return false;
  for (const GroupElement& g : G.generators()) {
    PermVec gp = G.action_of(g);
    PermVec gpi = invert(gp);
    for (const GroupElement& n : generators()) {
      PermVec np = G.action_of(n);
      if (!contains_action(compose(gp, compose(np, gpi)))) return false;
    }
  }
  return true;
}

void FiniteGroup::for_each_action(const std::function<bool(const PermVec&)>& fn, uint64_t cap) const {
  impl_->chain.for_each_element(fn, cap);
}

std::vector<GroupElement> FiniteGroup::elements(uint64_t cap) const {
  std::vector<GroupElement> out;
  out.reserve(order() > cap ? 0 : order());
  for_each_action(
      [&](const PermVec& p) {
        out.push_back(element_from_action(p));
        return true;
      },
      cap);
  return out;
}

GroupElement FiniteGroup::random_element(std::mt19937_64& rng) const {
  const auto& gens = impl_->gens;
  GroupElement acc = impl_->dom.identity();
  if (gens.empty()) return acc;
  size_t len = 8 + rng() % 17;
  for (size_t i = 0; i < len; ++i) {
    const GroupElement& g = gens[rng() % gens.size()];
    acc = (rng() & 1) ? acc * g : acc * g.inverse();
  }
  return acc;
}

std::string FiniteGroup::generator_encoding() const {
  std::vector<std::string> parts;
  for (const GroupElement& g : impl_->gens) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (const auto& s : parts) {
    joined += s;
    joined += ';';
  }
  return joined;
}

uint64_t element_order(const GroupElement& g) { return g.order(); }

// ---------------------------------------------------------------------------
// normal closure, derived subgroup, center

FiniteGroup normal_closure(const FiniteGroup& G, const std::vector<GroupElement>& S) {
  const Domain& dom = G.domain();
  StabChain H;
  H.init(G.action_degree());
  std::vector<GroupElement> closure_gens;
  std::vector<PermVec> worklist;
  for (const GroupElement& s : S) {
    if (!G.contains(s)) fail_input("normal_closure: element outside the group");
    PermVec p = G.action_of(s);
    if (is_id(p)) continue;
    if (!H.contains(p)) {
      H.add_generator(p);
      closure_gens.push_back(s);
      worklist.push_back(std::move(p));
    }
  }
  std::vector<std::pair<PermVec, PermVec>> conj;  // (g, g^-1) action pairs
  for (const GroupElement& g : G.generators()) {
    PermVec gp = G.action_of(g);
    PermVec gpi = invert(gp);
    conj.emplace_back(std::move(gp), std::move(gpi));
  }
  while (!worklist.empty()) {
    PermVec x = std::move(worklist.back());
    worklist.pop_back();
    for (const auto& [gp, gpi] : conj) {
      PermVec y = compose(gp, compose(x, gpi));
      if (!H.contains(y)) {
        H.add_generator(y);
        closure_gens.push_back(G.element_from_action(y));
        worklist.push_back(std::move(y));
      }
    }
  }
  return FiniteGroup::adopt(dom, std::move(closure_gens), std::move(H), G.limits());
}

FiniteGroup derived_subgroup(const FiniteGroup& G) {
  std::vector<GroupElement> comms;
  const auto& gens = G.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      GroupElement c = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

FiniteGroup center(const FiniteGroup& G) {
  if (G.is_abelian()) return G;
  uint64_t cap = G.limits().enum_cap;
  if (G.order() > cap) fail_cap("center: group order exceeds enumeration cap");
  std::vector<PermVec> gen_actions;
  for (const GroupElement& g : G.generators()) gen_actions.push_back(G.action_of(g));
  StabChain Z;
  Z.init(G.action_degree());
  std::vector<GroupElement> zgens;
  G.for_each_action(
      [&](const PermVec& x) {
        for (const PermVec& g : gen_actions) {
          for (uint32_t i = 0; i < x.size(); ++i)
            if (x[g[i]] != g[x[i]]) return true;
        }
        if (!is_id(x) && !Z.contains(x)) {
          Z.add_generator(x);
          zgens.push_back(G.element_from_action(x));
        }
        return true;
      },
      cap);
  return FiniteGroup::adopt(G.domain(), std::move(zgens), std::move(Z), G.limits());
}

// ---------------------------------------------------------------------------
// conjugacy classes

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G) {
  uint64_t n = G.order();
  if (n > G.limits().enum_cap) fail_cap("conjugacy classes: group order exceeds enumeration cap");
  if (n * G.action_degree() * 4 > 2'000'000'000ull) fail_cap("conjugacy classes: element table too large");
  std::vector<PermVec> elems;
  elems.reserve(n);
  G.for_each_action(
      [&](const PermVec& p) {
        elems.push_back(p);
        return true;
      },
      n);
  std::sort(elems.begin(), elems.end());
  auto index_of = [&](const PermVec& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<size_t>(it - elems.begin());
  };
  std::vector<std::pair<PermVec, PermVec>> conj;
  for (const GroupElement& g : G.generators()) {
    PermVec gp = G.action_of(g);
    PermVec gpi = invert(gp);
    conj.emplace_back(std::move(gp), std::move(gpi));
  }
  std::vector<bool> seen(n, false);
  std::vector<ConjClass> classes;
  std::vector<size_t> queue;
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.clear();
    queue.push_back(start);
    uint64_t size = 0;
    while (!queue.empty()) {
      size_t idx = queue.back();
      queue.pop_back();
      ++size;
      for (const auto& [gp, gpi] : conj) {
        PermVec y = compose(gp, compose(elems[idx], gpi));
        size_t j = index_of(y);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    classes.push_back({G.element_from_action(elems[start]), size});
  }
  uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  if (total != n) fail_input("internal: class sizes do not sum to the group order");
  return classes;
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(FiniteGroup src, FiniteGroup dst, std::vector<GroupElement> gen_images,
                           std::function<GroupElement(const GroupElement&)> apply)
    : src_(std::move(src)), dst_(std::move(dst)), gen_images_(std::move(gen_images)), apply_(std::move(apply)) {
  if (gen_images_.size() != src_.generators().size())
    fail_input("homomorphism: one image per source generator required");
}

bool Homomorphism::verify(unsigned random_words, uint64_t seed) const {
  std::vector<GroupElement> probes = src_.generators();
  for (const PermVec& s : src_.chain().strong_generators()) probes.push_back(src_.element_from_action(s));
  for (size_t i = 0; i < src_.generators().size(); ++i)
    if (!(apply_(src_.generators()[i]) == gen_images_[i])) return false;
  auto check_pair = [&](const GroupElement& a, const GroupElement& b) {
    return apply_(a * b) == apply_(a) * apply_(b);
  };
  for (const GroupElement& a : probes)
    for (const GroupElement& b : probes)
      if (!check_pair(a, b)) return false;
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < random_words; ++i) {
    GroupElement a = src_.random_element(rng);
    GroupElement b = src_.random_element(rng);
    if (!check_pair(a, b)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// quotient

Quotient quotient(const FiniteGroup& G, const FiniteGroup& N) {
  if (!(N.domain() == G.domain())) fail_input("quotient: N lives on a different domain");
  if (!N.is_subgroup_of(G)) fail_input("quotient: N is not a subgroup of G");
  if (!N.is_normal_in(G)) fail_input("quotient: N is not normal in G");
  uint64_t index = G.order() / N.order();
  if (index > G.limits().coset_cap)
    fail_cap("quotient: coset count " + std::to_string(index) + " exceeds cap " +
             std::to_string(G.limits().coset_cap));

  uint32_t deg = G.action_degree();
  // orbit ids of N on the action domain give a cheap coset-invariant signature
  std::vector<uint32_t> orbit_id(deg, UINT32_MAX);
  {
    std::vector<PermVec> ngens;
    for (const GroupElement& g : N.generators()) ngens.push_back(N.action_of(g));
    uint32_t next = 0;
    std::vector<uint32_t> stack;
    for (uint32_t s = 0; s < deg; ++s) {
      if (orbit_id[s] != UINT32_MAX) continue;
      orbit_id[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        uint32_t p = stack.back();
        stack.pop_back();
        for (const PermVec& g : ngens)
          if (orbit_id[g[p]] == UINT32_MAX) {
            orbit_id[g[p]] = next;
            stack.push_back(g[p]);
          }
      }
      ++next;
    }
  }
  auto signature_hash = [&](const PermVec& r) {
    size_t h = 1469598103934665603ull;
    for (uint32_t i = 0; i < deg; ++i) {
      h ^= orbit_id[r[i]];
      h *= 1099511628211ull;
    }
    return h;
  };

  std::vector<PermVec> reps;  // action perms
  std::unordered_map<size_t, std::vector<uint32_t>> buckets;
  auto coset_index = [&](const PermVec& r) -> int64_t {
    auto it = buckets.find(signature_hash(r));
    if (it == buckets.end()) return -1;
    static thread_local PermVec tmp;
    for (uint32_t c : it->second) {
      compose_into(tmp, r, invert(reps[c]));
      if (N.contains_action(tmp)) return c;
    }
    return -1;
  };

  std::vector<PermVec> ggens;
  for (const GroupElement& g : G.generators()) ggens.push_back(G.action_of(g));

  reps.push_back(identity_perm(deg));
  buckets[signature_hash(reps[0])].push_back(0);
  std::vector<std::vector<uint32_t>> images(ggens.size());  // per gen: coset -> coset
  size_t head = 0;
  while (head < reps.size()) {
    if (reps.size() > G.limits().coset_cap) fail_cap("quotient: coset enumeration exceeded cap");
    PermVec r = reps[head];
    for (size_t j = 0; j < ggens.size(); ++j) {
      PermVec rg = compose(r, ggens[j]);
      int64_t c = coset_index(rg);
      if (c < 0) {
        c = static_cast<int64_t>(reps.size());
        buckets[signature_hash(rg)].push_back(static_cast<uint32_t>(c));
        reps.push_back(std::move(rg));
      }
      images[j].push_back(static_cast<uint32_t>(c));
    }
    ++head;
  }
  uint32_t num_cosets = static_cast<uint32_t>(reps.size());
  if (num_cosets != index) fail_input("internal: coset enumeration found " + std::to_string(num_cosets) +
                                      " cosets, expected " + std::to_string(index));

  Domain qdom = Domain::perm(num_cosets);
  std::vector<GroupElement> qgens;
  std::vector<GroupElement> gen_images;
  for (size_t j = 0; j < ggens.size(); ++j) {
    GroupElement img = GroupElement::perm(PermVec(images[j].begin(), images[j].end()));
    gen_images.push_back(img);
    if (!img.is_identity()) qgens.push_back(img);
  }
  Limits qlim = G.limits();
  qlim.degree_cap = std::max(qlim.degree_cap, num_cosets);
  FiniteGroup Q = FiniteGroup::build(qdom, qgens, qlim);
  if (checked_mul(Q.order(), N.order()) != G.order())
    fail_input("internal: quotient order mismatch");

  // shared state for the projection
  auto shared_reps = std::make_shared<std::vector<PermVec>>(reps);
  auto shared_buckets = std::make_shared<std::unordered_map<size_t, std::vector<uint32_t>>>(std::move(buckets));
  FiniteGroup Ncopy = N;
  FiniteGroup Gcopy = G;
  std::vector<uint32_t> oid = orbit_id;
  auto apply = [shared_reps, shared_buckets, Ncopy, Gcopy, oid, deg](const GroupElement& x) {
    PermVec xp = Gcopy.action_of(x);
    PermVec img(shared_reps->size());
    for (uint32_t c = 0; c < shared_reps->size(); ++c) {
      PermVec rx = compose((*shared_reps)[c], xp);
      size_t h = 1469598103934665603ull;
      for (uint32_t i = 0; i < deg; ++i) {
        h ^= oid[rx[i]];
        h *= 1099511628211ull;
      }
      auto it = shared_buckets->find(h);
      if (it == shared_buckets->end()) fail_input("quotient projection: element outside G");
      int64_t target = -1;
      for (uint32_t cand : it->second) {
        PermVec t = compose(rx, invert((*shared_reps)[cand]));
        if (Ncopy.contains_action(t)) {
          target = cand;
          break;
        }
      }
      if (target < 0) fail_input("quotient projection: element outside G");
      img[c] = static_cast<uint32_t>(target);
    }
    return GroupElement::perm(img);
  };

  std::vector<GroupElement> coset_reps;
  coset_reps.reserve(reps.size());
  for (const PermVec& r : reps) coset_reps.push_back(G.element_from_action(r));

  // kernel sanity: N generators must project to the identity
  Homomorphism proj(G, Q, gen_images, apply);
  for (const GroupElement& ng : N.generators())
    if (!proj.apply(ng).is_identity()) fail_input("internal: quotient kernel does not contain N");

  return Quotient{std::move(Q), std::move(proj), std::move(coset_reps)};
}

PermutationImage matrix_to_permutation(const FiniteGroup& G) {
  if (G.domain().kind != ElemKind::matrix) fail_input("matrix_to_permutation expects a matrix group");
  Domain pdom = Domain::perm(G.action_degree());
  std::vector<GroupElement> pgens;
  for (const GroupElement& g : G.generators()) pgens.push_back(GroupElement::perm(G.action_of(g)));
  StabChain chain = G.chain();
  FiniteGroup P = FiniteGroup::adopt(pdom, pgens, std::move(chain), G.limits());
  FiniteGroup Gcopy = G;
  auto apply = [Gcopy](const GroupElement& m) { return GroupElement::perm(Gcopy.action_of(m)); };
  Homomorphism iso(G, P, P.generators(), apply);
  return PermutationImage{std::move(P), std::move(iso)};
}

}  // namespace gti
