#ifndef GTI_GROUP_HPP
#define GTI_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gti/element.hpp"

namespace gti {

using PermVec = std::vector<uint32_t>;

struct Domain {
  ElemKind kind = ElemKind::perm;
  uint32_t n = 0;  // perm degree or matrix dim
  uint32_t q = 0;  // field size (matrix only)

  static Domain perm(uint32_t degree) { return {ElemKind::perm, degree, 0}; }
  static Domain matrix(uint32_t dim, uint32_t q) { return {ElemKind::matrix, dim, q}; }
  bool operator==(const Domain&) const = default;

  // degree of the faithful action the engine works on: the points themselves,
  // or the nonzero column vectors of F_q^n
  uint64_t action_degree() const;
  std::string describe() const;

  GroupElement identity() const;
};

// point <-> vector dictionary for the nonzero-vector action (matrix domains);
// points are 0-based, vectors are base-q digit strings (coordinate i = digit i)
std::vector<uint32_t> vector_of_point(const Domain& dom, uint32_t point);
uint32_t point_of_vector(const Domain& dom, const std::vector<uint32_t>& v);

// Deterministic incremental Schreier-Sims chain with materialized
// transversals.  Base points are the smallest moved points, in increasing
// order of discovery.
class StabChain {
public:
  void init(uint32_t degree);
  uint32_t degree() const { return degree_; }

  void add_generator(const PermVec& g);

  bool contains(const PermVec& g) const;
  // sift through the chain; returns residue and the level reached
  std::pair<PermVec, size_t> sift(const PermVec& g) const;

  uint64_t order() const;
  size_t num_levels() const { return levels_.size(); }
  uint32_t base_point(size_t level) const { return levels_[level].base_point; }
  uint64_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  const std::vector<PermVec>& strong_generators() const { return sgens_; }

  // canonical enumeration; fn(perm) is called once per element, in a fixed
  // order, until it returns false; enumeration refuses beyond cap
  void for_each_element(const std::function<bool(const PermVec&)>& fn, uint64_t cap) const;

  // drop construction-only buffers, keeping what sifting needs
  void finalize();

private:
  struct Level {
    uint32_t base_point = 0;
    std::vector<uint32_t> orbit;          // discovery order; orbit[0] = base
    std::vector<int32_t> pos;             // point -> orbit index, -1 outside
    std::vector<PermVec> trans;           // u_p with u_p(base) = p (freed on finalize)
    std::vector<PermVec> trans_inv;
    std::vector<uint32_t> gen_ids;        // indices into sgens_ active at this level
    std::vector<size_t> processed;        // per gen: orbit prefix already processed
  };

  void extend_orbit(size_t lvl);
  void add_at_level(const PermVec& r, size_t first, size_t last);
  void close();
  bool process_one(size_t lvl);
  bool has_pending(size_t lvl) const;

  uint32_t degree_ = 0;
  std::vector<PermVec> sgens_;
  std::vector<Level> levels_;
  uint64_t trans_bytes_ = 0;
  bool dirty_ = false;
};

class Homomorphism;

// A finite group given by generators over a perm or matrix domain, with the
// stabilizer chain and order computed at construction.  Immutable afterwards;
// handles are cheap shared copies and safe to use across threads.
class FiniteGroup {
public:
  FiniteGroup() = default;

  static FiniteGroup build(const Domain& dom, std::vector<GroupElement> gens, const Limits& lim = {});

  bool valid() const { return impl_ != nullptr; }
  const Domain& domain() const;
  const std::vector<GroupElement>& generators() const;
  const Limits& limits() const;
  uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  uint32_t action_degree() const;
  PermVec action_of(const GroupElement& g) const;
  GroupElement element_from_action(const PermVec& p) const;
  const StabChain& chain() const;

  bool contains(const GroupElement& g) const;
  bool contains_action(const PermVec& p) const;
  bool is_subgroup_of(const FiniteGroup& G) const;
  bool same_subgroup(const FiniteGroup& other) const;
  bool is_normal_in(const FiniteGroup& G) const;

  std::vector<GroupElement> elements(uint64_t cap) const;
  void for_each_action(const std::function<bool(const PermVec&)>& fn, uint64_t cap) const;

  GroupElement random_element(std::mt19937_64& rng) const;

  // deterministic encoding of the generator list, used for tie-breaking
  std::string generator_encoding() const;

  // internal: wrap an already-built chain (shares the action domain)
  static FiniteGroup adopt(const Domain& dom, std::vector<GroupElement> gens, StabChain chain,
                           const Limits& lim);

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

uint64_t element_order(const GroupElement& g);

// smallest normal subgroup of G containing S
FiniteGroup normal_closure(const FiniteGroup& G, const std::vector<GroupElement>& S);
FiniteGroup derived_subgroup(const FiniteGroup& G);
FiniteGroup center(const FiniteGroup& G);

struct ConjClass {
  GroupElement rep;
  uint64_t size;
};
// exact per-class orbit computation; refuses above lim.enum_cap
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G);

class Homomorphism {
public:
  Homomorphism() = default;
  Homomorphism(FiniteGroup src, FiniteGroup dst, std::vector<GroupElement> gen_images,
               std::function<GroupElement(const GroupElement&)> apply);

  const FiniteGroup& source() const { return src_; }
  const FiniteGroup& target() const { return dst_; }
  const std::vector<GroupElement>& generator_images() const { return gen_images_; }
  GroupElement apply(const GroupElement& g) const { return apply_(g); }

  // multiplicativity on the source's strong generators and random words
  bool verify(unsigned random_words = 32, uint64_t seed = 1) const;

private:
  FiniteGroup src_, dst_;
  std::vector<GroupElement> gen_images_;
  std::function<GroupElement(const GroupElement&)> apply_;
};

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;
  std::vector<GroupElement> coset_reps;  // rep[i] is the coset mapped to point i
};

// G/N as a permutation group on the coset space; refuses past lim.coset_cap
Quotient quotient(const FiniteGroup& G, const FiniteGroup& N);

// the faithful permutation version of a matrix group, with the projection
// dictionary attached
struct PermutationImage {
  FiniteGroup group;
  Homomorphism iso;
};
PermutationImage matrix_to_permutation(const FiniteGroup& G);

}  // namespace gti

#endif
