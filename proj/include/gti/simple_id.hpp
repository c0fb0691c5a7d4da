#ifndef GTI_SIMPLE_ID_HPP
#define GTI_SIMPLE_ID_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gti {

using bigint = boost::multiprecision::cpp_int;

enum class LieFamily : uint8_t {
  A,
  B,
  C,
  D,
  TwoA,
  TwoD,
  ThreeD4,
  TwoB2,
  G2,
  TwoG2,
  F4,
  TwoF4,
  E6,
  TwoE6,
  E7,
  E8
};

std::string family_name(LieFamily f);  // "A", "2A", "3D4", ...

struct LieParams {
  LieFamily family = LieFamily::A;
  uint32_t rank = 0;
  uint64_t q = 0;
  auto operator<=>(const LieParams&) const = default;
};

// One name of a finite simple group.  Isomorphic groups can carry several
// (alternating(5), lie(A,1,4), lie(A,1,5) are one group); SimpleGroupId keeps
// the whole list.
struct Identity {
  enum class Kind : uint8_t { cyclic, alternating, lie, sporadic, tits, unresolved } kind = Kind::cyclic;
  uint64_t cyclic_p = 0;
  uint32_t alt_n = 0;
  LieParams lie;
  std::string sporadic;
  bigint unresolved_order = 0;

  static Identity make_cyclic(uint64_t p);
  static Identity make_alternating(uint32_t n);
  static Identity make_lie(LieFamily f, uint32_t rank, uint64_t q);
  static Identity make_sporadic(std::string name);
  static Identity make_tits();
  static Identity make_unresolved(const bigint& order);

  // compact serialization: Z7, Alt8, A1q5, 2A3q2, M11, Tits, U<order>
  std::string compact() const;
  // display serialization: Z/7 for cyclic, compact otherwise
  std::string display() const;

  bool operator==(const Identity&) const;
  bool operator<(const Identity&) const;  // canonical order: cyclic < alternating < lie < sporadic < tits < unresolved
};

// Canonical identity of a finite simple group plus its full alias list.
struct SimpleGroupId {
  Identity primary;
  std::vector<Identity> aliases;  // sorted, always contains primary
  bigint order = 0;

  bool is_cyclic() const { return primary.kind == Identity::Kind::cyclic; }
  bool is_unresolved() const { return primary.kind == Identity::Kind::unresolved; }
  uint64_t cyclic_prime() const { return primary.cyclic_p; }
  // true when some alias is a Lie-type identity in characteristic ell
  // (the Tits group counts as characteristic 2)
  bool in_lie_characteristic(uint64_t ell) const;

  bool operator==(const SimpleGroupId& o) const { return primary == o.primary; }
  bool operator<(const SimpleGroupId& o) const { return primary < o.primary; }
  // isomorphism-aware: do the alias sets intersect?
  bool shares_identity(const SimpleGroupId& o) const;

  std::string compact() const { return primary.compact(); }
  std::string display() const { return primary.display(); }
};

// builds the id (with full alias set) for a single named identity
SimpleGroupId resolve_identity(const Identity& id, const bigint& order);

struct JHMultiset {
  std::vector<std::pair<SimpleGroupId, uint32_t>> entries;  // sorted by id

  void add(const SimpleGroupId& id, uint32_t mult = 1);
  uint32_t total() const;
  std::vector<SimpleGroupId> id_set() const;
  bool operator==(const JHMultiset&) const;
  std::string display() const;  // "Z/2^3,Z/3"
};

}  // namespace gti

#endif
