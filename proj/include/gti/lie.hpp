#ifndef GTI_LIE_HPP
#define GTI_LIE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gti/simple_id.hpp"

namespace gti {

struct LieConfig {
  bool include_tits = true;  // treat 2F4(2)' as a Lie-type group of characteristic 2
};

// admissibility of (family, rank, q): rank bounds, prime-power q, twisted
// field constraints, and the exclusion list of non-simple small cases
// (A1(2), A1(3), 2A2(2), 2B2(2), B2(2), G2(2), 2G2(3), 2F4(2)).
// On failure, *reason names the violated constraint.
bool lie_admissible(LieFamily family, uint32_t rank, uint64_t q, std::string* reason = nullptr);

// exact order of the simple group from the closed-form table
bigint lie_order(LieFamily family, uint32_t rank, uint64_t q);
// order of the universal (simply connected) version, = simple order times the
// center divisor; this is what SL/Sp/SU constructions realize directly
bigint lie_universal_order(LieFamily family, uint32_t rank, uint64_t q);
uint64_t lie_center_divisor(LieFamily family, uint32_t rank, uint64_t q);

// characteristic of q
uint64_t characteristic_of(uint64_t q);

struct LieEntry {
  Identity id;          // lie(...) or tits
  bigint order;
  uint64_t char_p;      // characteristic
  std::vector<Identity> aliases;
};

// All admissible parameter triples with order <= bound, one entry per
// abstract group per characteristic: B_n(2^f) = C_n(2^f) and B_2(q) = C_2(q)
// are emitted once under the B name with the C alias attached.  Entries are
// sorted by (order, id).
std::vector<LieEntry> enumerate_lie(uint64_t bound, const LieConfig& cfg = {}, bool parallel = true);

// serial reference used by tests and the benchmark
std::vector<LieEntry> enumerate_lie_serial(uint64_t bound, const LieConfig& cfg = {});

struct CollisionRecord {
  uint64_t order;
  std::vector<Identity> ids;       // all entries of this order
  std::vector<uint64_t> chars;     // distinct characteristics, sorted
  bool violation;                  // two distinct characteristics both >= 5
};

// every order <= bound realized by Lie-type identities in at least two
// characteristics; SAFE unless both characteristics of some pair are >= 5
std::vector<CollisionRecord> artin_collision_scan(uint64_t bound, const LieConfig& cfg = {},
                                                  bool parallel = true);

// sporadic recognition list: the 26 sporadic groups (name, order)
const std::vector<std::pair<std::string, bigint>>& sporadic_orders();
bigint tits_order();

}  // namespace gti

#endif
