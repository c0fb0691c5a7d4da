#ifndef GTI_COMMON_HPP
#define GTI_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gti {

// Bad input: malformed elements, files, inadmissible parameters.  CLI exit 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was hit.  CLI exit 2.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw input_error(msg); }
[[noreturn]] inline void fail_cap(const std::string& msg) { throw cap_error(msg); }

// Resource caps.  Everything exercised by the test suites fits far below the
// defaults; all of them are adjustable from the CLI.
struct Limits {
  uint64_t enum_cap = 10'000'000;         // element enumeration / conjugacy classes, by group order
  uint32_t degree_cap = 100'000;          // permutation degree (incl. vector actions)
  uint32_t class_cap = 40;                // conjugacy classes admitted into lattice construction
  uint32_t coset_cap = 50'000;            // quotient coset count
  uint64_t product_budget = 100'000'000;  // is_independent: product of factor orders
  uint32_t lattice_cap = 4096;            // subgroup count in a normal lattice
};

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) fail_cap("order arithmetic exceeds 64-bit range");
  return static_cast<uint64_t>(p);
}

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);
uint64_t pow_u64(uint64_t base, unsigned exp);  // throws cap_error on overflow

}  // namespace gti

#endif
