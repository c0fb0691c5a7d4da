#ifndef GTI_ARITH_HPP
#define GTI_ARITH_HPP

#include <cstdint>
#include <vector>

#include "gti/independence.hpp"

namespace gti {

// primes <= x, serial sieve
std::vector<uint32_t> primes_up_to(uint32_t x);

struct PrimeClassCount {
  uint64_t matching = 0;  // primes <= x with p = res (mod m)
  uint64_t total = 0;     // primes <= x
};

// exact counts by segmented sieve; the parallel version splits segments
// across threads and is compared against the serial one in the tests
PrimeClassCount count_primes_in_class(uint64_t x, uint64_t m, uint64_t res, bool parallel = true);
PrimeClassCount count_primes_in_class_serial(uint64_t x, uint64_t m, uint64_t res);

struct DensityResult {
  uint64_t matching = 0;
  uint64_t total = 0;
  double ratio() const { return total ? static_cast<double>(matching) / static_cast<double>(total) : 0.0; }
};

// (# primes <= X with p = 1 mod q^a) / (# primes <= X), exact counts
DensityResult density_estimate(uint64_t q, uint32_t a, uint64_t X, bool parallel = true);

// family with the cyclic group of order ell-1 at each ell (the multiplicative
// group of the ell-element field); rejects ell = 2 and non-primes
FamilySpec cyclotomic_family(const std::vector<uint64_t>& primes, const Limits& lim = {});

// the ell in the list with q | ell - 1, i.e. with Z/q a simple quotient of
// the cyclotomic factor
std::vector<uint64_t> common_quotient_census(const std::vector<uint64_t>& primes, uint64_t q);

struct CMParameters {
  uint32_t d = 2;   // torus dimension, >= 2
  uint64_t C = 1;   // index bound
  uint64_t q = 2;   // prime
  uint32_t a = 1;   // exponent with q^a > C
};

struct CMCheckReport {
  bool passed = false;
  uint64_t factorizations = 0;  // (u, c) pairs checked
  uint64_t failures = 0;
  std::string detail;
};

// all factorizations u*m*c = (ell-1)^d with u | ell-1 and c <= C must have
// q | m; requires ell = 1 mod q^a, q^a > C, d >= 2
CMCheckReport cm_divisibility_check(const CMParameters& p, uint64_t ell);

// the same check over every qualifying ell <= lmax
CMCheckReport cm_divisibility_sweep(const CMParameters& p, uint64_t lmax, bool parallel = true);
CMCheckReport cm_divisibility_sweep_serial(const CMParameters& p, uint64_t lmax);

// synthetic family: at each ell the cyclic group of the worst-case admissible
// middle factor (ell-1)^(d-1)/c, c <= C maximal; expected verdict: not
// group-theoretically independent with witness Z/q
IndependenceReport cm_family_demo(const CMParameters& p, const std::vector<uint64_t>& primes,
                                  const Limits& lim = {});

}  // namespace gti

#endif
