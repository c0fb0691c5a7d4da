#ifndef GTI_FIELD_HPP
#define GTI_FIELD_HPP

#include <cstdint>
#include <vector>

#include "gti/common.hpp"

namespace gti {

bool is_prime(uint64_t n);
// Writes q = p^f with p prime; returns false if q is not a prime power.
bool prime_power(uint64_t q, uint64_t& p, unsigned& f);

// Arithmetic for a small finite field F_q, q = p^f.  Elements are integers in
// [0, q): the residue itself when f = 1, otherwise the base-p digit string of
// a polynomial reduced modulo a fixed monic irreducible.  The modulus is the
// lexicographically smallest irreducible found by search, so the encoding is
// deterministic (F_4: x^2+x+1, F_9: x^2+1, F_16: x^4+x+1).
class Field {
public:
  explicit Field(uint32_t q);

  uint32_t size() const { return q_; }
  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return f_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  // x -> x^p, the generating field automorphism
  uint32_t frobenius(uint32_t a) const;
  // x -> x^(p^(f/2)); the involution used for hermitian forms (f even)
  uint32_t conj_sqrt(uint32_t a) const;

  // smallest element generating the multiplicative group
  uint32_t primitive_element() const { return primitive_; }

  // modulus coefficients, constant term first (empty for prime fields)
  const std::vector<uint32_t>& modulus() const { return mod_; }

  // shared per-q instance
  static const Field& get(uint32_t q);

private:
  uint32_t q_, p_, f_;
  uint32_t primitive_ = 0;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> mul_;   // q*q multiplication table when f >= 2
  std::vector<uint32_t> inv_;   // inverse table
};

}  // namespace gti

#endif
