#include "gti/field.hpp"

#include <map>
#include <mutex>

namespace gti {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd_u64(a, b), b);
}

uint64_t pow_u64(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  while (exp--) r = checked_mul(r, base);
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // deterministic Miller-Rabin, valid for all 64-bit inputs
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool prime_power(uint64_t q, uint64_t& p, unsigned& f) {
  if (q < 2) return false;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      uint64_t r = q;
      unsigned e = 0;
      while (r % d == 0) r /= d, ++e;
      if (r != 1) return false;
      p = d;
      f = e;
      return true;
    }
  }
  p = q;
  f = 1;
  return true;
}

namespace {

// polynomial arithmetic over F_p, coefficient vectors with constant term first
std::vector<uint32_t> poly_mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& mod, uint32_t p) {
  unsigned f = static_cast<unsigned>(mod.size()) - 1;
  std::vector<uint32_t> r(2 * f - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (size_t i = r.size(); i-- > f;) {
    uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    // subtract c * x^(i-f) * mod; the leading term is the zeroing above
    for (unsigned k = 0; k < f; ++k) {
      uint32_t& slot = r[i - f + k];
      slot = (slot + p * p - c * mod[k] % p) % p;
    }
  }
  r.resize(f);
  return r;
}

// trial division by every monic polynomial of degree <= f/2; fine at table sizes
bool poly_irreducible(const std::vector<uint32_t>& mod, uint32_t p) {
  unsigned f = static_cast<unsigned>(mod.size()) - 1;
  for (unsigned d = 1; 2 * d <= f; ++d) {
    uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (uint64_t low = 0; low < count; ++low) {
      std::vector<uint32_t> div(d + 1, 0);
      div[d] = 1;
      uint64_t v = low;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      std::vector<uint32_t> rem = mod;
      for (size_t i = rem.size(); i-- > d;) {
        uint32_t c = rem[i];
        if (c == 0) continue;
        rem[i] = 0;
        for (unsigned k = 0; k < d; ++k) rem[i - d + k] = (rem[i - d + k] + p * p - c * div[k] % p) % p;
      }
      bool zero = true;
      for (unsigned k = 0; k < d; ++k)
        if (rem[k]) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t q) : q_(q) {
  uint64_t p64;
  unsigned f;
  if (!prime_power(q, p64, f)) fail_input("field size " + std::to_string(q) + " is not a prime power");
  p_ = static_cast<uint32_t>(p64);
  f_ = f;
  if (f_ >= 2) {
    if (q_ > 4096) fail_input("extension field F_" + std::to_string(q) + " exceeds supported table size");
    // smallest monic irreducible of degree f, coefficients scanned in base-p order
    std::vector<uint32_t> mod(f_ + 1, 0);
    mod[f_] = 1;
    uint64_t lower = 0, count = 1;
    for (unsigned i = 0; i < f_; ++i) count *= p_;
    for (; lower < count; ++lower) {
      uint64_t v = lower;
      for (unsigned i = 0; i < f_; ++i) {
        mod[i] = static_cast<uint32_t>(v % p_);
        v /= p_;
      }
      if (poly_irreducible(mod, p_)) break;
    }
    if (lower == count) fail_input("no irreducible modulus found");  // unreachable
    mod_ = mod;

    auto decode = [&](uint32_t e) {
      std::vector<uint32_t> v(f_);
      for (unsigned i = 0; i < f_; ++i) {
        v[i] = e % p_;
        e /= p_;
      }
      return v;
    };
    auto encode = [&](const std::vector<uint32_t>& v) {
      uint32_t e = 0;
      for (unsigned i = f_; i-- > 0;) e = e * p_ + v[i];
      return e;
    };
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
      auto pa = decode(a);
      for (uint32_t b = a; b < q_; ++b) {
        uint32_t ab = encode(poly_mulmod(pa, decode(b), mod_, p_));
        mul_[static_cast<size_t>(a) * q_ + b] = ab;
        mul_[static_cast<size_t>(b) * q_ + a] = ab;
      }
    }
  }
  inv_.assign(q_, 0);
  for (uint32_t a = 1; a < q_; ++a) {
    if (inv_[a]) continue;
    for (uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        inv_[b] = a;
        break;
      }
    }
    if (!inv_[a]) fail_input("field construction failed: no inverse");  // unreachable
  }
  for (uint32_t g = 1; g < q_; ++g) {
    uint32_t x = g;
    uint32_t n = 1;
    while (x != 1) {
      x = mul(x, g);
      ++n;
    }
    if (n == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (f_ == 1) return (a + b) % p_;
  uint32_t r = 0, m = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

uint32_t Field::neg(uint32_t a) const {
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, m = 1;
  for (unsigned i = 0; i < f_; ++i) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * m;
    a /= p_;
    m *= p_;
  }
  return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (f_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  return mul_[static_cast<size_t>(a) * q_ + b];
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail_input("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::frobenius(uint32_t a) const { return pow(a, p_); }

uint32_t Field::conj_sqrt(uint32_t a) const {
  if (f_ % 2 != 0) fail_input("conjugation needs a quadratic extension");
  uint64_t e = 1;
  for (unsigned i = 0; i < f_ / 2; ++i) e *= p_;
  return pow(a, e);
}

const Field& Field::get(uint32_t q) {
  static std::mutex m;
  static std::map<uint32_t, Field> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, Field(q)).first;
  return it->second;
}

}  // namespace gti
