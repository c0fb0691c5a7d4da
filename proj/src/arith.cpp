#include "gti/arith.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gti/catalog.hpp"
#include "gti/field.hpp"

namespace gti {

std::vector<uint32_t> primes_up_to(uint32_t x) {
  std::vector<uint32_t> primes;
  if (x < 2) return primes;
  std::vector<bool> composite(x + 1, false);
  for (uint32_t p = 2; p <= x; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (uint64_t m = static_cast<uint64_t>(p) * p; m <= x; m += p) composite[m] = true;
  }
  return primes;
}

namespace {

PrimeClassCount count_segment(uint64_t lo, uint64_t hi, uint64_t m, uint64_t res,
                              const std::vector<uint32_t>& base_primes) {
  // counts primes in [lo, hi]
  PrimeClassCount out;
  if (hi < 2) return out;
  lo = std::max<uint64_t>(lo, 2);
  std::vector<bool> composite(hi - lo + 1, false);
  for (uint32_t p : base_primes) {
    uint64_t pp = static_cast<uint64_t>(p) * p;
    if (pp > hi) break;
    uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    for (uint64_t x = start; x <= hi; x += p) composite[x - lo] = true;
  }
  for (uint64_t x = lo; x <= hi; ++x) {
    if (composite[x - lo]) continue;
    ++out.total;
    if (x % m == res % m) ++out.matching;
  }
  return out;
}

}  // namespace

PrimeClassCount count_primes_in_class_serial(uint64_t x, uint64_t m, uint64_t res) {
  if (m == 0) fail_input("modulus must be positive");
  std::vector<uint32_t> base = primes_up_to(static_cast<uint32_t>(std::sqrt(static_cast<double>(x))) + 1);
  return count_segment(2, x, m, res, base);
}

PrimeClassCount count_primes_in_class(uint64_t x, uint64_t m, uint64_t res, bool parallel) {
  if (m == 0) fail_input("modulus must be positive");
  if (!parallel || x < 1u << 16) return count_primes_in_class_serial(x, m, res);
  std::vector<uint32_t> base = primes_up_to(static_cast<uint32_t>(std::sqrt(static_cast<double>(x))) + 1);
  const uint64_t seg = 1u << 18;
  uint64_t nseg = (x + seg - 1) / seg;
  PrimeClassCount out;
#pragma omp parallel
  {
    PrimeClassCount local;
#pragma omp for schedule(dynamic) nowait
    for (uint64_t s = 0; s < nseg; ++s) {
      uint64_t lo = s * seg;
      uint64_t hi = std::min(x, lo + seg - 1);
      PrimeClassCount part = count_segment(lo, hi, m, res, base);
      local.total += part.total;
      local.matching += part.matching;
    }
#pragma omp critical
    {
      out.total += local.total;
      out.matching += local.matching;
    }
  }
  return out;
}

DensityResult density_estimate(uint64_t q, uint32_t a, uint64_t X, bool parallel) {
  if (!is_prime(q)) fail_input("density_estimate: q must be prime");
  if (X < 100) fail_input("density_estimate needs X >= 100");
  uint64_t mod = pow_u64(q, a);
  PrimeClassCount c = count_primes_in_class(X, mod, 1, parallel);
  return DensityResult{c.matching, c.total};
}

FamilySpec cyclotomic_family(const std::vector<uint64_t>& primes, const Limits& lim) {
  std::vector<FamilySpec::Factor> factors;
  for (uint64_t ell : primes) {
    if (ell == 2) fail_input("cyclotomic factor at ell = 2 is trivial; rejected");
    if (!is_prime(ell)) fail_input("cyclotomic family needs primes, got " + std::to_string(ell));
    factors.push_back({ell, cyclic_group(ell - 1, lim), "Z" + std::to_string(ell - 1)});
  }
  std::sort(factors.begin(), factors.end(),
            [](const FamilySpec::Factor& a, const FamilySpec::Factor& b) { return a.prime < b.prime; });
  for (size_t i = 1; i < factors.size(); ++i)
    if (factors[i].prime == factors[i - 1].prime) fail_input("cyclotomic family primes must be distinct");
  return FamilySpec::make(std::move(factors));
}

std::vector<uint64_t> common_quotient_census(const std::vector<uint64_t>& primes, uint64_t q) {
  if (!is_prime(q)) fail_input("census: q must be prime");
  std::vector<uint64_t> out;
  for (uint64_t ell : primes)
    if (ell % q == 1) out.push_back(ell);
  return out;
}

namespace {

void check_cm_preconditions(const CMParameters& p, uint64_t ell) {
  if (p.d < 2) fail_input("cm check needs d >= 2");
  if (!is_prime(p.q)) fail_input("cm check needs q prime");
  if (p.a < 1) fail_input("cm check needs a >= 1");
  uint64_t qa = pow_u64(p.q, p.a);
  if (qa <= p.C) fail_input("cm check needs q^a > C");
  if (ell % qa != 1) fail_input("cm check needs ell = 1 mod q^a, got ell = " + std::to_string(ell));
  if (!is_prime(ell)) fail_input("cm check needs ell prime");
}

std::vector<uint64_t> divisors_of(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CMCheckReport cm_divisibility_check(const CMParameters& p, uint64_t ell) {
  check_cm_preconditions(p, ell);
  CMCheckReport rep;
  uint64_t base = ell - 1;
  uint64_t target = 1;
  for (uint32_t i = 0; i < p.d; ++i) target = checked_mul(target, base);
  for (uint64_t u : divisors_of(base)) {
    for (uint64_t c = 1; c <= p.C; ++c) {
      uint64_t uc = checked_mul(u, c);
      if (target % uc != 0) continue;
      uint64_t m = target / uc;
      ++rep.factorizations;
      if (m % p.q != 0) {
        ++rep.failures;
        std::ostringstream os;
        os << "ell=" << ell << " u=" << u << " c=" << c << " m=" << m << " not divisible by q=" << p.q;
        if (rep.detail.empty()) rep.detail = os.str();
      }
    }
  }
  rep.passed = rep.failures == 0;
  return rep;
}

CMCheckReport cm_divisibility_sweep_serial(const CMParameters& p, uint64_t lmax) {
  CMCheckReport rep;
  rep.passed = true;
  uint64_t qa = pow_u64(p.q, p.a);
  for (uint64_t ell = qa + 1; ell <= lmax; ell += qa) {
    if (!is_prime(ell)) continue;
    CMCheckReport one = cm_divisibility_check(p, ell);
    rep.factorizations += one.factorizations;
    rep.failures += one.failures;
    if (!one.passed && rep.detail.empty()) rep.detail = one.detail;
  }
  rep.passed = rep.failures == 0;
  return rep;
}

CMCheckReport cm_divisibility_sweep(const CMParameters& p, uint64_t lmax, bool parallel) {
  if (!parallel) return cm_divisibility_sweep_serial(p, lmax);
  uint64_t qa = pow_u64(p.q, p.a);
  std::vector<uint64_t> ells;
  for (uint64_t ell = qa + 1; ell <= lmax; ell += qa)
    if (is_prime(ell)) ells.push_back(ell);
  CMCheckReport rep;
  rep.passed = true;
#pragma omp parallel
  {
    CMCheckReport local;
#pragma omp for schedule(dynamic) nowait
    for (size_t i = 0; i < ells.size(); ++i) {
      CMCheckReport one = cm_divisibility_check(p, ells[i]);
      local.factorizations += one.factorizations;
      local.failures += one.failures;
      if (!one.passed && local.detail.empty()) local.detail = one.detail;
    }
#pragma omp critical
    {
      rep.factorizations += local.factorizations;
      rep.failures += local.failures;
      if (!local.detail.empty() && rep.detail.empty()) rep.detail = local.detail;
    }
  }
  rep.passed = rep.failures == 0;
  return rep;
}

IndependenceReport cm_family_demo(const CMParameters& p, const std::vector<uint64_t>& primes,
                                  const Limits& lim) {
  std::vector<FamilySpec::Factor> factors;
  for (uint64_t ell : primes) {
    check_cm_preconditions(p, ell);
    // worst case: u maximal (= ell - 1) and c <= C maximal dividing the rest
    uint64_t rest = 1;
    for (uint32_t i = 0; i + 1 < p.d; ++i) rest = checked_mul(rest, ell - 1);
    uint64_t c = 1;
    for (uint64_t cand = 1; cand <= p.C; ++cand)
      if (rest % cand == 0) c = cand;
    uint64_t m = rest / c;
    factors.push_back({ell, cyclic_group(m, lim), "Z" + std::to_string(m)});
  }
  std::sort(factors.begin(), factors.end(),
            [](const FamilySpec::Factor& a, const FamilySpec::Factor& b) { return a.prime < b.prime; });
  FamilySpec family = FamilySpec::make(std::move(factors));
  return is_gt_independent(family);
}

}  // namespace gti
