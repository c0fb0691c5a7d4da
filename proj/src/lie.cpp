#include "gti/lie.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "gti/common.hpp"
#include "gti/field.hpp"

namespace gti {

uint64_t characteristic_of(uint64_t q) {
  uint64_t p;
  unsigned f;
  if (!prime_power(q, p, f)) fail_input("q = " + std::to_string(q) + " is not a prime power");
  return p;
}

namespace {

bool is_odd_power_of(uint64_t q, uint64_t p) {
  unsigned e = 0;
  while (q % p == 0) q /= p, ++e;
  return q == 1 && e % 2 == 1;
}

struct Excluded {
  LieFamily family;
  uint32_t rank;
  uint64_t q;
};

// non-simple parameter triples of admissible shape
const Excluded kExclusions[] = {
    {LieFamily::A, 1, 2},    {LieFamily::A, 1, 3},    {LieFamily::TwoA, 2, 2}, {LieFamily::TwoB2, 2, 2},
    {LieFamily::B, 2, 2},    {LieFamily::G2, 2, 2},   {LieFamily::TwoG2, 2, 3}, {LieFamily::TwoF4, 4, 2},
};

uint32_t min_rank(LieFamily f) {
  switch (f) {
    case LieFamily::A: return 1;
    case LieFamily::B: return 2;
    case LieFamily::C: return 2;
    case LieFamily::D: return 4;
    case LieFamily::TwoA: return 2;
    case LieFamily::TwoD: return 4;
    case LieFamily::ThreeD4: return 4;
    case LieFamily::TwoB2: return 2;
    case LieFamily::G2: return 2;
    case LieFamily::TwoG2: return 2;
    case LieFamily::F4: return 4;
    case LieFamily::TwoF4: return 4;
    case LieFamily::E6: return 6;
    case LieFamily::TwoE6: return 6;
    case LieFamily::E7: return 7;
    case LieFamily::E8: return 8;
  }
  return 0;
}

bool fixed_rank(LieFamily f) {
  switch (f) {
    case LieFamily::A:
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::D:
    case LieFamily::TwoA:
    case LieFamily::TwoD: return false;
    default: return true;
  }
}

}  // namespace

bool lie_admissible(LieFamily family, uint32_t rank, uint64_t q, std::string* reason) {
  auto no = [&](const std::string& r) {
    if (reason) *reason = r;
    return false;
  };
  uint64_t p;
  unsigned f;
  if (!prime_power(q, p, f)) return no("q must be a prime power");
  uint32_t mr = min_rank(family);
  if (fixed_rank(family)) {
    if (rank != mr) return no("family " + family_name(family) + " has rank " + std::to_string(mr));
  } else if (rank < mr) {
    return no("family " + family_name(family) + " needs rank >= " + std::to_string(mr));
  }
  if (family == LieFamily::TwoB2 && !is_odd_power_of(q, 2))
    return no("2B2 needs q an odd power of 2");
  if (family == LieFamily::TwoF4 && !is_odd_power_of(q, 2))
    return no("2F4 needs q an odd power of 2");
  if (family == LieFamily::TwoG2 && !is_odd_power_of(q, 3))
    return no("2G2 needs q an odd power of 3");
  for (const Excluded& e : kExclusions)
    if (e.family == family && e.rank == rank && e.q == q)
      return no(family_name(family) + std::to_string(rank) + "(" + std::to_string(q) + ") is not simple");
  return true;
}

bigint lie_universal_order(LieFamily family, uint32_t rank, uint64_t q) {
  std::string reason;
  if (!lie_admissible(family, rank, q, &reason)) fail_input("lie_order: " + reason);
  bigint Q = q;
  auto qp = [&](uint64_t e) {
    bigint r = 1;
    for (uint64_t i = 0; i < e; ++i) r *= Q;
    return r;
  };
  uint64_t n = rank;
  bigint o = 1;
  switch (family) {
    case LieFamily::A: {
      o = qp(n * (n + 1) / 2);
      for (uint64_t i = 2; i <= n + 1; ++i) o *= qp(i) - 1;
      break;
    }
    case LieFamily::TwoA: {
      o = qp(n * (n + 1) / 2);
      for (uint64_t i = 2; i <= n + 1; ++i) o *= qp(i) - (i % 2 == 0 ? 1 : -1);
      break;
    }
    case LieFamily::B:
    case LieFamily::C: {
      o = qp(n * n);
      for (uint64_t i = 1; i <= n; ++i) o *= qp(2 * i) - 1;
      break;
    }
    case LieFamily::D: {
      o = qp(n * (n - 1)) * (qp(n) - 1);
      for (uint64_t i = 1; i <= n - 1; ++i) o *= qp(2 * i) - 1;
      break;
    }
    case LieFamily::TwoD: {
      o = qp(n * (n - 1)) * (qp(n) + 1);
      for (uint64_t i = 1; i <= n - 1; ++i) o *= qp(2 * i) - 1;
      break;
    }
    case LieFamily::G2: o = qp(6) * (qp(6) - 1) * (qp(2) - 1); break;
    case LieFamily::F4: o = qp(24) * (qp(12) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1); break;
    case LieFamily::E6:
      o = qp(36) * (qp(12) - 1) * (qp(9) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(5) - 1) * (qp(2) - 1);
      break;
    case LieFamily::TwoE6:
      o = qp(36) * (qp(12) - 1) * (qp(9) + 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(5) + 1) * (qp(2) - 1);
      break;
    case LieFamily::E7:
      o = qp(63) * (qp(18) - 1) * (qp(14) - 1) * (qp(12) - 1) * (qp(10) - 1) * (qp(8) - 1) * (qp(6) - 1) *
          (qp(2) - 1);
      break;
    case LieFamily::E8:
      o = qp(120) * (qp(30) - 1) * (qp(24) - 1) * (qp(20) - 1) * (qp(18) - 1) * (qp(14) - 1) * (qp(12) - 1) *
          (qp(8) - 1) * (qp(2) - 1);
      break;
    case LieFamily::ThreeD4: o = qp(12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1); break;
    case LieFamily::TwoB2: o = qp(2) * (qp(2) + 1) * (Q - 1); break;
    case LieFamily::TwoG2: o = qp(3) * (qp(3) + 1) * (Q - 1); break;
    case LieFamily::TwoF4: o = qp(12) * (qp(6) + 1) * (qp(4) - 1) * (qp(3) + 1) * (Q - 1); break;
  }
  return o;
}

uint64_t lie_center_divisor(LieFamily family, uint32_t rank, uint64_t q) {
  uint64_t n = rank;
  switch (family) {
    case LieFamily::A: return gcd_u64(n + 1, q - 1);
    case LieFamily::TwoA: return gcd_u64(n + 1, q + 1);
    case LieFamily::B:
    case LieFamily::C: return gcd_u64(2, q - 1);
    case LieFamily::D: return gcd_u64(4, pow_u64(q, static_cast<unsigned>(n)) - 1);
    case LieFamily::TwoD: return gcd_u64(4, pow_u64(q, static_cast<unsigned>(n)) + 1);
    case LieFamily::E6: return gcd_u64(3, q - 1);
    case LieFamily::TwoE6: return gcd_u64(3, q + 1);
    case LieFamily::E7: return gcd_u64(2, q - 1);
    default: return 1;
  }
}

bigint lie_order(LieFamily family, uint32_t rank, uint64_t q) {
  return lie_universal_order(family, rank, q) / lie_center_divisor(family, rank, q);
}

const std::vector<std::pair<std::string, bigint>>& sporadic_orders() {
  static const std::vector<std::pair<std::string, bigint>> table = {
      {"M11", bigint("7920")},
      {"M12", bigint("95040")},
      {"M22", bigint("443520")},
      {"M23", bigint("10200960")},
      {"M24", bigint("244823040")},
      {"J1", bigint("175560")},
      {"J2", bigint("604800")},
      {"J3", bigint("50232960")},
      {"J4", bigint("86775571046077562880")},
      {"Co1", bigint("4157776806543360000")},
      {"Co2", bigint("42305421312000")},
      {"Co3", bigint("495766656000")},
      {"Fi22", bigint("64561751654400")},
      {"Fi23", bigint("4089470473293004800")},
      {"Fi24'", bigint("1255205709190661721292800")},
      {"HS", bigint("44352000")},
      {"McL", bigint("898128000")},
      {"He", bigint("4030387200")},
      {"Ru", bigint("145926144000")},
      {"Suz", bigint("448345497600")},
      {"ON", bigint("460815505920")},
      {"HN", bigint("273030912000000")},
      {"Ly", bigint("51765179004000000")},
      {"Th", bigint("90745943887872000")},
      {"B", bigint("4154781481226426191177580544000000")},
      {"M", bigint("808017424794512875886459904961710757005754368000000000")},
  };
  return table;
}

bigint tits_order() { return bigint("17971200"); }

namespace {

const LieFamily kAllFamilies[] = {
    LieFamily::A,    LieFamily::B,     LieFamily::C,     LieFamily::D,    LieFamily::TwoA, LieFamily::TwoD,
    LieFamily::ThreeD4, LieFamily::TwoB2, LieFamily::G2, LieFamily::TwoG2, LieFamily::F4,  LieFamily::TwoF4,
    LieFamily::E6,   LieFamily::TwoE6, LieFamily::E7,    LieFamily::E8,
};

// B_2(q) = C_2(q) and B_n(2^f) = C_n(2^f) are emitted once, under B
bool duplicate_of_B(LieFamily family, uint32_t rank, uint64_t q) {
  return family == LieFamily::C && (rank == 2 || q % 2 == 0);
}

// next prime power >= q+1 satisfying the family's field constraint
uint64_t next_q(LieFamily family, uint64_t q) {
  for (uint64_t c = q + 1;; ++c) {
    uint64_t p;
    unsigned f;
    if (!prime_power(c, p, f)) continue;
    if (family == LieFamily::TwoB2 || family == LieFamily::TwoF4) {
      if (p != 2 || f % 2 == 0) continue;
    }
    if (family == LieFamily::TwoG2) {
      if (p != 3 || f % 2 == 0) continue;
    }
    return c;
  }
}

uint64_t first_q(LieFamily family) { return next_q(family, 1); }

// smallest admissible order of the strip (family, rank); 0 when none exists
bigint strip_min_order(LieFamily family, uint32_t rank) {
  uint64_t q = first_q(family);
  for (int guard = 0; guard < 64; ++guard) {
    if (lie_admissible(family, rank, q) && !duplicate_of_B(family, rank, q))
      return lie_order(family, rank, q);
    q = next_q(family, q);
  }
  return 0;
}

// emits every admissible order <= bound of the strip; orders are strictly
// increasing in q, so the first admissible overshoot ends the strip
void enumerate_strip(LieFamily family, uint32_t rank, uint64_t bound, std::vector<LieEntry>& out) {
  uint64_t q = first_q(family);
  bigint prev = -1;
  unsigned misses = 0;
  while (true) {
    if (lie_admissible(family, rank, q)) {
      bigint o = lie_order(family, rank, q);
      if (prev >= 0 && o <= prev) fail_input("internal: Lie order not increasing in q");
      prev = o;
      if (o > bound) break;
      if (!duplicate_of_B(family, rank, q)) {
        Identity id = Identity::make_lie(family, rank, q);
        SimpleGroupId sid = resolve_identity(id, o);
        out.push_back(LieEntry{id, o, characteristic_of(q), sid.aliases});
      }
      misses = 0;
    } else if (++misses > 64) {
      break;  // exclusions all sit at tiny q
    }
    q = next_q(family, q);
  }
}

}  // namespace

std::vector<LieEntry> enumerate_lie_serial(uint64_t bound, const LieConfig& cfg) {
  std::vector<LieEntry> out;
  if (bound < 60) return out;
  for (LieFamily family : kAllFamilies) {
    uint32_t rank = min_rank(family);
    bigint last_min = -1;
    while (rank <= 64) {
      bigint mn = strip_min_order(family, rank);
      if (mn == 0) {
        // strip contains only B-duplicates (C_2); move to the next rank
        if (fixed_rank(family)) break;
        ++rank;
        continue;
      }
      // proof of cut: strip minima must grow strictly with the rank
      if (last_min >= 0 && mn <= last_min) fail_input("internal: Lie order not increasing in rank");
      last_min = mn;
      if (mn > bound) break;
      enumerate_strip(family, rank, bound, out);
      if (fixed_rank(family)) break;
      ++rank;
    }
  }
  if (cfg.include_tits && tits_order() <= bound) {
    Identity t = Identity::make_tits();
    out.push_back(LieEntry{t, tits_order(), 2, {t}});
  }
  std::sort(out.begin(), out.end(),
            [](const LieEntry& a, const LieEntry& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.id < b.id;
            });
  return out;
}

std::vector<LieEntry> enumerate_lie(uint64_t bound, const LieConfig& cfg, bool parallel) {
  if (!parallel) return enumerate_lie_serial(bound, cfg);
  if (bound < 60) return {};
  // collect the (family, rank) strips serially, enumerate them in parallel
  struct Strip {
    LieFamily family;
    uint32_t rank;
  };
  std::vector<Strip> strips;
  for (LieFamily family : kAllFamilies) {
    uint32_t rank = min_rank(family);
    bigint last_min = -1;
    while (rank <= 64) {
      bigint mn = strip_min_order(family, rank);
      if (mn == 0) {
        if (fixed_rank(family)) break;
        ++rank;
        continue;
      }
      if (last_min >= 0 && mn <= last_min) fail_input("internal: Lie order not increasing in rank");
      last_min = mn;
      if (mn > bound) break;
      strips.push_back({family, rank});
      if (fixed_rank(family)) break;
      ++rank;
    }
  }
  std::vector<std::vector<LieEntry>> parts(strips.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < strips.size(); ++i) enumerate_strip(strips[i].family, strips[i].rank, bound, parts[i]);
  std::vector<LieEntry> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  if (cfg.include_tits && tits_order() <= bound) {
    Identity t = Identity::make_tits();
    out.push_back(LieEntry{t, tits_order(), 2, {t}});
  }
  std::sort(out.begin(), out.end(),
            [](const LieEntry& a, const LieEntry& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.id < b.id;
            });
  return out;
}

std::vector<CollisionRecord> artin_collision_scan(uint64_t bound, const LieConfig& cfg, bool parallel) {
  std::vector<LieEntry> entries = enumerate_lie(bound, cfg, parallel);
  std::map<uint64_t, std::vector<const LieEntry*>> by_order;
  for (const LieEntry& e : entries) by_order[static_cast<uint64_t>(e.order)].push_back(&e);
  std::vector<CollisionRecord> records;
  for (const auto& [order, list] : by_order) {
    std::vector<uint64_t> chars;
    for (const LieEntry* e : list) chars.push_back(e->char_p);
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if (chars.size() < 2) continue;
    bool violation = false;
    for (size_t i = 0; i < chars.size(); ++i)
      for (size_t j = i + 1; j < chars.size(); ++j)
        if (chars[i] >= 5 && chars[j] >= 5) violation = true;
    CollisionRecord rec;
    rec.order = order;
    for (const LieEntry* e : list) rec.ids.push_back(e->id);
    rec.chars = std::move(chars);
    rec.violation = violation;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace gti
