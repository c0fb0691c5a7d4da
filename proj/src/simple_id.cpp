#include "gti/simple_id.hpp"

#include <algorithm>
#include <sstream>

#include "gti/common.hpp"
#include "gti/lie.hpp"

namespace gti {

std::string family_name(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::TwoA: return "2A";
    case LieFamily::TwoD: return "2D";
    case LieFamily::ThreeD4: return "3D4";
    case LieFamily::TwoB2: return "2B2";
    case LieFamily::G2: return "G2";
    case LieFamily::TwoG2: return "2G2";
    case LieFamily::F4: return "F4";
    case LieFamily::TwoF4: return "2F4";
    case LieFamily::E6: return "E6";
    case LieFamily::TwoE6: return "2E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
  }
  return "?";
}

Identity Identity::make_cyclic(uint64_t p) {
  Identity i;
  i.kind = Kind::cyclic;
  i.cyclic_p = p;
  return i;
}

Identity Identity::make_alternating(uint32_t n) {
  Identity i;
  i.kind = Kind::alternating;
  i.alt_n = n;
  return i;
}

Identity Identity::make_lie(LieFamily f, uint32_t rank, uint64_t q) {
  Identity i;
  i.kind = Kind::lie;
  i.lie = {f, rank, q};
  return i;
}

Identity Identity::make_sporadic(std::string name) {
  Identity i;
  i.kind = Kind::sporadic;
  i.sporadic = std::move(name);
  return i;
}

Identity Identity::make_tits() {
  Identity i;
  i.kind = Kind::tits;
  return i;
}

Identity Identity::make_unresolved(const bigint& order) {
  Identity i;
  i.kind = Kind::unresolved;
  i.unresolved_order = order;
  return i;
}

std::string Identity::compact() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cyclic: os << "Z" << cyclic_p; break;
    case Kind::alternating: os << "Alt" << alt_n; break;
    case Kind::lie: {
      // single-rank family names already carry their rank digit
      std::string fam = family_name(lie.family);
      bool fixed_rank = fam.size() >= 2 && isdigit(static_cast<unsigned char>(fam.back()));
      os << fam;
      if (!fixed_rank) os << lie.rank;
      os << "q" << lie.q;
      break;
    }
    case Kind::sporadic: os << sporadic; break;
    case Kind::tits: os << "Tits"; break;
    case Kind::unresolved: os << "U" << unresolved_order; break;
  }
  return os.str();
}

std::string Identity::display() const {
  if (kind == Kind::cyclic) return "Z/" + std::to_string(cyclic_p);
  if (kind == Kind::unresolved) {
    std::ostringstream os;
    os << "unresolved(" << unresolved_order << ")";
    return os.str();
  }
  return compact();
}

bool Identity::operator==(const Identity& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::cyclic: return cyclic_p == o.cyclic_p;
    case Kind::alternating: return alt_n == o.alt_n;
    case Kind::lie: return lie == o.lie;
    case Kind::sporadic: return sporadic == o.sporadic;
    case Kind::tits: return true;
    case Kind::unresolved: return unresolved_order == o.unresolved_order;
  }
  return false;
}

bool Identity::operator<(const Identity& o) const {
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case Kind::cyclic: return cyclic_p < o.cyclic_p;
    case Kind::alternating: return alt_n < o.alt_n;
    case Kind::lie: return lie < o.lie;
    case Kind::sporadic: return sporadic < o.sporadic;
    case Kind::tits: return false;
    case Kind::unresolved: return unresolved_order < o.unresolved_order;
  }
  return false;
}

namespace {

// the classical isomorphisms between identities, one hop at a time
std::vector<Identity> direct_aliases(const Identity& id) {
  using K = Identity::Kind;
  std::vector<Identity> out;
  auto lie = [](LieFamily f, uint32_t r, uint64_t q) { return Identity::make_lie(f, r, q); };
  if (id.kind == K::alternating) {
    if (id.alt_n == 5) {
      out.push_back(lie(LieFamily::A, 1, 4));
      out.push_back(lie(LieFamily::A, 1, 5));
    } else if (id.alt_n == 6) {
      out.push_back(lie(LieFamily::A, 1, 9));
    } else if (id.alt_n == 8) {
      out.push_back(lie(LieFamily::A, 3, 2));
    }
  } else if (id.kind == K::lie) {
    const LieParams& P = id.lie;
    if (P.family == LieFamily::A) {
      if (P.rank == 1 && P.q == 4) {
        out.push_back(Identity::make_alternating(5));
        out.push_back(lie(LieFamily::A, 1, 5));
      }
      if (P.rank == 1 && P.q == 5) {
        out.push_back(Identity::make_alternating(5));
        out.push_back(lie(LieFamily::A, 1, 4));
      }
      if (P.rank == 1 && P.q == 9) out.push_back(Identity::make_alternating(6));
      if (P.rank == 1 && P.q == 7) out.push_back(lie(LieFamily::A, 2, 2));
      if (P.rank == 2 && P.q == 2) out.push_back(lie(LieFamily::A, 1, 7));
      if (P.rank == 3 && P.q == 2) out.push_back(Identity::make_alternating(8));
    }
    if (P.family == LieFamily::B) {
      if (P.rank == 2 && P.q == 3) out.push_back(lie(LieFamily::TwoA, 3, 2));
      // B_2(q) and C_2(q) are one group; B_n(2^f) and C_n(2^f) coincide too
      if (P.rank == 2 || P.q % 2 == 0) out.push_back(lie(LieFamily::C, P.rank, P.q));
    }
    if (P.family == LieFamily::C) {
      if (P.rank == 2 || P.q % 2 == 0) out.push_back(lie(LieFamily::B, P.rank, P.q));
    }
    if (P.family == LieFamily::TwoA && P.rank == 3 && P.q == 2) {
      out.push_back(lie(LieFamily::B, 2, 3));
    }
  }
  return out;
}

}  // namespace

SimpleGroupId resolve_identity(const Identity& id, const bigint& order) {
  std::vector<Identity> cluster{id};
  for (size_t head = 0; head < cluster.size(); ++head) {
    for (const Identity& next : direct_aliases(cluster[head])) {
      if (std::find(cluster.begin(), cluster.end(), next) == cluster.end()) cluster.push_back(next);
    }
  }
  std::sort(cluster.begin(), cluster.end());
  SimpleGroupId sid;
  sid.primary = cluster.front();
  sid.aliases = std::move(cluster);
  sid.order = order;
  return sid;
}

bool SimpleGroupId::in_lie_characteristic(uint64_t ell) const {
  for (const Identity& a : aliases) {
    if (a.kind == Identity::Kind::lie && characteristic_of(a.lie.q) == ell) return true;
    if (a.kind == Identity::Kind::tits && ell == 2) return true;
  }
  return false;
}

bool SimpleGroupId::shares_identity(const SimpleGroupId& o) const {
  for (const Identity& a : aliases)
    for (const Identity& b : o.aliases)
      if (a == b) return true;
  return false;
}

void JHMultiset::add(const SimpleGroupId& id, uint32_t mult) {
  for (auto& [eid, m] : entries) {
    if (eid == id) {
      m += mult;
      return;
    }
  }
  entries.emplace_back(id, mult);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

uint32_t JHMultiset::total() const {
  uint32_t t = 0;
  for (const auto& [id, m] : entries) t += m;
  return t;
}

std::vector<SimpleGroupId> JHMultiset::id_set() const {
  std::vector<SimpleGroupId> out;
  for (const auto& [id, m] : entries) out.push_back(id);
  return out;
}

bool JHMultiset::operator==(const JHMultiset& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (!(entries[i].first == o.entries[i].first) || entries[i].second != o.entries[i].second) return false;
  return true;
}

std::string JHMultiset::display() const {
  std::string out;
  for (const auto& [id, m] : entries) {
    if (!out.empty()) out += ",";
    out += id.display();
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace gti
